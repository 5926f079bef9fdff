#include "gdjcpb/oracle.hpp"

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "gdjcpb/checked.hpp"

namespace gdjcpb {

namespace {

//! Non-owning callable reference; keeps the hot enumeration loop free of
//! std::function allocations. The referee must outlive the call, which the
//! nested-lambda structure below guarantees.
class Sink {
 public:
   template<typename F>
   Sink(F&& f)  // NOLINT: implicit by design
       : ctx_(const_cast<void*>(static_cast<const void*>(&f))),
         fn_([](void* ctx, std::uint64_t cost) {
            (*static_cast<std::remove_reference_t<F>*>(ctx))(cost);
         }) {}

   void operator()(std::uint64_t cost) const {
      fn_(ctx_, cost);
   }

 private:
   void* ctx_;
   void (*fn_)(void*, std::uint64_t);
};

//! Streams every plan of a segment to a sink as (cost, token path). Complete
//! plans are encoded as preorder token sequences: a leaf emits 0 (tangent)
//! or 1 (adjoint); a composite emits (k - i) * 3 + t with t = 0 for the
//! dense product, 1 for the adjoint sweep, 2 for the tangent sweep. The
//! token path on the stack at emission time is the full encoding of the
//! plan, so only improvements ever allocate.
class Enumerator {
 public:
   Enumerator(const ChainInstance& inst, std::uint64_t limit)
       : inst_(inst), limit_(limit) {
      const std::size_t q = inst.length();
      edge_prefix_.resize(q + 1, 0);
      for (std::size_t i = 1; i <= q; ++i) {
         edge_prefix_[i] = checked_add(edge_prefix_[i - 1], inst.factor(i).edges);
      }
   }

   OracleResult run() {
      enumerate(1, inst_.length(), [this](std::uint64_t cost) {
         if (visited_ == limit_) {
            stopped_ = true;
            return;
         }
         ++visited_;
         if (cost < best_cost_) {
            best_cost_ = cost;
            best_path_ = path_;
         }
      });

      OracleResult result;
      result.cost = best_cost_;
      result.plans_visited = visited_;
      result.exact = !stopped_;
      std::size_t pos = 0;
      result.witness = decode(pos, 1, inst_.length());
      return result;
   }

 private:
   std::uint64_t segment_edges(std::size_t i, std::size_t j) const {
      return edge_prefix_[j] - edge_prefix_[i - 1];
   }

   void enumerate(std::size_t i, std::size_t j, Sink emit) {
      if (stopped_) {
         return;
      }
      if (i == j) {
         const ElementalSpec& f = inst_.factor(i);
         path_.push_back(0);
         emit(checked_mul(f.edges, f.n));
         path_.back() = 1;
         if (!stopped_) {
            emit(checked_mul(f.edges, f.m));
         }
         path_.pop_back();
         return;
      }

      const std::uint64_t m_j = inst_.factor(j).m;
      const std::uint64_t n_i = inst_.factor(i).n;
      for (std::size_t k = i; k < j && !stopped_; ++k) {
         const std::uint64_t token = (k - i) * 3;
         const std::uint64_t product = checked_mul(
              checked_mul(m_j, static_cast<std::uint64_t>(inst_.factor(k).m)),
              n_i);

         path_.push_back(static_cast<std::uint32_t>(token));
         enumerate(k + 1, j, [&](std::uint64_t left) {
            enumerate(i, k, [&](std::uint64_t right) {
               emit(checked_add(checked_add(left, right), product));
            });
         });
         path_.pop_back();

         const std::uint64_t adjoint_swept =
              checked_mul(m_j, segment_edges(i, k));
         path_.push_back(static_cast<std::uint32_t>(token + 1));
         enumerate(k + 1, j, [&](std::uint64_t left) {
            emit(checked_add(left, adjoint_swept));
         });
         path_.pop_back();

         const std::uint64_t tangent_swept =
              checked_mul(n_i, segment_edges(k + 1, j));
         path_.push_back(static_cast<std::uint32_t>(token + 2));
         enumerate(i, k, [&](std::uint64_t right) {
            emit(checked_add(right, tangent_swept));
         });
         path_.pop_back();
      }
   }

   PlanPtr decode(std::size_t& pos, std::size_t i, std::size_t j) const {
      const std::uint32_t token = best_path_.at(pos++);
      if (i == j) {
         return make_preaccumulate(i, token == 0 ? Mode::Tangent : Mode::Adjoint);
      }
      const std::size_t k = i + token / 3;
      switch (token % 3) {
         case 0: {
            PlanPtr left = decode(pos, k + 1, j);
            PlanPtr right = decode(pos, i, k);
            return make_matmul(std::move(left), std::move(right));
         }
         case 1:
            return make_adjoint_sweep(decode(pos, k + 1, j), i, k);
         default:
            return make_tangent_sweep(k + 1, j, decode(pos, i, k));
      }
   }

   const ChainInstance& inst_;
   std::uint64_t limit_;
   std::vector<std::uint64_t> edge_prefix_;
   std::vector<std::uint32_t> path_;
   std::vector<std::uint32_t> best_path_;
   std::uint64_t best_cost_ {std::numeric_limits<std::uint64_t>::max()};
   std::uint64_t visited_ {0};
   bool stopped_ {false};
};

}  // namespace

OracleResult enumerate_optimum(const ChainInstance& inst, std::uint64_t limit) {
   inst.validate();
   if (limit == 0) {
      throw std::invalid_argument("enumerate_optimum: limit must be positive");
   }
   return Enumerator(inst, limit).run();
}

}  // namespace gdjcpb
