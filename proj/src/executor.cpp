#include "gdjcpb/executor.hpp"

#include <stdexcept>

#include "gdjcpb/checked.hpp"
#include "gdjcpb/rng.hpp"

namespace gdjcpb {

SyntheticChain SyntheticChain::make(const ChainInstance& inst,
                                    std::uint64_t seed) {
   inst.validate();
   SplitMix64 rng(seed);

   SyntheticChain chain;
   chain.jacobians.reserve(inst.length());
   chain.edges.reserve(inst.length());
   for (const ElementalSpec& f : inst.factors) {
      Matrix jac(f.m, f.n);
      for (double& v : jac.data) {
         v = rng.symmetric();
      }
      chain.jacobians.push_back(std::move(jac));
      chain.edges.push_back(f.edges);
   }
   return chain;
}

namespace {

//! Execution mirrors the plan grammar: exact products, model-rate charges.
struct Runner {
   const SyntheticChain& chain;
   ExecutionTrace& trace;

   const Matrix& factor(std::size_t i) const {
      return chain.jacobians[i - 1];
   }

   std::uint64_t factor_edges(std::size_t i) const {
      return chain.edges[i - 1];
   }

   void charge(std::string label, std::uint64_t fma) const {
      trace.fma_counted = checked_add(trace.fma_counted, fma);
      trace.breakdown.push_back({std::move(label), fma});
   }

   Matrix run(const EvalPlan& plan) const {
      struct Visitor {
         const Runner& self;
         const EvalPlan& plan;

         Matrix operator()(const Preaccumulate& p) const {
            const Matrix& jac = self.factor(p.factor);
            const std::uint64_t sweeps =
                 p.mode == Mode::Tangent ? jac.cols : jac.rows;
            self.charge((p.mode == Mode::Tangent ? "preaccumulate tangent F"
                                                 : "preaccumulate adjoint F") +
                             std::to_string(p.factor),
                        checked_mul(self.factor_edges(p.factor), sweeps));
            return jac;
         }

         Matrix operator()(const MatMul& p) const {
            Matrix left = self.run(*p.left);
            Matrix right = self.run(*p.right);
            self.charge("matmul (" + std::to_string(p.right->lo) + ".." +
                             std::to_string(p.left->hi) + ")",
                        checked_mul(checked_mul(static_cast<std::uint64_t>(
                                                     left.rows),
                                                left.cols),
                                    right.cols));
            return multiply(left, right);
         }

         Matrix operator()(const TangentSweep& p) const {
            Matrix current = self.run(*p.seed);
            const std::uint64_t width = current.cols;
            for (std::size_t i = p.first; i <= p.last; ++i) {
               self.charge("tangent sweep F" + std::to_string(i),
                           checked_mul(width, self.factor_edges(i)));
               current = multiply(self.factor(i), current);
            }
            return current;
         }

         Matrix operator()(const AdjointSweep& p) const {
            Matrix current = self.run(*p.seed);
            const std::uint64_t height = current.rows;
            for (std::size_t i = p.last + 1; i-- > p.first;) {
               self.charge("adjoint sweep F" + std::to_string(i),
                           checked_mul(height, self.factor_edges(i)));
               current = multiply(current, self.factor(i));
            }
            return current;
         }
      };
      return std::visit(Visitor {*this, plan}, plan.node);
   }
};

}  // namespace

ExecutionTrace execute(const EvalPlan& plan, const SyntheticChain& chain) {
   if (plan.lo != 1 || plan.hi != chain.length()) {
      // partial plans are fine to execute as long as the factors exist
      if (plan.hi > chain.length() || plan.lo == 0) {
         throw std::invalid_argument("plan does not fit the chain");
      }
   }
   ExecutionTrace trace;
   Runner runner {chain, trace};
   trace.result = runner.run(plan);
   return trace;
}

Matrix direct_product(const SyntheticChain& chain) {
   if (chain.length() == 0) {
      throw std::invalid_argument("empty chain");
   }
   Matrix acc = chain.jacobians.front();
   for (std::size_t i = 1; i < chain.length(); ++i) {
      acc = multiply(chain.jacobians[i], acc);
   }
   return acc;
}

}  // namespace gdjcpb
