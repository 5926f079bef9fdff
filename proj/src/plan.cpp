#include "gdjcpb/plan.hpp"

#include <stdexcept>

#include "gdjcpb/checked.hpp"

namespace gdjcpb {

PlanPtr make_preaccumulate(std::size_t factor, Mode mode) {
   auto plan = std::make_shared<EvalPlan>();
   plan->node = Preaccumulate {factor, mode};
   plan->lo = factor;
   plan->hi = factor;
   return plan;
}

PlanPtr make_matmul(PlanPtr left, PlanPtr right) {
   if (right->hi + 1 != left->lo) {
      throw std::invalid_argument("matmul operands must cover adjacent segments");
   }
   auto plan = std::make_shared<EvalPlan>();
   plan->lo = right->lo;
   plan->hi = left->hi;
   plan->node = MatMul {std::move(left), std::move(right)};
   return plan;
}

PlanPtr make_tangent_sweep(std::size_t first, std::size_t last, PlanPtr seed) {
   if (first > last || seed->hi + 1 != first) {
      throw std::invalid_argument("tangent sweep segment must follow its seed");
   }
   auto plan = std::make_shared<EvalPlan>();
   plan->lo = seed->lo;
   plan->hi = last;
   plan->node = TangentSweep {first, last, std::move(seed)};
   return plan;
}

PlanPtr make_adjoint_sweep(PlanPtr seed, std::size_t first, std::size_t last) {
   if (first > last || last + 1 != seed->lo) {
      throw std::invalid_argument("adjoint sweep segment must precede its seed");
   }
   auto plan = std::make_shared<EvalPlan>();
   plan->lo = first;
   plan->hi = seed->hi;
   plan->node = AdjointSweep {std::move(seed), first, last};
   return plan;
}

std::size_t plan_rows(const EvalPlan& plan, const ChainInstance& inst) {
   return inst.factor(plan.hi).m;
}

std::size_t plan_cols(const EvalPlan& plan, const ChainInstance& inst) {
   return inst.factor(plan.lo).n;
}

namespace {

std::uint64_t segment_edges(const ChainInstance& inst, std::size_t first,
                            std::size_t last) {
   std::uint64_t sum = 0;
   for (std::size_t i = first; i <= last; ++i) {
      sum = checked_add(sum, inst.factor(i).edges);
   }
   return sum;
}

}  // namespace

std::uint64_t plan_cost(const EvalPlan& plan, const ChainInstance& inst) {
   struct Visitor {
      const ChainInstance& inst;
      const EvalPlan& self;

      std::uint64_t operator()(const Preaccumulate& p) const {
         const ElementalSpec& f = inst.factor(p.factor);
         const std::size_t sweeps = p.mode == Mode::Tangent ? f.n : f.m;
         return checked_mul(f.edges, sweeps);
      }

      std::uint64_t operator()(const MatMul& p) const {
         const std::uint64_t rows = plan_rows(*p.left, inst);
         const std::uint64_t inner = plan_rows(*p.right, inst);
         const std::uint64_t cols = plan_cols(*p.right, inst);
         std::uint64_t cost = checked_mul(checked_mul(rows, inner), cols);
         cost = checked_add(cost, plan_cost(*p.left, inst));
         return checked_add(cost, plan_cost(*p.right, inst));
      }

      std::uint64_t operator()(const TangentSweep& p) const {
         const std::uint64_t width = plan_cols(*p.seed, inst);
         const std::uint64_t swept =
              checked_mul(width, segment_edges(inst, p.first, p.last));
         return checked_add(swept, plan_cost(*p.seed, inst));
      }

      std::uint64_t operator()(const AdjointSweep& p) const {
         const std::uint64_t height = plan_rows(*p.seed, inst);
         const std::uint64_t swept =
              checked_mul(height, segment_edges(inst, p.first, p.last));
         return checked_add(swept, plan_cost(*p.seed, inst));
      }
   };
   return std::visit(Visitor {inst, plan}, plan.node);
}

namespace {

void format_into(const EvalPlan& plan, std::string& out) {
   struct Visitor {
      std::string& out;

      void operator()(const Preaccumulate& p) const {
         if (p.mode == Mode::Tangent) {
            out += "(dF" + std::to_string(p.factor) + " . I)";
         } else {
            out += "(I . bF" + std::to_string(p.factor) + ")";
         }
      }

      void operator()(const MatMul& p) const {
         out.push_back('(');
         format_into(*p.left, out);
         out += " . ";
         format_into(*p.right, out);
         out.push_back(')');
      }

      void operator()(const TangentSweep& p) const {
         out.push_back('(');
         for (std::size_t i = p.last + 1; i-- > p.first;) {
            out += "dF" + std::to_string(i) + " . ";
         }
         format_into(*p.seed, out);
         out.push_back(')');
      }

      void operator()(const AdjointSweep& p) const {
         out.push_back('(');
         format_into(*p.seed, out);
         for (std::size_t i = p.last + 1; i-- > p.first;) {
            out += " . bF" + std::to_string(i);
         }
         out.push_back(')');
      }
   };
   std::visit(Visitor {out}, plan.node);
}

}  // namespace

std::string format_plan(const EvalPlan& plan) {
   std::string out;
   format_into(plan, out);
   return out;
}

}  // namespace gdjcpb
