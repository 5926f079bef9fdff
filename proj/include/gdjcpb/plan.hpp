#ifndef GDJCPB_PLAN_HPP_
#define GDJCPB_PLAN_HPP_

#include <cstdint>
#include <memory>
#include <string>
#include <variant>

#include "gdjcpb/chain.hpp"

namespace gdjcpb {

//! Sweep direction of a matrix-free derivative propagation.
enum class Mode { Tangent, Adjoint };

struct EvalPlan;
using PlanPtr = std::shared_ptr<const EvalPlan>;

//! Explicitly form F'_i by sweeping the identity through its DAG.
//! Costs edges_i * n_i in tangent mode, edges_i * m_i in adjoint mode.
struct Preaccumulate {
   std::size_t factor;
   Mode mode;
};

//! Dense product of two accumulated subchain Jacobians.
//! left covers (k+1..j), right covers (i..k); costs m_j * m_k * n_i.
struct MatMul {
   PlanPtr left;
   PlanPtr right;
};

//! Tangent propagation of the seed through factors first..last in order:
//! computes F._last * ... * F._first * seed at n_i fma per swept edge,
//! where n_i is the column count of the seed.
struct TangentSweep {
   std::size_t first;
   std::size_t last;
   PlanPtr seed;
};

//! Adjoint propagation of the seed through factors last..first in reverse:
//! computes seed * F-_last * ... * F-_first at m_j fma per swept edge,
//! where m_j is the row count of the seed.
struct AdjointSweep {
   PlanPtr seed;
   std::size_t first;
   std::size_t last;
};

//! One node of an evaluation strategy. A plan covering factors [lo..hi]
//! yields the m_hi x n_lo subchain Jacobian.
struct EvalPlan {
   std::variant<Preaccumulate, MatMul, TangentSweep, AdjointSweep> node;
   std::size_t lo {0};
   std::size_t hi {0};
};

PlanPtr make_preaccumulate(std::size_t factor, Mode mode);
PlanPtr make_matmul(PlanPtr left, PlanPtr right);
PlanPtr make_tangent_sweep(std::size_t first, std::size_t last, PlanPtr seed);
PlanPtr make_adjoint_sweep(PlanPtr seed, std::size_t first, std::size_t last);

//! Model cost of the plan in fma, from the per-node charges above.
//! Throws std::overflow_error instead of wrapping.
std::uint64_t plan_cost(const EvalPlan& plan, const ChainInstance& inst);

//! Rows/columns of the matrix a plan yields.
std::size_t plan_rows(const EvalPlan& plan, const ChainInstance& inst);
std::size_t plan_cols(const EvalPlan& plan, const ChainInstance& inst);

//! Renders the strategy as a formula, e.g. the preaccumulated factor F'_3
//! obtained in tangent mode prints as (dF3 . I) and an adjoint sweep of
//! factors 2..1 seeded with X prints as ((X . bF2) . bF1).
std::string format_plan(const EvalPlan& plan);

}  // namespace gdjcpb

#endif  // GDJCPB_PLAN_HPP_
