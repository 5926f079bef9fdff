#ifndef GDJCPB_ORACLE_HPP_
#define GDJCPB_ORACLE_HPP_

#include <cstdint>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/plan.hpp"

namespace gdjcpb {

struct OracleResult {
   //! Minimum cost over every visited plan.
   std::uint64_t cost {0};
   //! One plan attaining it.
   PlanPtr witness;
   //! Number of complete plans enumerated for the whole chain.
   std::uint64_t plans_visited {0};
   //! False when the budget ran out before the plan space was exhausted;
   //! cost/witness then describe the best plan seen so far only.
   bool exact {true};
};

//! Exhaustively enumerates the full strategy space: every segment is either
//! a preaccumulation leaf (tangent or adjoint) or, for every split, a dense
//! product of two sub-plans, an adjoint sweep seeded by a left sub-plan, or
//! a tangent sweep seeded by a right sub-plan. Each complete plan is costed
//! independently; no subproblem solutions are shared or tabulated, so this
//! is ground truth for the dynamic program rather than a restatement of it.
//! Plan counts grow fast: q <= 8 stays within the default budget.
OracleResult enumerate_optimum(const ChainInstance& inst,
                               std::uint64_t limit = 10'000'000);

}  // namespace gdjcpb

#endif  // GDJCPB_ORACLE_HPP_
