#ifndef GDJCPB_EXECUTOR_HPP_
#define GDJCPB_EXECUTOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/matrix.hpp"
#include "gdjcpb/plan.hpp"

namespace gdjcpb {

//! Concrete dense stand-ins for the factor Jacobians of an instance,
//! entries uniform on [-1, 1), reproducible per seed.
struct SyntheticChain {
   //! jacobians[i-1] is F'_i, an m_i x n_i matrix.
   std::vector<Matrix> jacobians;
   std::vector<std::uint64_t> edges;

   static SyntheticChain make(const ChainInstance& inst, std::uint64_t seed);

   std::size_t length() const {
      return jacobians.size();
   }
};

struct NodeCost {
   std::string node;
   std::uint64_t fma {0};
};

struct ExecutionTrace {
   Matrix result;
   std::uint64_t fma_counted {0};
   std::vector<NodeCost> breakdown;
};

//! Runs the plan on the synthetic factors. Sweeps are executed as exact
//! matrix products but charged at the model rate (edges per column for
//! tangent, edges per row for adjoint); dense products charge rows*inner*cols.
//! The counted total equals plan_cost(plan, inst) by construction of the
//! charges, and the result equals the plain chain product up to roundoff.
ExecutionTrace execute(const EvalPlan& plan, const SyntheticChain& chain);

//! Left-to-right accumulation F'_q * ... * F'_1; the numeric reference.
Matrix direct_product(const SyntheticChain& chain);

}  // namespace gdjcpb

#endif  // GDJCPB_EXECUTOR_HPP_
