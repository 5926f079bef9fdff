#ifndef GDJCPB_TESTS_HELPERS_HPP_
#define GDJCPB_TESTS_HELPERS_HPP_

#include <initializer_list>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/plan.hpp"
#include "gdjcpb/planner.hpp"

namespace gdjcpb::testing {

//! Factors given as (n, m, edges) triples, first factor first.
inline ChainInstance make_chain(
     std::initializer_list<ElementalSpec> factors) {
   ChainInstance inst;
   inst.factors.assign(factors);
   inst.validate();
   return inst;
}

//! Two pinned instances used all over the suite: one squeezing through a
//! one-dimensional bottleneck, one funneling monotonically from 8 to 1.
inline ChainInstance bottleneck_instance() {
   return make_chain({{3, 3, 29}, {3, 1, 14}, {1, 2, 7}});
}

inline ChainInstance funnel_instance() {
   return make_chain({{8, 4, 16}, {4, 2, 16}, {2, 1, 16}});
}

//! Realizes the homogeneous-preaccumulation baseline as a plan: every
//! factor becomes a cheapest-mode leaf, every tree node a dense product.
inline PlanPtr bracket_to_plan(const BracketTree& tree,
                               const ChainInstance& inst) {
   if (tree.leaf()) {
      const ElementalSpec& f = inst.factor(tree.lo);
      return make_preaccumulate(tree.lo,
                                f.n <= f.m ? Mode::Tangent : Mode::Adjoint);
   }
   return make_matmul(bracket_to_plan(*tree.left, inst),
                      bracket_to_plan(*tree.right, inst));
}

}  // namespace gdjcpb::testing

#endif  // GDJCPB_TESTS_HELPERS_HPP_
