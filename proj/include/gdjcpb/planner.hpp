#ifndef GDJCPB_PLANNER_HPP_
#define GDJCPB_PLANNER_HPP_

#include <array>
#include <cstdint>
#include <memory>
#include <vector>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/plan.hpp"

namespace gdjcpb {

//! Top-level action recorded per table entry. On the diagonal it names the
//! preaccumulation sweep mode; off the diagonal it names which recurrence
//! option attained the minimum: Preaccumulation for the dense product of the
//! two subchain Jacobians, Adjoint for the sweep seeded from the left
//! subchain, Tangent for the sweep seeded from the right subchain.
enum class Operation { Tangent, Adjoint, Preaccumulation };

const char* to_string(Operation op);

struct DpEntry {
   //! fma_{j,i}: minimal cost of accumulating the subchain Jacobian F'_{j,i}.
   std::uint64_t cost {0};
   //! Split position k with i <= k < j; 0 on the diagonal.
   std::size_t split {0};
   Operation op {Operation::Tangent};
};

//! Triangular table of all q(q+1)/2 subchain solutions, plus edge prefix
//! sums for O(1) segment queries.
class DpTable {
 public:
   explicit DpTable(const ChainInstance& inst);

   std::size_t length() const {
      return q_;
   }

   const DpEntry& at(std::size_t j, std::size_t i) const {
      return entries_[index(j, i)];
   }

   DpEntry& at(std::size_t j, std::size_t i) {
      return entries_[index(j, i)];
   }

   //! Sum of edges_i .. edges_j (1-based, inclusive).
   std::uint64_t segment_edges(std::size_t i, std::size_t j) const {
      return edge_prefix_[j] - edge_prefix_[i - 1];
   }

   std::uint64_t total_edges() const {
      return edge_prefix_[q_];
   }

   std::uint64_t optimal_cost() const {
      return at(q_, 1).cost;
   }

 private:
   std::size_t index(std::size_t j, std::size_t i) const;

   std::size_t q_;
   std::vector<DpEntry> entries_;
   std::vector<std::uint64_t> edge_prefix_;
};

//! Fills the table bottom-up by subchain length. Diagonal entries cost
//! edges_j * min(n_j, m_j); each off-diagonal entry minimizes, over all
//! splits i <= k < j, the dense product of both subchain Jacobians, the
//! adjoint sweep of factors i..k seeded from the left subchain, and the
//! tangent sweep of factors k+1..j seeded from the right subchain.
//! Ties resolve to the smallest k, then product/adjoint/tangent order;
//! dimension ties on the diagonal resolve to Tangent.
DpTable solve(const ChainInstance& inst);

//! Rebuilds the optimal strategy recorded in the table. The plan for (q,1)
//! reproduces the table's optimal cost exactly under plan_cost.
PlanPtr extract_plan(const DpTable& table, const ChainInstance& inst);

//! Classical bracketing tree over preaccumulated factors: a leaf is one
//! factor, an internal node multiplies left (factors split+1..hi) with
//! right (factors lo..split).
struct BracketTree {
   std::size_t lo {0};
   std::size_t hi {0};
   std::size_t split {0};
   std::unique_ptr<BracketTree> left;
   std::unique_ptr<BracketTree> right;

   bool leaf() const {
      return lo == hi;
   }
};

//! e.g. "(F4 . ((F3 . F2) . F1))"
std::string format_bracketing(const BracketTree& tree);

struct FactorShape {
   std::size_t n {0};
   std::size_t m {0};
};

struct ClassicResult {
   //! Sum of the given per-factor accumulation costs and the optimal
   //! dense-product cost of the bracketing.
   std::uint64_t total {0};
   std::uint64_t product_cost {0};
   BracketTree tree;
};

//! Optimal bracketing of a chain of explicitly available factors, by the
//! classical interval recurrence with product charge m_j * m_k * n_i.
//! preacc_costs[i] is the fma count for obtaining factor i+1; pass the
//! externally known values or edges*min(n,m) for the sweep-based model.
ClassicResult classic_bracketing(const std::vector<FactorShape>& shapes,
                                 const std::vector<std::uint64_t>& preacc_costs);

struct BaselineReport {
   //! n_1 * sum of all edges: one tangent sweep of the whole chain.
   std::uint64_t tangent_cost {0};
   //! m_q * sum of all edges: one adjoint sweep of the whole chain.
   std::uint64_t adjoint_cost {0};
   //! sum of edges_i * min(n_i, m_i): cheapest sweep per factor.
   std::uint64_t preacc_accumulation {0};
   //! Optimal classical bracketing of the preaccumulated factors.
   std::uint64_t preacc_bracketing {0};
   BracketTree bracketing;

   std::uint64_t preacc_total() const {
      return preacc_accumulation + preacc_bracketing;
   }
};

BaselineReport homogeneous_costs(const ChainInstance& inst);

//! The eight strategies of a two-factor chain, in the canonical order:
//!   [0] tangent sweep of both factors
//!   [1] adjoint-preaccumulate F'_1, tangent sweep of F_2
//!   [2] adjoint sweep of both factors
//!   [3] tangent-preaccumulate F'_2, adjoint sweep of F_1
//!   [4] preaccumulate F'_1 adjoint + F'_2 tangent, dense product
//!   [5] preaccumulate both adjoint, dense product
//!   [6] preaccumulate F'_1 tangent + F'_2 adjoint, dense product
//!   [7] preaccumulate both tangent, dense product
//! Requires q == 2.
std::array<std::uint64_t, 8> two_factor_costs(const ChainInstance& inst);

}  // namespace gdjcpb

#endif  // GDJCPB_PLANNER_HPP_
