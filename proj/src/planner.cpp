#include "gdjcpb/planner.hpp"

#include <optional>
#include <stdexcept>

#include "gdjcpb/checked.hpp"

namespace gdjcpb {

const char* to_string(Operation op) {
   switch (op) {
      case Operation::Tangent:
         return "Tangent";
      case Operation::Adjoint:
         return "Adjoint";
      case Operation::Preaccumulation:
         return "Preaccumulation";
   }
   return "?";
}

DpTable::DpTable(const ChainInstance& inst) : q_(inst.length()) {
   entries_.resize(q_ * (q_ + 1) / 2);
   edge_prefix_.resize(q_ + 1, 0);
   for (std::size_t i = 1; i <= q_; ++i) {
      edge_prefix_[i] = checked_add(edge_prefix_[i - 1], inst.factor(i).edges);
   }
}

std::size_t DpTable::index(std::size_t j, std::size_t i) const {
   return j * (j - 1) / 2 + (i - 1);
}

DpTable solve(const ChainInstance& inst) {
   inst.validate();
   const std::size_t q = inst.length();
   DpTable table(inst);

   for (std::size_t j = 1; j <= q; ++j) {
      const ElementalSpec& f = inst.factor(j);
      DpEntry& entry = table.at(j, j);
      entry.split = 0;
      // Dimension ties resolve to Tangent.
      entry.op = f.n <= f.m ? Operation::Tangent : Operation::Adjoint;
      entry.cost = checked_mul(f.edges, f.n <= f.m ? f.n : f.m);
   }

   for (std::size_t len = 2; len <= q; ++len) {
      for (std::size_t i = 1; i + len - 1 <= q; ++i) {
         const std::size_t j = i + len - 1;
         const std::uint64_t m_j = inst.factor(j).m;
         const std::uint64_t n_i = inst.factor(i).n;

         std::optional<DpEntry> best;
         auto consider = [&](std::uint64_t cost, std::size_t k, Operation op) {
            if (!best || cost < best->cost) {
               best = DpEntry {cost, k, op};
            }
         };

         for (std::size_t k = i; k < j; ++k) {
            const std::uint64_t left = table.at(j, k + 1).cost;
            const std::uint64_t right = table.at(k, i).cost;
            const std::uint64_t m_k = inst.factor(k).m;

            // dense product of both subchain Jacobians
            const std::uint64_t product = checked_add(
                 checked_add(left, right),
                 checked_mul(checked_mul(m_j, m_k), n_i));
            consider(product, k, Operation::Preaccumulation);

            // adjoint sweep of factors i..k seeded with F'_{j,k+1}
            const std::uint64_t adjoint = checked_add(
                 left, checked_mul(m_j, table.segment_edges(i, k)));
            consider(adjoint, k, Operation::Adjoint);

            // tangent sweep of factors k+1..j seeded with F'_{k,i}
            const std::uint64_t tangent = checked_add(
                 right, checked_mul(n_i, table.segment_edges(k + 1, j)));
            consider(tangent, k, Operation::Tangent);
         }
         table.at(j, i) = *best;
      }
   }
   return table;
}

namespace {

PlanPtr build_plan(const DpTable& table, std::size_t j, std::size_t i) {
   const DpEntry& entry = table.at(j, i);
   if (j == i) {
      return make_preaccumulate(
           i, entry.op == Operation::Tangent ? Mode::Tangent : Mode::Adjoint);
   }
   const std::size_t k = entry.split;
   switch (entry.op) {
      case Operation::Preaccumulation:
         return make_matmul(build_plan(table, j, k + 1), build_plan(table, k, i));
      case Operation::Adjoint:
         return make_adjoint_sweep(build_plan(table, j, k + 1), i, k);
      case Operation::Tangent:
         return make_tangent_sweep(k + 1, j, build_plan(table, k, i));
   }
   throw std::logic_error("corrupt table entry");
}

}  // namespace

PlanPtr extract_plan(const DpTable& table, const ChainInstance& inst) {
   if (table.length() != inst.length()) {
      throw std::invalid_argument("table does not belong to this instance");
   }
   return build_plan(table, table.length(), 1);
}

std::string format_bracketing(const BracketTree& tree) {
   if (tree.leaf()) {
      return "F" + std::to_string(tree.lo);
   }
   return "(" + format_bracketing(*tree.left) + " . " +
          format_bracketing(*tree.right) + ")";
}

ClassicResult classic_bracketing(const std::vector<FactorShape>& shapes,
                                 const std::vector<std::uint64_t>& preacc_costs) {
   const std::size_t q = shapes.size();
   if (q == 0 || preacc_costs.size() != q) {
      throw std::invalid_argument(
           "classic_bracketing: need one shape and one cost per factor");
   }
   for (std::size_t i = 0; i + 1 < q; ++i) {
      if (shapes[i].m != shapes[i + 1].n) {
         throw std::invalid_argument("classic_bracketing: shapes not conformable");
      }
   }

   // cost[j][i] / split[j][i] over products only; the accumulation costs are
   // additive constants and cannot change the optimal bracketing.
   std::vector<std::vector<std::uint64_t>> cost(
        q + 1, std::vector<std::uint64_t>(q + 1, 0));
   std::vector<std::vector<std::size_t>> split(
        q + 1, std::vector<std::size_t>(q + 1, 0));

   for (std::size_t len = 2; len <= q; ++len) {
      for (std::size_t i = 1; i + len - 1 <= q; ++i) {
         const std::size_t j = i + len - 1;
         std::optional<std::uint64_t> best;
         for (std::size_t k = i; k < j; ++k) {
            const std::uint64_t fuse = checked_mul(
                 checked_mul(static_cast<std::uint64_t>(shapes[j - 1].m),
                             shapes[k - 1].m),
                 shapes[i - 1].n);
            const std::uint64_t total =
                 checked_add(checked_add(cost[j][k + 1], cost[k][i]), fuse);
            if (!best || total < *best) {
               best = total;
               split[j][i] = k;
            }
         }
         cost[j][i] = *best;
      }
   }

   std::uint64_t accumulation = 0;
   for (std::uint64_t c : preacc_costs) {
      accumulation = checked_add(accumulation, c);
   }

   struct Builder {
      const std::vector<std::vector<std::size_t>>& split;

      BracketTree operator()(std::size_t j, std::size_t i) const {
         BracketTree tree;
         tree.lo = i;
         tree.hi = j;
         if (i != j) {
            const std::size_t k = split[j][i];
            tree.split = k;
            tree.left = std::make_unique<BracketTree>((*this)(j, k + 1));
            tree.right = std::make_unique<BracketTree>((*this)(k, i));
         }
         return tree;
      }
   };

   ClassicResult result;
   result.product_cost = cost[q][1];
   result.total = checked_add(accumulation, result.product_cost);
   result.tree = Builder {split}(q, 1);
   return result;
}

BaselineReport homogeneous_costs(const ChainInstance& inst) {
   inst.validate();
   const std::size_t q = inst.length();

   std::uint64_t total_edges = 0;
   std::uint64_t accumulation = 0;
   std::vector<FactorShape> shapes;
   std::vector<std::uint64_t> per_factor;
   shapes.reserve(q);
   per_factor.reserve(q);
   for (std::size_t i = 1; i <= q; ++i) {
      const ElementalSpec& f = inst.factor(i);
      total_edges = checked_add(total_edges, f.edges);
      const std::uint64_t cheapest =
           checked_mul(f.edges, f.n <= f.m ? f.n : f.m);
      accumulation = checked_add(accumulation, cheapest);
      shapes.push_back({f.n, f.m});
      per_factor.push_back(cheapest);
   }

   ClassicResult classic = classic_bracketing(shapes, per_factor);

   BaselineReport report;
   report.tangent_cost = checked_mul(inst.input_dim(), total_edges);
   report.adjoint_cost = checked_mul(inst.output_dim(), total_edges);
   report.preacc_accumulation = accumulation;
   report.preacc_bracketing = classic.product_cost;
   report.bracketing = std::move(classic.tree);
   return report;
}

std::array<std::uint64_t, 8> two_factor_costs(const ChainInstance& inst) {
   inst.validate();
   if (inst.length() != 2) {
      throw std::invalid_argument("two_factor_costs requires a chain of length 2");
   }
   const std::uint64_t n1 = inst.factor(1).n;
   const std::uint64_t m1 = inst.factor(1).m;
   const std::uint64_t e1 = inst.factor(1).edges;
   const std::uint64_t n2 = inst.factor(2).n;
   const std::uint64_t m2 = inst.factor(2).m;
   const std::uint64_t e2 = inst.factor(2).edges;
   const std::uint64_t product = checked_mul(checked_mul(m2, n2), n1);

   std::array<std::uint64_t, 8> costs {};
   costs[0] = checked_add(checked_mul(n1, e1), checked_mul(n1, e2));
   costs[1] = checked_add(checked_mul(m1, e1), checked_mul(n1, e2));
   costs[2] = checked_add(checked_mul(m2, e2), checked_mul(m2, e1));
   costs[3] = checked_add(checked_mul(n2, e2), checked_mul(m2, e1));
   costs[4] = checked_add(
        checked_add(checked_mul(m1, e1), checked_mul(n2, e2)), product);
   costs[5] = checked_add(
        checked_add(checked_mul(m2, e2), checked_mul(m1, e1)), product);
   costs[6] = checked_add(
        checked_add(checked_mul(m2, e2), checked_mul(n1, e1)), product);
   costs[7] = checked_add(
        checked_add(checked_mul(n2, e2), checked_mul(n1, e1)), product);
   return costs;
}

}  // namespace gdjcpb
