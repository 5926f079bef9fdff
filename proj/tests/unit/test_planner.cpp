#include <doctest.h>

#include <algorithm>
#include <limits>
#include <vector>

#include "gdjcpb/generator.hpp"
#include "gdjcpb/planner.hpp"
#include "gdjcpb/report.hpp"
#include "helpers.hpp"

using namespace gdjcpb;
using testing::bracket_to_plan;
using testing::funnel_instance;
using testing::make_chain;
using testing::bottleneck_instance;

namespace {

void check_entry(const DpTable& table, std::size_t j, std::size_t i,
                 std::uint64_t cost, std::size_t split, Operation op) {
   CAPTURE(j);
   CAPTURE(i);
   const DpEntry& entry = table.at(j, i);
   CHECK(entry.cost == cost);
   CHECK(entry.split == split);
   CHECK(entry.op == op);
}

//! Exhaustive minimum over all bracketing trees, costed per tree. No
//! memoization: independent of the interval recurrence it checks.
std::uint64_t brute_force_bracketing(const std::vector<FactorShape>& shapes,
                                     const std::vector<std::uint64_t>& costs,
                                     std::size_t i, std::size_t j) {
   if (i == j) {
      return costs[i - 1];
   }
   std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
   for (std::size_t k = i; k < j; ++k) {
      const std::uint64_t fuse = shapes[j - 1].m * shapes[k - 1].m *
                                 shapes[i - 1].n;
      best = std::min(best, brute_force_bracketing(shapes, costs, k + 1, j) +
                                brute_force_bracketing(shapes, costs, i, k) +
                                fuse);
   }
   return best;
}

}  // namespace

TEST_CASE("solve: bottleneck instance table") {
   const DpTable table = solve(bottleneck_instance());
   check_entry(table, 1, 1, 87, 0, Operation::Tangent);
   check_entry(table, 2, 2, 14, 0, Operation::Adjoint);
   check_entry(table, 2, 1, 43, 1, Operation::Adjoint);
   check_entry(table, 3, 3, 7, 0, Operation::Tangent);
   check_entry(table, 3, 2, 27, 2, Operation::Preaccumulation);
   check_entry(table, 3, 1, 56, 2, Operation::Preaccumulation);
   CHECK(table.optimal_cost() == 56);
}

TEST_CASE("solve: funnel-shaped instance prefers pure adjoint") {
   const DpTable table = solve(funnel_instance());
   check_entry(table, 1, 1, 64, 0, Operation::Adjoint);
   check_entry(table, 2, 2, 32, 0, Operation::Adjoint);
   check_entry(table, 2, 1, 64, 1, Operation::Adjoint);
   check_entry(table, 3, 3, 16, 0, Operation::Adjoint);
   check_entry(table, 3, 2, 32, 2, Operation::Adjoint);
   check_entry(table, 3, 1, 48, 1, Operation::Adjoint);
   CHECK(table.optimal_cost() == 48);
}

TEST_CASE("solve: single factor takes the cheaper sweep direction") {
   const DpTable table = solve(make_chain({{5, 3, 10}}));
   check_entry(table, 1, 1, 30, 0, Operation::Adjoint);
   CHECK(solve(make_chain({{3, 5, 10}})).at(1, 1).op == Operation::Tangent);
   // square factors resolve the tie to Tangent
   CHECK(solve(make_chain({{4, 4, 9}})).at(1, 1).op == Operation::Tangent);
}

TEST_CASE("solve: two-factor example with dense-product optimum") {
   const DpTable table = solve(make_chain({{4, 2, 100}, {2, 4, 100}}));
   check_entry(table, 2, 1, 432, 1, Operation::Preaccumulation);
}

TEST_CASE("two_factor_costs: the five pinned configurations") {
   struct Config {
      ChainInstance inst;
      std::array<std::uint64_t, 8> expected;
      std::uint64_t optimum;
   };
   const Config configs[] = {
        {make_chain({{2, 4, 100}, {4, 8, 100}}),
         {400, 600, 1600, 1200, 864, 1264, 1064, 664},
         400},
        {make_chain({{4, 2, 100}, {2, 32, 100}}),
         {800, 600, 6400, 3400, 656, 3656, 3856, 856},
         600},
        {make_chain({{8, 4, 100}, {4, 2, 100}}),
         {1600, 1200, 400, 600, 864, 664, 1064, 1264},
         400},
        {make_chain({{32, 2, 100}, {2, 4, 100}}),
         {6400, 3400, 800, 600, 656, 856, 3856, 3656},
         600},
        {make_chain({{4, 2, 100}, {2, 4, 100}}),
         {800, 600, 800, 600, 432, 632, 832, 632},
         432},
   };
   for (std::size_t c = 0; c < 5; ++c) {
      CAPTURE(c);
      const auto costs = two_factor_costs(configs[c].inst);
      for (std::size_t b = 0; b < 8; ++b) {
         CAPTURE(b);
         CHECK(costs[b] == configs[c].expected[b]);
      }
      CHECK(solve(configs[c].inst).optimal_cost() == configs[c].optimum);
      CHECK(*std::min_element(costs.begin(), costs.end()) ==
            configs[c].optimum);
   }
}

TEST_CASE("two_factor_costs: optimum always matches the eight-way minimum") {
   for (std::uint64_t seed = 0; seed < 400; ++seed) {
      const ChainInstance inst = generate({2, 1 + seed % 12, seed, 5});
      const auto costs = two_factor_costs(inst);
      const std::uint64_t optimum = solve(inst).optimal_cost();
      CAPTURE(seed);
      CHECK(optimum == *std::min_element(costs.begin(), costs.end()));
      // homogeneous-preaccumulation variants never beat the first five
      CHECK(*std::min_element(costs.begin(), costs.end()) ==
            *std::min_element(costs.begin(), costs.begin() + 5));
   }
}

TEST_CASE("two_factor_costs: rejects other lengths") {
   CHECK_THROWS_AS(two_factor_costs(make_chain({{1, 1, 1}})),
                   std::invalid_argument);
}

TEST_CASE("homogeneous_costs: pinned baselines") {
   SUBCASE("three-factor sample") {
      const BaselineReport report = homogeneous_costs(bottleneck_instance());
      CHECK(report.tangent_cost == 150);
      CHECK(report.adjoint_cost == 100);
      CHECK(report.preacc_accumulation == 108);
      CHECK(report.preacc_bracketing == 15);
      CHECK(report.preacc_total() == 123);
      CHECK(format_bracketing(report.bracketing) == "(F3 . (F2 . F1))");
   }
   SUBCASE("funnel instance") {
      const BaselineReport report = homogeneous_costs(funnel_instance());
      CHECK(report.tangent_cost == 384);
      CHECK(report.adjoint_cost == 48);
      CHECK(report.preacc_accumulation == 112);
      CHECK(report.preacc_bracketing == 40);
      CHECK(report.preacc_total() == 152);
   }
   SUBCASE("single trivial factor") {
      const BaselineReport report = homogeneous_costs(make_chain({{1, 1, 1}}));
      CHECK(report.tangent_cost == 1);
      CHECK(report.adjoint_cost == 1);
      CHECK(report.preacc_accumulation == 1);
      CHECK(report.preacc_bracketing == 0);
   }
}

TEST_CASE("classic_bracketing: four-factor example with given costs") {
   // factors F_1..F_4 as (n, m); per-factor accumulation costs supplied
   const std::vector<FactorShape> shapes {{3, 5}, {5, 4}, {4, 1}, {1, 4}};
   const std::vector<std::uint64_t> costs {84, 192, 5, 21};
   const ClassicResult result = classic_bracketing(shapes, costs);
   CHECK(result.total == 349);
   CHECK(result.product_cost == 47);
   CHECK(format_bracketing(result.tree) == "(F4 . ((F3 . F2) . F1))");
}

TEST_CASE("classic_bracketing: single factor") {
   const ClassicResult result = classic_bracketing({{7, 2}}, {33});
   CHECK(result.total == 33);
   CHECK(result.product_cost == 0);
   CHECK(format_bracketing(result.tree) == "F1");
}

TEST_CASE("classic_bracketing: agrees with whole-tree brute force") {
   for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const std::size_t q = 1 + seed % 6;
      const ChainInstance inst = generate({q, 7, seed, 5});
      std::vector<FactorShape> shapes;
      std::vector<std::uint64_t> costs;
      for (const ElementalSpec& f : inst.factors) {
         shapes.push_back({f.n, f.m});
         costs.push_back(f.edges % 97 + 1);
      }
      CAPTURE(seed);
      CHECK(classic_bracketing(shapes, costs).total ==
            brute_force_bracketing(shapes, costs, 1, q));
   }
}

TEST_CASE("classic_bracketing: input validation") {
   CHECK_THROWS_AS(classic_bracketing({}, {}), std::invalid_argument);
   CHECK_THROWS_AS(classic_bracketing({{2, 3}}, {1, 2}), std::invalid_argument);
   CHECK_THROWS_AS(classic_bracketing({{2, 3}, {4, 2}}, {1, 2}),
                   std::invalid_argument);
}

TEST_CASE("extract_plan: reproduces the recorded strategy") {
   const ChainInstance inst = bottleneck_instance();
   const DpTable table = solve(inst);
   const PlanPtr plan = extract_plan(table, inst);
   CHECK(plan_cost(*plan, inst) == 56);
   CHECK(format_plan(*plan) == "((dF3 . I) . ((I . bF2) . bF1))");
   CHECK(plan_rows(*plan, inst) == 2);
   CHECK(plan_cols(*plan, inst) == 3);
}

TEST_CASE("extract_plan: single factor is a bare leaf") {
   const ChainInstance inst = make_chain({{5, 3, 10}});
   const PlanPtr plan = extract_plan(solve(inst), inst);
   CHECK(format_plan(*plan) == "(I . bF1)");
   CHECK(plan_cost(*plan, inst) == 30);
}

TEST_CASE("extract_plan: plan cost equals the table optimum") {
   for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const ChainInstance inst =
           generate({1 + seed % 14, 1 + seed % 10, seed, 5});
      const DpTable table = solve(inst);
      const PlanPtr plan = extract_plan(table, inst);
      CAPTURE(seed);
      CHECK(plan_cost(*plan, inst) == table.optimal_cost());
   }
}

TEST_CASE("solve: every entry undercuts all recurrence candidates") {
   for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const ChainInstance inst = generate({2 + seed % 9, 1 + seed % 8, seed, 5});
      const DpTable table = solve(inst);
      const std::size_t q = inst.length();
      for (std::size_t i = 1; i <= q; ++i) {
         for (std::size_t j = i; j <= q; ++j) {
            const std::uint64_t entry = table.at(j, i).cost;
            if (i == j) {
               const ElementalSpec& f = inst.factor(i);
               CHECK(entry == f.edges * std::min(f.n, f.m));
               continue;
            }
            for (std::size_t k = i; k < j; ++k) {
               const std::uint64_t left = table.at(j, k + 1).cost;
               const std::uint64_t right = table.at(k, i).cost;
               CAPTURE(seed);
               CHECK(entry <= left + right + inst.factor(j).m *
                                                  inst.factor(k).m *
                                                  inst.factor(i).n);
               CHECK(entry <= left + inst.factor(j).m *
                                          table.segment_edges(i, k));
               CHECK(entry <= right + inst.factor(i).n *
                                           table.segment_edges(k + 1, j));
            }
         }
      }
   }
}

TEST_CASE("solve: optimum dominates every homogeneous strategy") {
   for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const ChainInstance inst =
           generate({1 + seed % 14, 1 + seed % 10, seed, 5});
      const std::uint64_t optimum = solve(inst).optimal_cost();
      const BaselineReport report = homogeneous_costs(inst);
      CAPTURE(seed);
      CHECK(optimum <= report.tangent_cost);
      CHECK(optimum <= report.adjoint_cost);
      CHECK(optimum <= report.preacc_total());
   }
}

TEST_CASE("baselines are representable inside the plan grammar") {
   for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const ChainInstance inst =
           generate({2 + seed % 9, 1 + seed % 10, seed, 5});
      const std::size_t q = inst.length();
      const BaselineReport report = homogeneous_costs(inst);
      CAPTURE(seed);

      const PlanPtr tangent_plan = make_tangent_sweep(
           2, q, make_preaccumulate(1, Mode::Tangent));
      CHECK(plan_cost(*tangent_plan, inst) == report.tangent_cost);

      const PlanPtr adjoint_plan = make_adjoint_sweep(
           make_preaccumulate(q, Mode::Adjoint), 1, q - 1);
      CHECK(plan_cost(*adjoint_plan, inst) == report.adjoint_cost);

      const PlanPtr preacc_plan = bracket_to_plan(report.bracketing, inst);
      CHECK(plan_cost(*preacc_plan, inst) == report.preacc_total());
   }
}

TEST_CASE("solve: cost overflow is reported, not wrapped") {
   const std::size_t big = std::size_t {1} << 32;
   ChainInstance inst;
   inst.factors = {{big, big, big}};
   CHECK_THROWS_AS(solve(inst), std::overflow_error);
}

TEST_CASE("report: byte-exact sample output") {
   CHECK(solve_report(bottleneck_instance()) ==
         "Dynamic Programming Table:\n"
         "fma_{1,1}=87; Split=0; Operation=Tangent\n"
         "fma_{2,2}=14; Split=0; Operation=Adjoint\n"
         "fma_{2,1}=43; Split=1; Operation=Adjoint\n"
         "fma_{3,3}=7; Split=0; Operation=Tangent\n"
         "fma_{3,2}=27; Split=2; Operation=Preaccumulation\n"
         "fma_{3,1}=56; Split=2; Operation=Preaccumulation\n"
         "\n"
         "Optimal Cost=56\n"
         "\n"
         "Cost of homogeneous tangent mode=150\n"
         "Cost of homogeneous adjoint mode=100\n"
         "Cost of optimal homogeneous preaccumulation=108+15=123\n");
}

TEST_CASE("report: single-factor output") {
   CHECK(solve_report(parse_instance("1\n1 1 1\n")) ==
         "Dynamic Programming Table:\n"
         "fma_{1,1}=1; Split=0; Operation=Tangent\n"
         "\n"
         "Optimal Cost=1\n"
         "\n"
         "Cost of homogeneous tangent mode=1\n"
         "Cost of homogeneous adjoint mode=1\n"
         "Cost of optimal homogeneous preaccumulation=1+0=1\n");
}

TEST_CASE("report: entries are ordered by j ascending, i descending") {
   const ChainInstance inst = generate({4, 5, 11, 5});
   const std::string text = format_dp_table(solve(inst));
   const char* expected[] = {"fma_{1,1}=", "fma_{2,2}=", "fma_{2,1}=",
                             "fma_{3,3}=", "fma_{3,2}=", "fma_{3,1}=",
                             "fma_{4,4}=", "fma_{4,3}=", "fma_{4,2}=",
                             "fma_{4,1}="};
   std::size_t pos = 0;
   for (const char* prefix : expected) {
      const std::size_t found = text.find(prefix, pos);
      CAPTURE(prefix);
      REQUIRE(found != std::string::npos);
      pos = found;
   }
}
