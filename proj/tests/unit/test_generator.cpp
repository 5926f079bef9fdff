#include <doctest.h>

#include <set>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/generator.hpp"

using namespace gdjcpb;

TEST_CASE("generate: identical configs give identical instances") {
   const GeneratorConfig cfg {7, 9, 42, 5};
   CHECK(generate(cfg) == generate(cfg));
   CHECK(serialize_instance(generate(cfg)) == serialize_instance(generate(cfg)));
}

TEST_CASE("generate: respects length, bounds, and chaining") {
   for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const std::size_t len = 1 + seed % 17;
      const std::size_t max_mn = 1 + seed % 11;
      const ChainInstance inst = generate({len, max_mn, seed, 5});
      REQUIRE(inst.length() == len);
      inst.validate();
      for (const ElementalSpec& f : inst.factors) {
         CHECK(f.n >= 1);
         CHECK(f.n <= max_mn);
         CHECK(f.m >= 1);
         CHECK(f.m <= max_mn);
         CHECK(f.edges >= f.n * f.m);
         CHECK(f.edges <= 5 * f.n * f.m);
      }
   }
}

TEST_CASE("generate: single factor with unit bound") {
   for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ChainInstance inst = generate({1, 1, seed, 5});
      REQUIRE(inst.length() == 1);
      CHECK(inst.factors[0].n == 1);
      CHECK(inst.factors[0].m == 1);
      CHECK(inst.factors[0].edges >= 1);
      CHECK(inst.factors[0].edges <= 5);
   }
}

TEST_CASE("generate: all dimension values occur under a small bound") {
   std::set<std::size_t> seen;
   for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const ChainInstance inst = generate({4, 2, seed, 5});
      for (const ElementalSpec& f : inst.factors) {
         seen.insert(f.n);
         seen.insert(f.m);
      }
   }
   CHECK(seen == std::set<std::size_t> {1, 2});
}

TEST_CASE("generate: edge multiplier one pins the edge count") {
   for (std::uint64_t seed = 0; seed < 50; ++seed) {
      const ChainInstance inst = generate({3, 6, seed, 1});
      for (const ElementalSpec& f : inst.factors) {
         CHECK(f.edges == f.n * f.m);
      }
   }
}

TEST_CASE("generate: invalid configs are rejected") {
   CHECK_THROWS_AS(generate({0, 1, 0, 5}), std::invalid_argument);
   CHECK_THROWS_AS(generate({1, 0, 0, 5}), std::invalid_argument);
   CHECK_THROWS_AS(generate({1, 1, 0, 0}), std::invalid_argument);
}
