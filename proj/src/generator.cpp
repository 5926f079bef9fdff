#include "gdjcpb/generator.hpp"

#include <stdexcept>

#include "gdjcpb/rng.hpp"

namespace gdjcpb {

void GeneratorConfig::validate() const {
   if (len == 0) {
      throw std::invalid_argument("generator: len must be positive");
   }
   if (max_mn == 0) {
      throw std::invalid_argument("generator: max_mn must be positive");
   }
   if (edge_mult == 0) {
      throw std::invalid_argument("generator: edge_mult must be positive");
   }
}

ChainInstance generate(const GeneratorConfig& cfg) {
   cfg.validate();
   SplitMix64 rng(cfg.seed);

   ChainInstance inst;
   inst.factors.reserve(cfg.len);

   std::size_t n = rng.uniform(1, cfg.max_mn);
   for (std::size_t i = 0; i < cfg.len; ++i) {
      ElementalSpec spec;
      spec.n = n;
      spec.m = rng.uniform(1, cfg.max_mn);
      const std::uint64_t dense = static_cast<std::uint64_t>(spec.n) * spec.m;
      spec.edges = rng.uniform(dense, cfg.edge_mult * dense);
      inst.factors.push_back(spec);
      n = spec.m;
   }

   inst.validate();
   return inst;
}

}  // namespace gdjcpb
