#ifndef GDJCPB_GENERATOR_HPP_
#define GDJCPB_GENERATOR_HPP_

#include <cstdint>

#include "gdjcpb/chain.hpp"

namespace gdjcpb {

struct GeneratorConfig {
   //! Chain length q.
   std::size_t len {1};
   //! Upper bound on every n_i and m_i.
   std::size_t max_mn {1};
   //! Seed of the SplitMix64 stream; identical configs generate identical
   //! instances on every platform.
   std::uint64_t seed {0};
   //! Edge counts are drawn from [n_i*m_i, edge_mult*n_i*m_i].
   std::uint64_t edge_mult {5};

   void validate() const;
};

//! Draw order (fixed, part of the reproducibility contract): n_1 first,
//! then per factor i = 1..q its output dimension m_i followed by edges_i.
//! Inner dimensions chain automatically (n_{i+1} := m_i).
ChainInstance generate(const GeneratorConfig& cfg);

}  // namespace gdjcpb

#endif  // GDJCPB_GENERATOR_HPP_
