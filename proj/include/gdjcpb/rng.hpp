#ifndef GDJCPB_RNG_HPP_
#define GDJCPB_RNG_HPP_

#include <cstdint>

namespace gdjcpb {

//! SplitMix64 (Steele, Lea, Flood 2014). Chosen over the platform default
//! engines so that seeded runs reproduce bit-identically everywhere.
struct SplitMix64 {
   std::uint64_t state {0};

   constexpr explicit SplitMix64(std::uint64_t seed = 0) : state(seed) {}

   constexpr std::uint64_t next() {
      std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
      z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
      z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
      return z ^ (z >> 31);
   }

   //! Uniform draw from the inclusive range [lo, hi] via modulo reduction.
   //! The (tiny) modulo bias is accepted; determinism is what matters here.
   constexpr std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
      return lo + next() % (hi - lo + 1);
   }

   //! Uniform double in [0, 1) from the top 53 bits.
   constexpr double unit() {
      return static_cast<double>(next() >> 11) * 0x1.0p-53;
   }

   //! Uniform double in [-1, 1).
   constexpr double symmetric() {
      return 2.0 * unit() - 1.0;
   }
};

}  // namespace gdjcpb

#endif  // GDJCPB_RNG_HPP_
