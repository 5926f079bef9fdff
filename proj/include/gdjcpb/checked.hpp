#ifndef GDJCPB_CHECKED_HPP_
#define GDJCPB_CHECKED_HPP_

#include <cstdint>
#include <stdexcept>

namespace gdjcpb {

//! Cost accumulators are 64-bit unsigned and must never wrap silently.
inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
   std::uint64_t r = 0;
   if (__builtin_add_overflow(a, b, &r)) {
      throw std::overflow_error("fma cost accumulator overflow (add)");
   }
   return r;
}

inline std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
   std::uint64_t r = 0;
   if (__builtin_mul_overflow(a, b, &r)) {
      throw std::overflow_error("fma cost accumulator overflow (mul)");
   }
   return r;
}

}  // namespace gdjcpb

#endif  // GDJCPB_CHECKED_HPP_
