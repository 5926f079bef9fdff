#ifndef GDJCPB_BENCH_HPP_
#define GDJCPB_BENCH_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace gdjcpb {

struct BenchRow {
   std::size_t len {0};
   std::size_t max_mn {0};
   std::uint64_t seed {0};
   std::uint64_t tangent {0};
   std::uint64_t adjoint {0};
   std::uint64_t preaccumulation {0};
   std::uint64_t optimum {0};
   //! min(baselines) / optimum.
   double improvement {0.0};
   //! Cost accumulator overflowed; the cost fields are not meaningful.
   bool overflowed {false};

   std::uint64_t best_baseline() const;
};

//! Generates one instance (len, max_mn, seed) and prices the three
//! homogeneous strategies against the optimum.
BenchRow bench_row(std::size_t len, std::size_t max_mn, std::uint64_t seed,
                   std::uint64_t edge_mult = 5);

//! Aligned human table, or bare tab-separated rows for downstream tools.
std::string format_bench(const std::vector<BenchRow>& rows, bool tsv);

}  // namespace gdjcpb

#endif  // GDJCPB_BENCH_HPP_
