#ifndef GDJCPB_REPORT_HPP_
#define GDJCPB_REPORT_HPP_

#include <string>

#include "gdjcpb/chain.hpp"
#include "gdjcpb/planner.hpp"

namespace gdjcpb {

//! One line per table entry, ascending j and descending i within each j:
//! "fma_{j,i}=<cost>; Split=<k>; Operation=<Tangent|Adjoint|Preaccumulation>"
std::string format_dp_table(const DpTable& table);

//! The full solver report: table block, optimal cost, and the three
//! homogeneous baselines. Byte-stable; consumed by golden tests.
std::string solve_report(const ChainInstance& inst);

}  // namespace gdjcpb

#endif  // GDJCPB_REPORT_HPP_
