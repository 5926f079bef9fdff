#include "gdjcpb/report.hpp"

namespace gdjcpb {

std::string format_dp_table(const DpTable& table) {
   std::string out = "Dynamic Programming Table:\n";
   for (std::size_t j = 1; j <= table.length(); ++j) {
      for (std::size_t i = j; i >= 1; --i) {
         const DpEntry& entry = table.at(j, i);
         out += "fma_{" + std::to_string(j) + "," + std::to_string(i) +
                "}=" + std::to_string(entry.cost) +
                "; Split=" + std::to_string(entry.split) +
                "; Operation=" + to_string(entry.op) + "\n";
      }
   }
   return out;
}

std::string solve_report(const ChainInstance& inst) {
   const DpTable table = solve(inst);
   const BaselineReport baselines = homogeneous_costs(inst);

   std::string out = format_dp_table(table);
   out += "\nOptimal Cost=" + std::to_string(table.optimal_cost()) + "\n";
   out += "\nCost of homogeneous tangent mode=" +
          std::to_string(baselines.tangent_cost) + "\n";
   out += "Cost of homogeneous adjoint mode=" +
          std::to_string(baselines.adjoint_cost) + "\n";
   out += "Cost of optimal homogeneous preaccumulation=" +
          std::to_string(baselines.preacc_accumulation) + "+" +
          std::to_string(baselines.preacc_bracketing) + "=" +
          std::to_string(baselines.preacc_total()) + "\n";
   return out;
}

}  // namespace gdjcpb
