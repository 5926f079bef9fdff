#include "gdjcpb/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

#include "gdjcpb/generator.hpp"
#include "gdjcpb/planner.hpp"

namespace gdjcpb {

std::uint64_t BenchRow::best_baseline() const {
   return std::min({tangent, adjoint, preaccumulation});
}

BenchRow bench_row(std::size_t len, std::size_t max_mn, std::uint64_t seed,
                   std::uint64_t edge_mult) {
   BenchRow row;
   row.len = len;
   row.max_mn = max_mn;
   row.seed = seed;

   const ChainInstance inst = generate({len, max_mn, seed, edge_mult});
   try {
      const DpTable table = solve(inst);
      const BaselineReport baselines = homogeneous_costs(inst);
      row.tangent = baselines.tangent_cost;
      row.adjoint = baselines.adjoint_cost;
      row.preaccumulation = baselines.preacc_total();
      row.optimum = table.optimal_cost();
      row.improvement = row.optimum == 0
                             ? 0.0
                             : static_cast<double>(row.best_baseline()) /
                                    static_cast<double>(row.optimum);
   } catch (const std::overflow_error&) {
      row.overflowed = true;
   }
   return row;
}

namespace {

std::string format_improvement(double value) {
   char buf[32];
   std::snprintf(buf, sizeof(buf), "%.2f", value);
   return buf;
}

}  // namespace

std::string format_bench(const std::vector<BenchRow>& rows, bool tsv) {
   std::string out;
   if (tsv) {
      for (const BenchRow& row : rows) {
         out += std::to_string(row.len) + "\t" + std::to_string(row.max_mn) +
                "\t" + std::to_string(row.seed) + "\t";
         if (row.overflowed) {
            out += "overflow\toverflow\toverflow\toverflow\toverflow\n";
         } else {
            out += std::to_string(row.tangent) + "\t" +
                   std::to_string(row.adjoint) + "\t" +
                   std::to_string(row.preaccumulation) + "\t" +
                   std::to_string(row.optimum) + "\t" +
                   format_improvement(row.improvement) + "\n";
         }
      }
      return out;
   }

   const char* headers[] = {"len",     "max_mn", "seed",
                            "Tangent", "Adjoint", "Preaccumulation",
                            "Optimum", "Improvement"};
   std::vector<std::vector<std::string>> cells;
   cells.reserve(rows.size());
   for (const BenchRow& row : rows) {
      std::vector<std::string> line;
      line.push_back(std::to_string(row.len));
      line.push_back(std::to_string(row.max_mn));
      line.push_back(std::to_string(row.seed));
      if (row.overflowed) {
         for (int i = 0; i < 4; ++i) {
            line.push_back("overflow");
         }
         line.push_back("-");
      } else {
         line.push_back(std::to_string(row.tangent));
         line.push_back(std::to_string(row.adjoint));
         line.push_back(std::to_string(row.preaccumulation));
         line.push_back(std::to_string(row.optimum));
         line.push_back(format_improvement(row.improvement));
      }
      cells.push_back(std::move(line));
   }

   std::size_t widths[8];
   for (std::size_t c = 0; c < 8; ++c) {
      widths[c] = std::string(headers[c]).size();
      for (const auto& line : cells) {
         widths[c] = std::max(widths[c], line[c].size());
      }
   }
   auto append_row = [&](const std::vector<std::string>& line) {
      for (std::size_t c = 0; c < 8; ++c) {
         out += line[c];
         if (c + 1 < 8) {
            out.append(widths[c] - line[c].size() + 2, ' ');
         }
      }
      out += "\n";
   };
   append_row({headers, headers + 8});
   for (const auto& line : cells) {
      append_row(line);
   }
   return out;
}

}  // namespace gdjcpb
