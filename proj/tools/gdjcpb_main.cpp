#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gdjcpb/bench.hpp"
#include "gdjcpb/chain.hpp"
#include "gdjcpb/executor.hpp"
#include "gdjcpb/generator.hpp"
#include "gdjcpb/microad.hpp"
#include "gdjcpb/oracle.hpp"
#include "gdjcpb/planner.hpp"
#include "gdjcpb/report.hpp"

namespace {

constexpr std::size_t kOracleMaxLength = 10;

gdjcpb::ChainInstance read_instance(const std::string& path) {
   if (path == "-") {
      return gdjcpb::parse_instance(std::cin);
   }
   std::ifstream file(path);
   if (!file) {
      throw std::runtime_error("cannot open '" + path + "'");
   }
   return gdjcpb::parse_instance(file);
}

void write_output(const std::string& path, const std::string& text) {
   if (path.empty()) {
      std::cout << text;
      return;
   }
   std::ofstream file(path, std::ios::binary);
   if (!file) {
      throw std::runtime_error("cannot open '" + path + "' for writing");
   }
   file << text;
}

struct VerifyOptions {
   bool oracle = false;
   bool execute = false;
   std::uint64_t seed = 0;
};

int run_verify(const gdjcpb::ChainInstance& inst, const VerifyOptions& opts) {
   bool all_ok = true;
   auto check = [&](const char* name, bool ok) {
      std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
      all_ok = all_ok && ok;
   };

   const gdjcpb::DpTable table = gdjcpb::solve(inst);
   const gdjcpb::PlanPtr plan = gdjcpb::extract_plan(table, inst);
   const gdjcpb::BaselineReport baselines = gdjcpb::homogeneous_costs(inst);
   const std::uint64_t optimum = table.optimal_cost();

   check("plan-cost", gdjcpb::plan_cost(*plan, inst) == optimum);
   check("dominance", optimum <= baselines.tangent_cost &&
                           optimum <= baselines.adjoint_cost &&
                           optimum <= baselines.preacc_total());

   if (opts.oracle) {
      if (inst.length() > kOracleMaxLength) {
         std::cerr << "error: --oracle supports chains of length at most "
                   << kOracleMaxLength << "\n";
         return 2;
      }
      const gdjcpb::OracleResult result = gdjcpb::enumerate_optimum(inst);
      check("oracle", result.exact && result.cost == optimum);
   }

   if (opts.execute) {
      const gdjcpb::SyntheticChain chain =
           gdjcpb::SyntheticChain::make(inst, opts.seed);
      const gdjcpb::ExecutionTrace trace = gdjcpb::execute(*plan, chain);
      check("execute-fma", trace.fma_counted == optimum);

      const gdjcpb::Matrix reference = gdjcpb::direct_product(chain);
      const double scale = gdjcpb::max_abs(reference);
      const double diff = gdjcpb::max_abs_diff(trace.result, reference);
      check("execute-numerics", diff <= (scale > 0.0 ? 1e-10 * scale : 1e-10));
   }

   if (all_ok) {
      std::cout << "all checks passed; optimal strategy:\n"
                << gdjcpb::format_plan(*plan) << "\n";
   }
   return all_ok ? 0 : 1;
}

int run_demo() {
   gdjcpb::MicroDag dag = gdjcpb::sin_product_dag();
   const std::vector<double> x {2.0, 3.0};
   const std::vector<double> y = gdjcpb::primal(dag, x);

   gdjcpb::FmaCounter tangent_count;
   const gdjcpb::Matrix full = gdjcpb::tangent(
        dag, x, gdjcpb::Matrix::identity(dag.input_dim()), tangent_count);

   gdjcpb::FmaCounter adjoint_count;
   gdjcpb::Matrix seed(1, 1);
   seed(0, 0) = 1.0;
   const gdjcpb::Matrix gradient = gdjcpb::adjoint(dag, x, seed, adjoint_count);

   std::printf("micro-DAG demo: y = sin(x1 * x2) at x = (2, 3)\n");
   std::printf("primal value:           %.8f\n", y[0]);
   std::printf("DAG edges |E|:          %zu\n", dag.edge_count());
   std::printf("tangent, identity seed: J = [%.8f %.8f], fma = %llu\n",
               full(0, 0), full(0, 1),
               static_cast<unsigned long long>(tangent_count.count));
   std::printf("adjoint, unit seed:     J = [%.8f %.8f], fma = %llu\n",
               gradient(0, 0), gradient(0, 1),
               static_cast<unsigned long long>(adjoint_count.count));
   std::printf("one adjoint row recovers the gradient at half the tangent cost\n");
   return 0;
}

std::vector<std::pair<std::size_t, std::size_t>> parse_sizes(
     const std::string& list) {
   std::vector<std::pair<std::size_t, std::size_t>> sizes;
   std::stringstream stream(list);
   std::string item;
   while (std::getline(stream, item, ',')) {
      const std::size_t colon = item.find(':');
      if (colon == std::string::npos) {
         throw std::runtime_error("bad --sizes entry '" + item +
                                  "', expected len:max_mn");
      }
      sizes.emplace_back(std::stoull(item.substr(0, colon)),
                         std::stoull(item.substr(colon + 1)));
   }
   if (sizes.empty()) {
      throw std::runtime_error("--sizes must name at least one len:max_mn pair");
   }
   return sizes;
}

}  // namespace

int main(int argc, char** argv) {
   CLI::App app {"fma-optimal evaluation strategies for dense Jacobian chain "
                 "products built from tangent and adjoint sweeps"};
   app.require_subcommand(1);

   // generate
   auto* generate_cmd =
        app.add_subcommand("generate", "Generate a random problem instance");
   std::size_t gen_len = 1;
   std::size_t gen_max_mn = 1;
   std::uint64_t gen_seed = 0;
   std::uint64_t gen_edge_mult = 5;
   std::string gen_output;
   generate_cmd->add_option("len", gen_len, "chain length")->required();
   generate_cmd->add_option("max_mn", gen_max_mn, "dimension upper bound")
        ->required();
   generate_cmd->add_option("--seed", gen_seed, "generator seed (default 0)");
   generate_cmd->add_option("--edge-mult", gen_edge_mult,
                            "edges drawn from [n*m, K*n*m] (default 5)");
   generate_cmd->add_option("-o,--output", gen_output,
                            "write to file instead of standard output");

   // solve
   auto* solve_cmd = app.add_subcommand(
        "solve", "Solve an instance and print the planning report");
   std::string solve_path;
   std::string solve_output;
   solve_cmd->add_option("path", solve_path, "instance file, or - for stdin")
        ->required();
   solve_cmd->add_option("-o,--output", solve_output,
                         "write to file instead of standard output");

   // verify
   auto* verify_cmd = app.add_subcommand(
        "verify", "Cross-check the planner on one instance");
   std::string verify_path;
   VerifyOptions verify_opts;
   verify_cmd->add_option("path", verify_path, "instance file, or - for stdin")
        ->required();
   verify_cmd->add_flag("--oracle", verify_opts.oracle,
                        "compare against exhaustive enumeration (q <= 10)");
   verify_cmd->add_flag("--execute", verify_opts.execute,
                        "execute the plan on synthetic matrices");
   verify_cmd->add_option("--seed", verify_opts.seed,
                          "seed for the synthetic matrices");

   // bench
   auto* bench_cmd = app.add_subcommand(
        "bench", "Price baselines against the optimum on generated instances");
   std::string bench_sizes;
   std::uint64_t bench_seed = 0;
   std::uint64_t bench_edge_mult = 5;
   bool bench_tsv = false;
   std::string bench_output;
   bench_cmd->add_option("--sizes", bench_sizes, "comma list of len:max_mn")
        ->required();
   bench_cmd->add_option("--seed", bench_seed,
                         "base seed; row r uses seed + r (default 0)");
   bench_cmd->add_option("--edge-mult", bench_edge_mult,
                         "edge range multiplier (default 5)");
   bench_cmd->add_flag("--tsv", bench_tsv, "tab-separated rows, no header");
   bench_cmd->add_option("-o,--output", bench_output,
                         "write to file instead of standard output");

   auto* demo_cmd = app.add_subcommand(
        "demo-fig1", "Tiny worked example of the per-edge cost model");
   (void) demo_cmd;

   CLI11_PARSE(app, argc, argv);

   try {
      if (generate_cmd->parsed()) {
         const gdjcpb::ChainInstance inst =
              gdjcpb::generate({gen_len, gen_max_mn, gen_seed, gen_edge_mult});
         write_output(gen_output, gdjcpb::serialize_instance(inst));
         return 0;
      }
      if (solve_cmd->parsed()) {
         const gdjcpb::ChainInstance inst = read_instance(solve_path);
         write_output(solve_output, gdjcpb::solve_report(inst));
         return 0;
      }
      if (verify_cmd->parsed()) {
         return run_verify(read_instance(verify_path), verify_opts);
      }
      if (bench_cmd->parsed()) {
         std::vector<gdjcpb::BenchRow> rows;
         std::uint64_t row_index = 0;
         for (const auto& [len, max_mn] : parse_sizes(bench_sizes)) {
            rows.push_back(gdjcpb::bench_row(len, max_mn,
                                             bench_seed + row_index,
                                             bench_edge_mult));
            ++row_index;
         }
         write_output(bench_output, gdjcpb::format_bench(rows, bench_tsv));
         return 0;
      }
      if (demo_cmd->parsed()) {
         return run_demo();
      }
   } catch (const gdjcpb::ParseError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
   } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 1;
   }
   return 0;
}
