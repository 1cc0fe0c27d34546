// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hamsim: compile Pauli-sum Hamiltonians into quantum circuits and run the
// product-formula error experiments.

#include <cmath>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamsim/circuit.hpp"
#include "hamsim/commute.hpp"
#include "hamsim/compile.hpp"
#include "hamsim/experiments.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/random.hpp"
#include "hamsim/trotter.hpp"

namespace {

using namespace hamsim;

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
}

std::vector<double> default_t_grid() {
  std::vector<double> ts;
  for (int k = 0; k <= 12; ++k) ts.push_back(std::pow(10.0, -4.0 + k * 0.25));
  return ts;
}

HamiltonianSpec model_spec(const std::string& model, int rows, int cols, int n,
                           double jx, double jy, double jz,
                           std::uint64_t seed, bool allow_zero) {
  if (model == "honeycomb") {
    return make_honeycomb(rows, cols, jx, jy, jz, allow_zero);
  }
  if (model == "pairing") {
    Rng rng(seed);
    std::vector<double> gamma(static_cast<std::size_t>(n));
    for (double& g : gamma) g = rng.normal();
    Eigen::MatrixXd vp = Eigen::MatrixXd::Zero(n, n);
    Eigen::MatrixXd vm = Eigen::MatrixXd::Zero(n, n);
    for (int p = 0; p < n; ++p) {
      for (int l = p + 1; l < n; ++l) {
        vp(p, l) = rng.normal();
        vm(p, l) = rng.normal();
      }
    }
    return make_pairing(n, gamma, vp, vm, allow_zero);
  }
  if (model == "random") return sample_random_twobody(n, seed);
  throw std::invalid_argument("unknown model '" + model + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamiltonian simulation circuit compiler"};
  app.require_subcommand(1);

  // compile
  RunConfig cfg;
  std::string gateset = "continuous", group = "commuting";
  int n_override = 0;
  auto* compile = app.add_subcommand("compile", "Compile a Hamiltonian file");
  compile->add_option("-H,--hamiltonian", cfg.hamiltonian_path,
                      "Hamiltonian file")
      ->required();
  compile->add_option("--n", n_override, "Qubit count override");
  compile->add_option("--t", cfg.t, "Evolution time")->required();
  compile->add_option("--eps", cfg.epsilon, "Error tolerance")->required();
  compile->add_option("--r", cfg.r, "Time steps (0 = automatic)");
  compile->add_option("--chi", cfg.chi, "Product-formula order (0 = automatic)");
  compile->add_option("--gateset", gateset, "discrete or continuous")
      ->check(CLI::IsMember({"discrete", "continuous"}));
  compile->add_option("--group", group, "commuting, disjoint or none")
      ->check(CLI::IsMember({"commuting", "disjoint", "none"}));
  compile->add_option("-o,--output", cfg.circuit_path,
                      "Circuit file (default stdout)");
  compile->add_option("--stats-out", cfg.stats_path, "Stats JSON file");
  compile->add_option("--seed", cfg.seed, "Recorded in the stats report");
  compile->add_flag("--allow-zero", cfg.allow_zero,
                    "Keep zero-coefficient terms");
  compile->add_flag("--alg4-r-factor2", cfg.alg4_r_factor2,
                    "Double the automatic step count");
  compile->add_flag("--stats", cfg.stats, "Print the stats report");
  compile->add_flag("--verify", cfg.verify,
                    "Check the circuit against exp(-iHt) densely");
  compile->add_flag("--layered", cfg.layered, "Emit one layer per line");
  compile->add_option("--sk-l0", cfg.sk_base_length,
                      "Solovay-Kitaev base word length");
  compile->add_option("--sk-depth", cfg.sk_max_depth,
                      "Solovay-Kitaev maximum recursion depth");
  compile->add_option("--sk-cache", cfg.sk_net_cache, "Base-net cache file");
  compile->add_option("--verify-cap", cfg.verify_cap,
                      "Largest n verified densely");

  // ts-error
  int order = 1, samples = 50;
  std::uint64_t seed = 1;
  std::vector<int> ns{4};
  std::vector<double> ts = default_t_grid();
  std::string csv_path, summary_path;
  bool long_double = false;
  auto* ts_error = app.add_subcommand(
      "ts-error", "Single-step product-formula error on random Hamiltonians");
  ts_error->add_option("--order", order, "1 or 2")
      ->check(CLI::IsMember({1, 2}));
  ts_error->add_option("--n", ns, "Qubit counts")->delimiter(',');
  ts_error->add_option("--t", ts, "Step durations")->delimiter(',');
  ts_error->add_option("--samples", samples)->check(CLI::PositiveNumber);
  ts_error->add_option("--seed", seed);
  ts_error->add_option("--csv", csv_path, "Per-sample CSV (default stdout)");
  ts_error->add_option("--summary", summary_path, "Aggregate table file");
  ts_error->add_flag("--long-double", long_double,
                     "Extended-precision dense arithmetic");

  // norm-fit
  std::vector<int> fit_ns{2, 3, 4, 5, 6, 7, 8};
  auto* norm_fit =
      app.add_subcommand("norm-fit", "Fit ||H|| ~ c n^alpha over the ensemble");
  norm_fit->add_option("--n", fit_ns)->delimiter(',');
  norm_fit->add_option("--samples", samples)->check(CLI::PositiveNumber);
  norm_fit->add_option("--seed", seed);

  // extrapolate
  double ex_eps = 0.01, ex_t = 0.1;
  std::vector<int> ex_ns{2, 4, 10, 40, 100};
  auto* extrapolate = app.add_subcommand(
      "extrapolate", "Exponential counts for orders 1 and 2");
  extrapolate->add_option("--eps", ex_eps)->check(CLI::PositiveNumber);
  extrapolate->add_option("--t", ex_t)->check(CLI::PositiveNumber);
  extrapolate->add_option("--n", ex_ns)->delimiter(',');

  // gate-counts
  std::string model = "honeycomb";
  int rows = 2, cols = 2, model_n = 4, gc_chi = 1;
  std::int64_t gc_r = 1;
  double jx = 1.0, jy = 1.0, jz = 1.0;
  auto* counts = app.add_subcommand(
      "gate-counts", "Gate counts of a model Hamiltonian circuit");
  counts->add_option("--model", model)
      ->check(CLI::IsMember({"honeycomb", "pairing", "random"}));
  counts->add_option("--rows", rows)->check(CLI::PositiveNumber);
  counts->add_option("--cols", cols)->check(CLI::PositiveNumber);
  counts->add_option("--n", model_n, "Qubits for pairing/random models");
  counts->add_option("--chi", gc_chi)->check(CLI::PositiveNumber);
  counts->add_option("--r", gc_r)->check(CLI::PositiveNumber);
  counts->add_option("--jx", jx);
  counts->add_option("--jy", jy);
  counts->add_option("--jz", jz);
  counts->add_option("--group", group)
      ->check(CLI::IsMember({"commuting", "disjoint", "none"}));
  counts->add_option("--seed", seed);

  // generate
  std::string gen_out;
  bool gen_allow_zero = false;
  auto* generate =
      app.add_subcommand("generate", "Write a model Hamiltonian file");
  generate->add_option("--model", model)
      ->check(CLI::IsMember({"honeycomb", "pairing", "random"}));
  generate->add_option("--rows", rows)->check(CLI::PositiveNumber);
  generate->add_option("--cols", cols)->check(CLI::PositiveNumber);
  generate->add_option("--n", model_n);
  generate->add_option("--jx", jx);
  generate->add_option("--jy", jy);
  generate->add_option("--jz", jz);
  generate->add_option("--seed", seed);
  generate->add_flag("--allow-zero", gen_allow_zero);
  generate->add_option("-o,--output", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compile) {
      if (n_override > 0) cfg.n_override = n_override;
      cfg.gateset = gateset_from_string(gateset);
      cfg.group = group_mode_from_string(group);
      return run_compile(cfg, std::cout, std::cerr);
    }
    if (*ts_error) {
      const ErrorReport report = ts_error_experiment(
          ns, ts, samples, order, seed,
          long_double ? Precision::kLongDouble : Precision::kDouble);
      write_or_print(csv_path, to_csv(report));
      if (!summary_path.empty()) write_or_print(summary_path, summary(report));
      else std::cerr << summary(report);
      return kExitOk;
    }
    if (*norm_fit) {
      const NormFit fit = norm_scaling_fit(fit_ns, samples, seed);
      std::cout << "n,mean_norm\n";
      for (std::size_t i = 0; i < fit.ns.size(); ++i) {
        std::cout << fit.ns[i] << ',' << fit.mean_norms[i] << "\n";
      }
      std::cout << "coefficient=" << fit.coefficient
                << " exponent=" << fit.exponent << "\n";
      return kExitOk;
    }
    if (*extrapolate) {
      std::cout << format_exp_counts(extrapolate_exp_counts(ex_ns, ex_eps, ex_t));
      return kExitOk;
    }
    if (*counts) {
      const HamiltonianSpec raw = model_spec(model, rows, cols, model_n, jx, jy,
                                             jz, seed, false);
      const auto [spec, partition] =
          sort_hamiltonian(raw, group_mode_from_string(group));
      TSParams params;
      params.chi = gc_chi;
      params.r = gc_r;
      ExponentialSeq seq =
          build_ts_step(spec, 1.0 / static_cast<double>(gc_r), gc_chi);
      seq.r = gc_r;
      const GateIR ir =
          assemble_circuit(spec, seq, params, GateSet::kContinuous);
      const GateCounts c = gate_counts(ir);
      std::cout << "model=" << model << " n=" << spec.n << " m=" << spec.m()
                << " chi=" << gc_chi << " r=" << gc_r << "\n"
                << "h=" << c.h << " t=" << c.t << " rz=" << c.rz
                << " cnot=" << c.cnot << " total=" << c.total()
                << " depth=" << schedule_layers(ir).depth() << "\n";
      return kExitOk;
    }
    if (*generate) {
      write_or_print(gen_out,
                     serialize_hamiltonian(model_spec(model, rows, cols, model_n,
                                                      jx, jy, jz, seed,
                                                      gen_allow_zero)));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
