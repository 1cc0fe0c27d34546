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

#include "hamsim/compile.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace hamsim {

void RunConfig::validate() const {
  if (!(t > 0)) throw std::invalid_argument("t must be positive");
  if (!(epsilon > 0)) throw std::invalid_argument("epsilon must be positive");
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  if (chi < 0) throw std::invalid_argument("chi must be >= 0");
  if (n_override && *n_override < 1) {
    throw std::invalid_argument("n must be positive");
  }
  if (sk_base_length < 0 || sk_max_depth < 0) {
    throw std::invalid_argument("Solovay-Kitaev settings must be >= 0");
  }
  if (verify_cap < 1) throw std::invalid_argument("verify cap must be >= 1");
}

namespace {

HamiltonianSpec drop_zero_terms(const HamiltonianSpec& spec) {
  HamiltonianSpec out;
  out.n = spec.n;
  out.k = spec.k;
  std::vector<GroupRange> groups;
  const std::vector<GroupRange> input =
      spec.group_boundaries.value_or(
          std::vector<GroupRange>{{0, spec.terms.size()}});
  for (const GroupRange& g : input) {
    GroupRange kept{out.terms.size(), out.terms.size()};
    for (std::size_t j = g.begin; j < g.end; ++j) {
      if (spec.terms[j].coefficient() != 0.0) out.terms.push_back(spec.terms[j]);
    }
    kept.end = out.terms.size();
    if (kept.size() > 0) groups.push_back(kept);
  }
  if (spec.group_boundaries) out.group_boundaries = std::move(groups);
  if (out.terms.empty()) {
    throw std::invalid_argument(
        "every coefficient is zero (pass --allow-zero to keep them)");
  }
  return out;
}

Verification verify_circuit(const HamiltonianSpec& spec,
                            const CompileResult& result,
                            const RunConfig& config) {
  Verification v;
  v.tolerance = config.epsilon;
  if (spec.n > config.verify_cap) {
    v.note = "skipped: n=" + std::to_string(spec.n) +
             " exceeds the dense-oracle cap of " +
             std::to_string(config.verify_cap) + " qubits";
    return v;
  }
  // The circuit is one step block repeated r times.
  const GateIR& ir = result.circuit;
  GateIR block;
  block.n = ir.n;
  const std::size_t block_size =
      ir.gates.size() / static_cast<std::size_t>(ir.r);
  block.gates.assign(ir.gates.begin(), ir.gates.begin() + block_size);
  const DenseUnitary u =
      matrix_power<double>(circuit_unitary(block, config.verify_cap), ir.r);
  const DenseUnitary exact =
      exact_unitary<double>(spec, config.t, config.verify_cap);
  v.ran = true;
  // Solovay-Kitaev words match their rotations only up to global phase.
  v.phase_invariant = config.gateset == GateSet::kDiscrete;
  v.error = spectral_distance<double>(exact, u, v.phase_invariant);
  v.passed = v.error <= v.tolerance;
  return v;
}

}  // namespace

CompileResult compile_hamiltonian(const HamiltonianSpec& input,
                                  const RunConfig& config) {
  config.validate();
  HamiltonianSpec spec = input;
  if (config.n_override) {
    for (const auto& term : spec.terms) {
      if (term.max_qubit() > static_cast<Qubit>(*config.n_override)) {
        throw std::invalid_argument("n override " +
                                    std::to_string(*config.n_override) +
                                    " is smaller than qubit " +
                                    std::to_string(term.max_qubit()));
      }
    }
    spec.n = *config.n_override;
  }
  if (!config.allow_zero) spec = drop_zero_terms(spec);
  spec.validate();

  CompileResult result;
  auto [sorted, partition] = sort_hamiltonian(spec, config.group);
  result.sorted = std::move(sorted);
  result.groups = group_count_stats(partition);

  result.params = resolve_ts_params(
      result.sorted, config.t, config.epsilon, config.chi, config.r,
      config.alg4_r_factor2 ? RPolicy::kBoundDoubled : RPolicy::kBound);
  if (!result.params.auto_r) {
    result.warnings.push_back(
        "warning: r was set by hand, so the simulation error is not "
        "guaranteed to stay within epsilon");
  }
  if (result.params.epsilon_clamped) {
    result.warnings.push_back("note: epsilon reduced to " +
                              format_double(result.params.epsilon) +
                              " so the step-count formula stays valid");
  }

  result.sequence = build_ts_step(
      result.sorted, config.t / static_cast<double>(result.params.r),
      result.params.chi);
  result.sequence.r = result.params.r;

  std::unique_ptr<SolovayKitaev> sk;
  if (config.gateset == GateSet::kDiscrete) {
    auto net = std::make_shared<const BaseNet>(
        config.sk_net_cache.empty()
            ? BaseNet(config.sk_base_length)
            : BaseNet::load_or_build(config.sk_net_cache,
                                     config.sk_base_length));
    sk = std::make_unique<SolovayKitaev>(net, config.sk_max_depth);
    result.sk_delta = sk_tolerance(result.params.epsilon, result.sorted.m(),
                                   result.params.chi, result.params.r);
  }
  result.circuit =
      assemble_circuit(result.sorted, result.sequence, result.params,
                       config.gateset, result.sk_delta, sk.get());
  result.schedule = schedule_layers(result.circuit);
  result.counts = gate_counts(result.circuit);

  if (config.verify) {
    result.verification = verify_circuit(result.sorted, result, config);
  }
  return result;
}

std::string stats_json(const CompileResult& result, const RunConfig& config) {
  nlohmann::ordered_json j;
  j["n"] = result.sorted.n;
  j["m"] = result.sorted.m();
  j["t"] = config.t;
  j["epsilon_requested"] = config.epsilon;
  j["epsilon"] = result.params.epsilon;
  j["chi"] = result.params.chi;
  j["chi_auto"] = result.params.auto_chi;
  j["r"] = result.params.r;
  j["r_auto"] = result.params.auto_r;
  j["r_factor2"] = config.alg4_r_factor2;
  j["group_mode"] = to_string(config.group);
  j["groups"] = {{"count", result.groups.num_groups},
                 {"max_size", result.groups.max_size},
                 {"mean_size", result.groups.mean_size}};
  j["gateset"] = to_string(config.gateset);
  if (config.gateset == GateSet::kDiscrete) {
    j["sk_delta"] = result.sk_delta;
    j["sk_base_length"] = config.sk_base_length;
  }
  j["exponentials"] = result.sequence.entries.size() *
                      static_cast<std::size_t>(result.params.r);
  j["gates"] = {{"h", result.counts.h},
                {"t", result.counts.t},
                {"rz", result.counts.rz},
                {"cnot", result.counts.cnot},
                {"total", result.counts.total()}};
  j["depth"] = result.schedule.depth();
  j["seed"] = config.seed;
  j["warnings"] = result.warnings;
  if (config.verify) {
    const Verification& v = result.verification;
    nlohmann::ordered_json vj;
    vj["ran"] = v.ran;
    if (v.ran) {
      vj["error"] = v.error;
      vj["tolerance"] = v.tolerance;
      vj["phase_invariant"] = v.phase_invariant;
      vj["passed"] = v.passed;
    } else {
      vj["note"] = v.note;
    }
    j["verification"] = vj;
  }
  return j.dump(2) + "\n";
}

namespace {

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("failed writing '" + path + "'");
}

}  // namespace

int run_compile(const RunConfig& config, std::ostream& out,
                std::ostream& err) {
  CompileResult result;
  try {
    config.validate();
    const HamiltonianSpec spec = load_hamiltonian(config.hamiltonian_path);
    result = compile_hamiltonian(spec, config);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  for (const auto& w : result.warnings) err << w << "\n";

  try {
    const std::string circuit =
        config.layered ? emit_layered(result.circuit, result.schedule)
                       : emit_string(result.circuit);
    if (config.circuit_path.empty()) {
      out << circuit;
    } else {
      write_file(config.circuit_path, circuit);
    }
    if (config.stats || !config.stats_path.empty()) {
      const std::string stats = stats_json(result, config);
      if (config.stats_path.empty()) {
        out << stats;
      } else {
        write_file(config.stats_path, stats);
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (config.verify) {
    const Verification& v = result.verification;
    if (!v.ran) {
      err << "verification " << v.note << "\n";
    } else {
      err << "verification: error " << v.error << " (tolerance "
          << v.tolerance << ") " << (v.passed ? "passed" : "FAILED") << "\n";
      if (!v.passed) return kExitVerifyFailed;
    }
  }
  return kExitOk;
}

}  // namespace hamsim
