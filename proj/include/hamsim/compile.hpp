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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hamsim/circuit.hpp"
#include "hamsim/commute.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/solovay_kitaev.hpp"
#include "hamsim/trotter.hpp"
#include "hamsim/verify.hpp"

namespace hamsim {

struct RunConfig {
  std::string hamiltonian_path;
  std::optional<int> n_override;
  double t = 0.0;
  double epsilon = 0.0;
  std::int64_t r = 0;  ///< 0 = automatic
  int chi = 0;         ///< 0 = automatic
  GateSet gateset = GateSet::kContinuous;
  GroupMode group = GroupMode::kCommuting;
  std::string circuit_path;  ///< empty: write the circuit to stdout
  std::string stats_path;    ///< empty: stats go to stdout when `stats` is set
  std::uint64_t seed = 0;
  bool allow_zero = false;
  bool alg4_r_factor2 = false;
  bool stats = false;
  bool verify = false;
  bool layered = false;
  int sk_base_length = BaseNet::kDefaultMaxLength;
  int sk_max_depth = SolovayKitaev::kDefaultMaxDepth;
  std::string sk_net_cache;  ///< empty: build the net in memory
  int verify_cap = kDefaultQubitCap;

  /// Throws std::invalid_argument on t <= 0, epsilon <= 0, r < 0 or chi < 0.
  void validate() const;
};

struct Verification {
  bool ran = false;
  std::string note;  ///< reason when skipped
  double error = 0.0;
  double tolerance = 0.0;
  bool phase_invariant = false;
  bool passed = false;
};

struct CompileResult {
  HamiltonianSpec sorted;
  GroupStats groups;
  TSParams params;
  ExponentialSeq sequence;
  GateIR circuit;
  Schedule schedule;
  GateCounts counts;
  double sk_delta = 0.0;  ///< 0 for the continuous gate set
  std::vector<std::string> warnings;
  Verification verification;
};

/// Sort, choose parameters, expand the product formula and synthesize the
/// circuit; optionally verify it densely against exp(-iHt).
CompileResult compile_hamiltonian(const HamiltonianSpec& spec,
                                  const RunConfig& config);

/// Stats report as pretty-printed JSON.
std::string stats_json(const CompileResult& result, const RunConfig& config);

/// Exit codes of run_compile.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

/// Loads the Hamiltonian, compiles it and writes the circuit and stats.
/// Diagnostics go to `err`.
int run_compile(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace hamsim
