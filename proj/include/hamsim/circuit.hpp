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

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/trotter.hpp"

namespace hamsim {

class SolovayKitaev;

enum class GateKind : std::uint8_t { kH, kT, kCnot, kRz };

/// H = (X + Z)/sqrt2, T = diag(1, e^{i pi/4}), RZ(theta) = exp(-i theta Z/2),
/// CNOT(control, target).
struct Gate {
  GateKind kind = GateKind::kH;
  Qubit q0 = 0;  ///< target of single-qubit gates, control of CNOT
  Qubit q1 = 0;  ///< CNOT target
  double angle = 0.0;

  static Gate h(Qubit q) { return {GateKind::kH, q, 0, 0.0}; }
  static Gate t(Qubit q) { return {GateKind::kT, q, 0, 0.0}; }
  static Gate cnot(Qubit control, Qubit target) {
    return {GateKind::kCnot, control, target, 0.0};
  }
  static Gate rz(double angle, Qubit q) { return {GateKind::kRz, q, 0, angle}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

enum class GateSet {
  kDiscrete,    ///< {H, T, CNOT}
  kContinuous,  ///< {H, T, CNOT, RZ}
};

std::string to_string(GateSet g);
GateSet gateset_from_string(std::string_view s);

struct GateIR {
  int n = 0;
  std::vector<Gate> gates;
  int chi = 0;
  std::int64_t r = 0;
  GateSet gateset = GateSet::kContinuous;
  /// 0-based source term of each gate; empty for parsed circuits.
  std::vector<std::uint32_t> source_term;

  /// Throws std::invalid_argument on out-of-range operands, CNOT control ==
  /// target or a non-finite angle.
  void validate() const;
};

struct GateCounts {
  std::size_t h = 0, t = 0, rz = 0, cnot = 0;
  std::size_t total() const { return h + t + rz + cnot; }
  friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

struct Schedule {
  std::vector<std::vector<std::size_t>> layers;
  std::size_t depth() const { return layers.size(); }
};

/// Gates for exp(-i a h duration): basis change to Z, CNOT parity ladder onto
/// the highest qubit of the support, RZ(2 a duration), then the inverse. With
/// GateSet::kDiscrete the RZ is replaced by a Solovay-Kitaev word within
/// `delta` (up to global phase), and `sk` must be non-null.
std::vector<Gate> pcircuit(const PauliTerm& term, double duration,
                           GateSet gateset, double delta = 0.0,
                           const SolovayKitaev* sk = nullptr);

/// One step block from `seq`, repeated params.r times. Discrete expansions
/// are computed once per distinct angle.
GateIR assemble_circuit(const HamiltonianSpec& spec, const ExponentialSeq& seq,
                        const TSParams& params, GateSet gateset,
                        double delta = 0.0, const SolovayKitaev* sk = nullptr);

/// Whitespace-separated tokens: H<q> T<q> CNOT<c>,<t> RZ<angle>,<q>.
std::string emit_string(const GateIR& ir);
/// Same tokens with layers separated by ";\n".
std::string emit_layered(const GateIR& ir, const Schedule& schedule);

/// Inverse of emit_string; also accepts the layered form. With n = 0 the
/// qubit count is the largest operand seen.
GateIR parse_circuit(std::string_view text, int n = 0);

/// As-soon-as-possible layering on qubit disjointness.
Schedule schedule_layers(const GateIR& ir);

GateCounts gate_counts(const GateIR& ir);

}  // namespace hamsim
