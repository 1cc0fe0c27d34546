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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace hamsim {

/// Qubit label. Labels are 1-based throughout, matching the circuit text
/// format ("H1 T2").
using Qubit = std::uint32_t;

enum class PauliLetter : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(PauliLetter letter);
PauliLetter letter_from_char(char c);

/// A weighted Pauli string `coefficient * P_1 (x) ... (x) P_n`.
///
/// Only non-identity factors are stored, sorted by ascending qubit. The
/// constructor enforces that order and rejects duplicate qubits and explicit
/// identity letters, so two terms compare equal iff they describe the same
/// operator with the same coefficient.
class PauliTerm {
 public:
  using Factor = std::pair<Qubit, PauliLetter>;

  PauliTerm() = default;
  PauliTerm(double coefficient, std::vector<Factor> support);

  double coefficient() const { return coefficient_; }
  void set_coefficient(double c) { coefficient_ = c; }

  const std::vector<Factor>& support() const { return support_; }
  std::size_t weight() const { return support_.size(); }
  bool empty() const { return support_.empty(); }

  /// Letter acting on `q`, `I` when the qubit is not in the support.
  PauliLetter at(Qubit q) const;
  Qubit max_qubit() const;

  /// "X1 Y2 Z4" (no coefficient).
  std::string letters_string() const;

  friend bool operator==(const PauliTerm&, const PauliTerm&) = default;

 private:
  double coefficient_ = 0.0;
  std::vector<Factor> support_;
};

/// The (l, S) view of a term: per-letter counts and sorted position lists.
/// Index 0/1/2 holds X/Y/Z.
struct TermEncoding {
  std::array<std::size_t, 3> counts{};
  std::array<std::vector<Qubit>, 3> positions;

  const std::vector<Qubit>& of(PauliLetter letter) const;
  friend bool operator==(const TermEncoding&, const TermEncoding&) = default;
};

TermEncoding encode(const PauliTerm& term);
PauliTerm decode(double coefficient, const TermEncoding& encoding);

/// Bitmask form used by the dense kernels. Qubit q of n maps to bit (n - q),
/// so qubit 1 is the most significant tensor factor.
struct PauliMask {
  std::uint64_t x = 0;  ///< qubits acted on by X or Y
  std::uint64_t z = 0;  ///< qubits acted on by Z or Y
  int num_y = 0;
};

PauliMask to_mask(const PauliTerm& term, int num_qubits);

}  // namespace hamsim
