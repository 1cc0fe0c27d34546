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

#include "hamsim/pauli.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsim {

char to_char(PauliLetter letter) {
  switch (letter) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

PauliLetter letter_from_char(char c) {
  switch (c) {
    case 'I':
      return PauliLetter::I;
    case 'X':
      return PauliLetter::X;
    case 'Y':
      return PauliLetter::Y;
    case 'Z':
      return PauliLetter::Z;
    default:
      throw std::invalid_argument(std::string("not a Pauli letter: '") + c +
                                  "'");
  }
}

PauliTerm::PauliTerm(double coefficient, std::vector<Factor> support)
    : coefficient_(coefficient), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end(),
            [](const Factor& a, const Factor& b) { return a.first < b.first; });
  for (std::size_t i = 0; i < support_.size(); ++i) {
    if (support_[i].first == 0) {
      throw std::invalid_argument("qubit indices are 1-based");
    }
    if (support_[i].second == PauliLetter::I) {
      throw std::invalid_argument("identity factors are implicit");
    }
    if (i > 0 && support_[i].first == support_[i - 1].first) {
      throw std::invalid_argument("duplicate qubit index " +
                                  std::to_string(support_[i].first));
    }
  }
}

PauliLetter PauliTerm::at(Qubit q) const {
  auto it = std::lower_bound(
      support_.begin(), support_.end(), q,
      [](const Factor& f, Qubit value) { return f.first < value; });
  if (it != support_.end() && it->first == q) return it->second;
  return PauliLetter::I;
}

Qubit PauliTerm::max_qubit() const {
  return support_.empty() ? 0 : support_.back().first;
}

std::string PauliTerm::letters_string() const {
  std::string out;
  for (const auto& [q, letter] : support_) {
    if (!out.empty()) out += ' ';
    out += to_char(letter);
    out += std::to_string(q);
  }
  return out;
}

const std::vector<Qubit>& TermEncoding::of(PauliLetter letter) const {
  if (letter == PauliLetter::I) {
    throw std::invalid_argument("identity positions are not stored");
  }
  return positions[static_cast<int>(letter) - 1];
}

TermEncoding encode(const PauliTerm& term) {
  TermEncoding enc;
  for (const auto& [q, letter] : term.support()) {
    enc.positions[static_cast<int>(letter) - 1].push_back(q);
  }
  for (int v = 0; v < 3; ++v) enc.counts[v] = enc.positions[v].size();
  return enc;
}

PauliTerm decode(double coefficient, const TermEncoding& encoding) {
  std::vector<PauliTerm::Factor> support;
  for (int v = 0; v < 3; ++v) {
    if (encoding.counts[v] != encoding.positions[v].size()) {
      throw std::invalid_argument("term encoding count/position mismatch");
    }
    for (Qubit q : encoding.positions[v]) {
      support.emplace_back(q, static_cast<PauliLetter>(v + 1));
    }
  }
  return PauliTerm(coefficient, std::move(support));
}

PauliMask to_mask(const PauliTerm& term, int num_qubits) {
  if (num_qubits > 63) throw std::out_of_range("mask form supports n <= 63");
  PauliMask m;
  for (const auto& [q, letter] : term.support()) {
    if (q > static_cast<Qubit>(num_qubits)) {
      throw std::out_of_range("qubit outside register");
    }
    const std::uint64_t bit = std::uint64_t{1} << (num_qubits - q);
    if (letter == PauliLetter::X || letter == PauliLetter::Y) m.x |= bit;
    if (letter == PauliLetter::Z || letter == PauliLetter::Y) m.z |= bit;
    if (letter == PauliLetter::Y) ++m.num_y;
  }
  return m;
}

}  // namespace hamsim
