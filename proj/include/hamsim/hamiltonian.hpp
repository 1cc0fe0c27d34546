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
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "hamsim/pauli.hpp"

namespace hamsim {

/// Half-open range [begin, end) of 0-based term positions.
struct GroupRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::size_t size() const { return end - begin; }
  friend bool operator==(const GroupRange&, const GroupRange&) = default;
};

/// A k-local Hamiltonian `sum_j a_j h_j` over `n` qubits.
struct HamiltonianSpec {
  int n = 0;
  std::optional<int> k;  ///< declared locality bound
  std::vector<PauliTerm> terms;
  /// Set by sort_hamiltonian(); partitions [0, m) into contiguous ranges.
  std::optional<std::vector<GroupRange>> group_boundaries;

  std::size_t m() const { return terms.size(); }
  /// max_j |a_j|
  double max_abs_coefficient() const;
  /// Throws std::invalid_argument when an invariant is violated.
  void validate() const;

  friend bool operator==(const HamiltonianSpec&, const HamiltonianSpec&) =
      default;
};

/// Parse failure; carries the 1-based source line.
class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Reads the line-based Hamiltonian format:
///
///     n=3
///     k=2            (optional)
///     1 X1 X2
///     2 Y1 Y2
///     # comment; a line reading "# group" opens a new term group
///
HamiltonianSpec parse_hamiltonian(std::string_view text);
HamiltonianSpec parse_hamiltonian(std::istream& in);
HamiltonianSpec load_hamiltonian(const std::string& path);

/// Inverse of parse_hamiltonian(); coefficients use shortest round-trip
/// decimal form and group boundaries are written as "# group" lines.
std::string serialize_hamiltonian(const HamiltonianSpec& spec);

/// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);
/// Strict decimal parse of the whole of `text`; nullopt on failure.
std::optional<double> parse_double(std::string_view text);

/// Kitaev honeycomb model on a periodic rows x cols lattice of two-site unit
/// cells. Site A of cell c is qubit 2c+1 and site B is qubit 2c+2. Each A
/// links to B of its own cell (z), of the cell to its left (x) and of the
/// cell below (y), so every qubit carries one link of each type. Terms are
/// emitted cell by cell in (x, y, z) order.
HamiltonianSpec make_honeycomb(int rows, int cols, double jx, double jy,
                               double jz, bool allow_zero = false);

/// Pairing model `1/2 sum_p g_p Z_p + sum_{r=+-} sum_{l>p} V^r_pl (X_p X_l +
/// r Y_p Y_l)`. Only the strict upper triangles of the V matrices are read.
HamiltonianSpec make_pairing(int n, const std::vector<double>& gamma,
                             const Eigen::MatrixXd& v_plus,
                             const Eigen::MatrixXd& v_minus,
                             bool allow_zero = false);

/// Random two-body ensemble: one term v_p w_l for every pair p < l and every
/// (v, w) in {X,Y,Z}^2, coefficients i.i.d. standard normal.
HamiltonianSpec sample_random_twobody(int n, std::uint64_t seed);

}  // namespace hamsim
