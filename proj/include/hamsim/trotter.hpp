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
#include <vector>

#include "hamsim/hamiltonian.hpp"

namespace hamsim {

/// One factor exp(-i a_j h_j * duration) of a product formula.
struct SeqEntry {
  std::size_t term = 0;  ///< 0-based index into the source spec
  double duration = 0.0;
  friend bool operator==(const SeqEntry&, const SeqEntry&) = default;
};

/// Fully expanded symmetric Trotter-Suzuki step, in execution order.
struct ExponentialSeq {
  std::vector<SeqEntry> entries;
  double dt = 0.0;
  int chi = 1;
  std::int64_t r = 1;
  std::size_t m = 0;
};

/// Suzuki recursion weight s_p = 1 / (4 - 4^(1/(2p-1))), p >= 2.
double s_coefficient(int p);

/// Order-chi step U_chi(dt) over the spec's term order. Holds exactly
/// 2 m 5^(chi-1) entries; adjacent factors of the same term are not merged.
ExponentialSeq build_ts_step(const HamiltonianSpec& spec, double dt, int chi);

/// chi = ceil(sqrt(log_{25/3}(m a_max t / eps) / 2)), clamped to >= 1.
int default_chi(std::size_t m, double a_max, double t, double epsilon);

/// min(eps, 2 m chi (5/3)^(chi-1) a_max t).
double clamp_epsilon(std::size_t m, double a_max, double t, double epsilon,
                     int chi);

/// Step count that bounds the Trotter error of the full evolution by eps/2:
/// ceil((2 m (5/3)^(chi-1) chi a_max t)^(1+1/2chi) / (eps/2)^(1/2chi)).
/// `doubled` multiplies the numerator by two before the ceiling.
std::int64_t default_r(std::size_t m, double a_max, double t, double epsilon,
                       int chi, bool doubled = false);

/// Empirical step-count estimates for random two-body Hamiltonians; these
/// carry no rigorous error guarantee. `order` is 1 or 2.
std::int64_t heuristic_r(double norm_h, double t, double epsilon, int n,
                         int order);

/// 16 ||H|| t / (15 n^(3/2)); above it the first-order formula is cheaper.
double order_crossover_epsilon(double norm_h, double t, int n);
/// 1 when epsilon is strictly above the crossover, otherwise 2.
int preferred_order(double epsilon, double norm_h, double t, int n);

enum class RPolicy {
  kBound,         ///< default_r
  kBoundDoubled,  ///< default_r with the extra factor of two
};

struct TSParams {
  int chi = 1;
  std::int64_t r = 1;
  double epsilon = 0.0;  ///< tolerance after clamping
  double a_max = 0.0;
  bool auto_chi = true;
  bool auto_r = true;
  bool epsilon_clamped = false;
};

/// Fills in chi and r (0 = choose automatically) and clamps epsilon.
TSParams resolve_ts_params(const HamiltonianSpec& spec, double t,
                           double epsilon, int chi, std::int64_t r,
                           RPolicy policy = RPolicy::kBound);

/// Debug dump: "chi=<int> r=<int> dt=<decimal>" then "<term> <duration>"
/// per line with 1-based term indices.
std::string serialize_sequence(const ExponentialSeq& seq);

}  // namespace hamsim
