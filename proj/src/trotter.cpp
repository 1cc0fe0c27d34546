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

#include "hamsim/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace hamsim {

double s_coefficient(int p) {
  if (p < 2) throw std::invalid_argument("s_p is defined for p >= 2");
  return 1.0 / (4.0 - std::pow(4.0, 1.0 / (2.0 * p - 1.0)));
}

namespace {

void append_step(int order, double tau, std::size_t m,
                 std::vector<SeqEntry>& out) {
  if (order == 1) {
    for (std::size_t j = 0; j < m; ++j) out.push_back({j, tau / 2});
    for (std::size_t j = m; j-- > 0;) out.push_back({j, tau / 2});
    return;
  }
  const double s = s_coefficient(order);
  append_step(order - 1, s * tau, m, out);
  append_step(order - 1, s * tau, m, out);
  append_step(order - 1, (1.0 - 4.0 * s) * tau, m, out);
  append_step(order - 1, s * tau, m, out);
  append_step(order - 1, s * tau, m, out);
}

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(name) + " must be positive");
  }
}

}  // namespace

ExponentialSeq build_ts_step(const HamiltonianSpec& spec, double dt, int chi) {
  if (chi < 1) throw std::invalid_argument("Trotter-Suzuki order must be >= 1");
  if (spec.terms.empty()) throw std::invalid_argument("empty Hamiltonian");
  ExponentialSeq seq;
  seq.dt = dt;
  seq.chi = chi;
  seq.m = spec.terms.size();
  std::size_t count = 2 * seq.m;
  for (int p = 1; p < chi; ++p) count *= 5;
  seq.entries.reserve(count);
  append_step(chi, dt, seq.m, seq.entries);
  return seq;
}

int default_chi(std::size_t m, double a_max, double t, double epsilon) {
  require_positive(static_cast<double>(m), "m");
  require_positive(a_max, "max |a_j|");
  require_positive(t, "t");
  require_positive(epsilon, "epsilon");
  const double arg = static_cast<double>(m) * a_max * t / epsilon;
  if (arg <= 1.0) return 1;
  const double value = std::sqrt(std::log(arg) / std::log(25.0 / 3.0) / 2.0);
  return std::max(1, static_cast<int>(std::ceil(value)));
}

double clamp_epsilon(std::size_t m, double a_max, double t, double epsilon,
                     int chi) {
  const double bound = 2.0 * static_cast<double>(m) * chi *
                       std::pow(5.0 / 3.0, chi - 1) * a_max * t;
  return std::min(epsilon, bound);
}

std::int64_t default_r(std::size_t m, double a_max, double t, double epsilon,
                       int chi, bool doubled) {
  require_positive(a_max, "max |a_j|");
  require_positive(t, "t");
  require_positive(epsilon, "epsilon");
  if (chi < 1) throw std::invalid_argument("chi must be >= 1");
  const double base = 2.0 * static_cast<double>(m) *
                      std::pow(5.0 / 3.0, chi - 1) * chi * a_max * t;
  const double inv = 1.0 / (2.0 * chi);
  double log_r = (1.0 + inv) * std::log(base) - inv * std::log(epsilon / 2.0);
  if (doubled) log_r += std::log(2.0);
  if (log_r > std::log(1e15)) {
    throw std::overflow_error("step count exceeds 1e15");
  }
  const double r = std::ceil(std::exp(log_r));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(r));
}

std::int64_t heuristic_r(double norm_h, double t, double epsilon, int n,
                         int order) {
  require_positive(norm_h, "||H||");
  require_positive(t, "t");
  require_positive(epsilon, "epsilon");
  if (n < 1) throw std::invalid_argument("n must be positive");
  const double ht = norm_h * t;
  const double nn = static_cast<double>(n);
  double value = 0.0;
  if (order == 1) {
    value = std::sqrt(2.0 / (3.0 * nn * nn * epsilon)) * std::pow(ht, 1.5);
  } else if (order == 2) {
    value = (1.0 / 30.0) * std::pow(540.0 / (std::pow(nn, 2.5) * epsilon), 0.25) *
            std::pow(ht, 1.25);
  } else {
    throw std::invalid_argument("heuristic step count needs order 1 or 2");
  }
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(value)));
}

double order_crossover_epsilon(double norm_h, double t, int n) {
  require_positive(norm_h, "||H||");
  require_positive(t, "t");
  return 16.0 * norm_h * t / (15.0 * std::pow(static_cast<double>(n), 1.5));
}

int preferred_order(double epsilon, double norm_h, double t, int n) {
  return epsilon > order_crossover_epsilon(norm_h, t, n) ? 1 : 2;
}

TSParams resolve_ts_params(const HamiltonianSpec& spec, double t,
                           double epsilon, int chi, std::int64_t r,
                           RPolicy policy) {
  require_positive(t, "t");
  require_positive(epsilon, "epsilon");
  if (chi < 0 || r < 0) throw std::invalid_argument("chi and r must be >= 0");
  TSParams p;
  p.a_max = spec.max_abs_coefficient();
  p.auto_chi = chi == 0;
  p.auto_r = r == 0;
  p.epsilon = epsilon;
  if (p.a_max == 0.0) {
    // exp(-iHt) is the identity; any positive chi and r are exact.
    p.chi = p.auto_chi ? 1 : chi;
    p.r = p.auto_r ? 1 : r;
    return p;
  }
  p.chi = p.auto_chi ? default_chi(spec.m(), p.a_max, t, epsilon) : chi;
  p.epsilon = clamp_epsilon(spec.m(), p.a_max, t, epsilon, p.chi);
  p.epsilon_clamped = p.epsilon < epsilon;
  p.r = p.auto_r ? default_r(spec.m(), p.a_max, t, p.epsilon, p.chi,
                             policy == RPolicy::kBoundDoubled)
                 : r;
  return p;
}

std::string serialize_sequence(const ExponentialSeq& seq) {
  std::string out = "chi=" + std::to_string(seq.chi) +
                    " r=" + std::to_string(seq.r) +
                    " dt=" + format_double(seq.dt) + "\n";
  for (const auto& e : seq.entries) {
    out += std::to_string(e.term + 1);
    out += ' ';
    out += format_double(e.duration);
    out += '\n';
  }
  return out;
}

}  // namespace hamsim
