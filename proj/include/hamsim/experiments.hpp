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
#include <optional>
#include <string>
#include <vector>

namespace hamsim {

enum class Precision { kDouble, kLongDouble };

/// One (n, t, sample) measurement of a single product-formula step.
struct ErrorSample {
  int n = 0;
  double t = 0.0;
  int sample = 0;
  std::uint64_t seed = 0;  ///< seed of the sampled Hamiltonian
  std::int64_t r = 1;
  double measured = 0.0;   ///< ||exp(-iHt) - U_order(t)||
  double bound = 0.0;      ///< 2 (3 m max|a| t / 2)^3; NaN for order 2
  double fit = 0.0;        ///< empirical scaling model at this sample's norm
  double norm_h = 0.0;     ///< ||H||
};

/// Mean and sample standard deviation over one (n, t) cell.
struct ErrorCell {
  int n = 0;
  double t = 0.0;
  std::size_t count = 0;
  double mean_measured = 0.0;
  double std_measured = 0.0;
  double mean_bound = 0.0;
  double mean_fit = 0.0;
  double mean_ratio = 0.0;  ///< mean of bound / measured
};

struct ErrorReport {
  int order = 1;
  std::uint64_t seed = 0;
  std::vector<ErrorSample> samples;

  /// Cells in (n, t) order of first appearance.
  std::vector<ErrorCell> aggregate() const;
};

/// Empirical single-step error models for the random two-body ensemble:
/// (||H|| t)^3 / (3 n^2) for order 1, (||H|| t / sqrt n)^5 / 3000 for order 2.
double error_fit(int order, double norm_h, double t, int n);

/// For every n and sample, draws a random two-body Hamiltonian and measures
/// the order-1 or order-2 step error at each t. Samples run in parallel; the
/// result does not depend on the thread count.
ErrorReport ts_error_experiment(const std::vector<int>& ns,
                                const std::vector<double>& ts, int samples,
                                int order, std::uint64_t seed,
                                Precision precision = Precision::kDouble);

/// Per-sample CSV with a header row.
std::string to_csv(const ErrorReport& report);
/// Plot-ready aggregate table (n, t, mean error, std, bound, fit, ratio).
std::string summary(const ErrorReport& report);

struct NormFit {
  double coefficient = 0.0;  ///< c in ||H|| ~ c n^alpha
  double exponent = 0.0;     ///< alpha
  std::vector<int> ns;
  std::vector<double> mean_norms;
};

/// Least-squares line through (log n, log mean ||H||).
NormFit norm_scaling_fit(const std::vector<int>& ns, int samples,
                         std::uint64_t seed);

struct ExpCountRow {
  int n = 0;
  std::size_t m = 0;
  double norm_h = 0.0;
  std::int64_t r1 = 0, r2 = 0;
  std::int64_t count1 = 0;  ///< 2 m r1
  std::int64_t count2 = 0;  ///< 10 m r2
  double ratio = 0.0;       ///< count1 / count2
  std::optional<std::int64_t> reference1, reference2;
  bool deviates = false;    ///< a reference cell differs from the computed one
};

/// Exponential counts for the random two-body ensemble with
/// ||H|| = 1.3 n^(5/3), m = 9 n (n - 1) / 2 and the heuristic step counts.
/// Rows are compared against the built-in reference counts when
/// (epsilon, t) matches one of them.
std::vector<ExpCountRow> extrapolate_exp_counts(const std::vector<int>& ns,
                                                double epsilon, double t);

std::string format_exp_counts(const std::vector<ExpCountRow>& rows);

}  // namespace hamsim
