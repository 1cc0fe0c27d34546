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

#include "hamsim/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <stdexcept>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/random.hpp"
#include "hamsim/trotter.hpp"
#include "hamsim/verify.hpp"

namespace hamsim {

double error_fit(int order, double norm_h, double t, int n) {
  const double ht = norm_h * t;
  const double nn = static_cast<double>(n);
  if (order == 1) return std::pow(ht, 3) / (3.0 * nn * nn);
  if (order == 2) return std::pow(ht / std::sqrt(nn), 5) / 3000.0;
  throw std::invalid_argument("error fit exists for orders 1 and 2 only");
}

namespace {

void check_experiment_args(const std::vector<int>& ns, int samples) {
  if (ns.empty()) throw std::invalid_argument("need at least one n");
  if (samples < 1) throw std::invalid_argument("samples must be >= 1");
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("two-body ensemble needs n >= 2");
    check_qubit_cap(n, kDefaultQubitCap);
  }
}

template <class Real>
void measure_sample(const HamiltonianSpec& spec, const std::vector<double>& ts,
                    int order, ErrorSample* out) {
  const ExactEvolution<Real> exact(spec);
  const double norm_h = static_cast<double>(exact.norm());
  const double a_max = spec.max_abs_coefficient();
  const double m = static_cast<double>(spec.m());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double t = ts[k];
    const ExponentialSeq seq = build_ts_step(spec, t, order);
    const CMatrix<Real> approx = sequence_unitary<Real>(spec, seq);
    ErrorSample& s = out[k];
    s.t = t;
    s.r = 1;
    s.norm_h = norm_h;
    s.measured = static_cast<double>(
        spectral_distance<Real>(exact.unitary(static_cast<Real>(t)), approx));
    s.bound = order == 1 ? 2.0 * std::pow(3.0 * m * a_max * t / 2.0, 3)
                         : std::numeric_limits<double>::quiet_NaN();
    s.fit = error_fit(order, norm_h, t, spec.n);
  }
}

}  // namespace

ErrorReport ts_error_experiment(const std::vector<int>& ns,
                                const std::vector<double>& ts, int samples,
                                int order, std::uint64_t seed,
                                Precision precision) {
  check_experiment_args(ns, samples);
  if (ts.empty()) throw std::invalid_argument("need at least one t");
  for (double t : ts) {
    if (!(t > 0)) throw std::invalid_argument("t values must be positive");
  }
  if (order != 1 && order != 2) {
    throw std::invalid_argument("order must be 1 or 2");
  }
  ErrorReport report;
  report.order = order;
  report.seed = seed;
  const std::size_t tasks = ns.size() * static_cast<std::size_t>(samples);
  report.samples.resize(tasks * ts.size());

  const auto count = static_cast<std::ptrdiff_t>(tasks);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t task = 0; task < count; ++task) {
    const int n = ns[static_cast<std::size_t>(task) / samples];
    const int sample = static_cast<int>(task % samples);
    const std::uint64_t spec_seed =
        mix_seed(seed, static_cast<std::uint64_t>(n),
                 static_cast<std::uint64_t>(sample));
    const HamiltonianSpec spec = sample_random_twobody(n, spec_seed);
    ErrorSample* out = &report.samples[static_cast<std::size_t>(task) * ts.size()];
    for (std::size_t k = 0; k < ts.size(); ++k) {
      out[k].n = n;
      out[k].sample = sample;
      out[k].seed = spec_seed;
    }
    if (precision == Precision::kLongDouble) {
      measure_sample<long double>(spec, ts, order, out);
    } else {
      measure_sample<double>(spec, ts, order, out);
    }
  }
  return report;
}

std::vector<ErrorCell> ErrorReport::aggregate() const {
  std::vector<ErrorCell> cells;
  std::map<std::pair<int, double>, std::size_t> index;
  std::vector<std::vector<const ErrorSample*>> members;
  for (const auto& s : samples) {
    auto [it, inserted] = index.emplace(std::pair{s.n, s.t}, cells.size());
    if (inserted) {
      cells.push_back({});
      cells.back().n = s.n;
      cells.back().t = s.t;
      members.emplace_back();
    }
    members[it->second].push_back(&s);
  }
  for (std::size_t c = 0; c < cells.size(); ++c) {
    ErrorCell& cell = cells[c];
    const auto& ms = members[c];
    cell.count = ms.size();
    double sum = 0, sum_bound = 0, sum_fit = 0, sum_ratio = 0;
    for (const auto* s : ms) {
      sum += s->measured;
      sum_bound += s->bound;
      sum_fit += s->fit;
      sum_ratio += s->bound / s->measured;
    }
    const double k = static_cast<double>(ms.size());
    cell.mean_measured = sum / k;
    cell.mean_bound = sum_bound / k;
    cell.mean_fit = sum_fit / k;
    cell.mean_ratio = sum_ratio / k;
    double var = 0;
    for (const auto* s : ms) {
      var += (s->measured - cell.mean_measured) *
             (s->measured - cell.mean_measured);
    }
    cell.std_measured = ms.size() > 1 ? std::sqrt(var / (k - 1)) : 0.0;
  }
  return cells;
}

std::string to_csv(const ErrorReport& report) {
  std::string out = "n,t,sample,seed,r,measured,bound,fit,norm_h\n";
  for (const auto& s : report.samples) {
    out += std::to_string(s.n) + ',' + format_double(s.t) + ',' +
           std::to_string(s.sample) + ',' + std::to_string(s.seed) + ',' +
           std::to_string(s.r) + ',' + format_double(s.measured) + ',' +
           (std::isnan(s.bound) ? std::string("nan") : format_double(s.bound)) +
           ',' + format_double(s.fit) + ',' + format_double(s.norm_h) + '\n';
  }
  return out;
}

std::string summary(const ErrorReport& report) {
  std::string out = "# order=" + std::to_string(report.order) +
                    " seed=" + std::to_string(report.seed) + "\n";
  out += "n,t,count,mean_error,std_error,mean_bound,mean_fit,mean_ratio\n";
  for (const auto& c : report.aggregate()) {
    char line[256];
    std::snprintf(line, sizeof line, "%d,%.6g,%zu,%.6e,%.6e,%.6e,%.6e,%.6e\n",
                  c.n, c.t, c.count, c.mean_measured, c.std_measured,
                  c.mean_bound, c.mean_fit, c.mean_ratio);
    out += line;
  }
  return out;
}

NormFit norm_scaling_fit(const std::vector<int>& ns, int samples,
                         std::uint64_t seed) {
  check_experiment_args(ns, samples);
  std::vector<int> distinct;
  for (int n : ns) {
    if (std::find(distinct.begin(), distinct.end(), n) == distinct.end()) {
      distinct.push_back(n);
    }
  }
  if (distinct.size() < 2) {
    throw std::invalid_argument("norm fit needs at least two distinct n");
  }
  NormFit fit;
  fit.ns = distinct;
  fit.mean_norms.assign(distinct.size(), 0.0);
  const std::size_t tasks = distinct.size() * static_cast<std::size_t>(samples);
  std::vector<double> norms(tasks);
  const auto count = static_cast<std::ptrdiff_t>(tasks);
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t task = 0; task < count; ++task) {
    const int n = distinct[static_cast<std::size_t>(task) / samples];
    const auto sample = static_cast<std::uint64_t>(task % samples);
    const HamiltonianSpec spec = sample_random_twobody(
        n, mix_seed(seed, static_cast<std::uint64_t>(n), sample));
    norms[static_cast<std::size_t>(task)] =
        static_cast<double>(ExactEvolution<double>(spec).norm());
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    double sum = 0;
    for (int s = 0; s < samples; ++s) sum += norms[i * samples + s];
    fit.mean_norms[i] = sum / samples;
    const double x = std::log(static_cast<double>(distinct[i]));
    const double y = std::log(fit.mean_norms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double k = static_cast<double>(distinct.size());
  fit.exponent = (k * sxy - sx * sy) / (k * sxx - sx * sx);
  fit.coefficient = std::exp((sy - fit.exponent * sx) / k);
  return fit;
}

namespace {

struct ReferenceRow {
  int n;
  std::int64_t count1, count2;
};

struct ReferenceTable {
  double epsilon, t;
  std::vector<ReferenceRow> rows;
};

const std::vector<ReferenceTable>& reference_tables() {
  static const std::vector<ReferenceTable> tables = {
      {0.01,
       0.1,
       {{2, 36, 90},
        {4, 432, 540},
        {10, 8190, 8100},
        {40, 786240, 421200},
        {100, 14523300, 7573500}}},
      {1e-6,
       0.01,
       {{2, 108, 90},
        {4, 1296, 540},
        {10, 28350, 4050},
        {40, 2471040, 280800},
        {100, 45886500, 4455000}}},
  };
  return tables;
}

bool close(double a, double b) { return std::abs(a - b) <= 1e-12 * std::abs(b); }

}  // namespace

std::vector<ExpCountRow> extrapolate_exp_counts(const std::vector<int>& ns,
                                                double epsilon, double t) {
  if (!(epsilon > 0) || !(t > 0)) {
    throw std::invalid_argument("epsilon and t must be positive");
  }
  const ReferenceTable* reference = nullptr;
  for (const auto& table : reference_tables()) {
    if (close(epsilon, table.epsilon) && close(t, table.t)) reference = &table;
  }
  std::vector<ExpCountRow> rows;
  for (int n : ns) {
    if (n < 2) throw std::invalid_argument("n must be >= 2");
    ExpCountRow row;
    row.n = n;
    row.m = static_cast<std::size_t>(9 * n * (n - 1) / 2);
    row.norm_h = 1.3 * std::pow(static_cast<double>(n), 5.0 / 3.0);
    row.r1 = heuristic_r(row.norm_h, t, epsilon, n, 1);
    row.r2 = heuristic_r(row.norm_h, t, epsilon, n, 2);
    row.count1 = 2 * static_cast<std::int64_t>(row.m) * row.r1;
    row.count2 = 10 * static_cast<std::int64_t>(row.m) * row.r2;
    row.ratio = static_cast<double>(row.count1) / static_cast<double>(row.count2);
    if (reference != nullptr) {
      for (const auto& ref : reference->rows) {
        if (ref.n != n) continue;
        row.reference1 = ref.count1;
        row.reference2 = ref.count2;
        row.deviates = ref.count1 != row.count1 || ref.count2 != row.count2;
      }
    }
    rows.push_back(row);
  }
  return rows;
}

std::string format_exp_counts(const std::vector<ExpCountRow>& rows) {
  std::string out =
      "n,m,norm_h,r1,r2,exp_order1,exp_order2,ratio,ref_order1,ref_order2,"
      "deviation\n";
  for (const auto& r : rows) {
    char line[320];
    std::snprintf(line, sizeof line, "%d,%zu,%.4f,%lld,%lld,%lld,%lld,%.2f,",
                  r.n, r.m, r.norm_h, static_cast<long long>(r.r1),
                  static_cast<long long>(r.r2),
                  static_cast<long long>(r.count1),
                  static_cast<long long>(r.count2), r.ratio);
    out += line;
    out += r.reference1 ? std::to_string(*r.reference1) : std::string("-");
    out += ',';
    out += r.reference2 ? std::to_string(*r.reference2) : std::string("-");
    out += ',';
    out += !r.reference1 ? "-" : (r.deviates ? "yes" : "no");
    out += '\n';
  }
  return out;
}

}  // namespace hamsim
