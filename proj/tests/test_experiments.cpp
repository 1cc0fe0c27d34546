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

#include <gtest/gtest.h>

#include <cmath>

#include "hamsim/experiments.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/random.hpp"

namespace hamsim {
namespace {

TEST(ErrorFit, Values) {
  EXPECT_NEAR(error_fit(1, 2.0, 0.5, 2), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(error_fit(2, 4.0, 1.0, 4), 32.0 / 3000.0, 1e-15);
  EXPECT_THROW(error_fit(3, 1, 1, 2), std::invalid_argument);
}

TEST(TsErrorExperiment, ShapeAndDeterminism) {
  const std::vector<double> ts{1e-2, 1e-1};
  const ErrorReport a = ts_error_experiment({2, 3}, ts, 3, 1, 42);
  const ErrorReport b = ts_error_experiment({2, 3}, ts, 3, 1, 42);
  ASSERT_EQ(a.samples.size(), 12u);
  EXPECT_EQ(to_csv(a), to_csv(b));
  for (const auto& s : a.samples) {
    EXPECT_GT(s.measured, 0.0);
    EXPECT_LE(s.measured, s.bound);
    EXPECT_EQ(s.seed, mix_seed(42, static_cast<std::uint64_t>(s.n),
                               static_cast<std::uint64_t>(s.sample)));
  }
  const auto cells = a.aggregate();
  ASSERT_EQ(cells.size(), 4u);
  EXPECT_EQ(cells[0].count, 3u);
  EXPECT_EQ(cells[0].n, 2);
  EXPECT_DOUBLE_EQ(cells[0].t, 1e-2);
  EXPECT_NE(summary(a).find("mean_ratio"), std::string::npos);
  EXPECT_EQ(to_csv(a).substr(0, 9), "n,t,sampl");
}

TEST(TsErrorExperiment, SecondOrderHasNoBound) {
  const ErrorReport r = ts_error_experiment({2}, {0.1}, 2, 2, 1);
  for (const auto& s : r.samples) EXPECT_TRUE(std::isnan(s.bound));
  EXPECT_NE(to_csv(r).find(",nan,"), std::string::npos);
}

TEST(TsErrorExperiment, RejectsBadArguments) {
  EXPECT_THROW(ts_error_experiment({1}, {0.1}, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(ts_error_experiment({2}, {0.0}, 1, 1, 1), std::invalid_argument);
  EXPECT_THROW(ts_error_experiment({2}, {0.1}, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(ts_error_experiment({2}, {0.1}, 1, 3, 1), std::invalid_argument);
  EXPECT_THROW(ts_error_experiment({9}, {0.1}, 1, 1, 1), std::invalid_argument);
}

TEST(TsErrorExperiment, LongDoubleMatchesDoubleAtLargeT) {
  const ErrorReport d = ts_error_experiment({3}, {0.1}, 2, 1, 5);
  const ErrorReport l =
      ts_error_experiment({3}, {0.1}, 2, 1, 5, Precision::kLongDouble);
  for (std::size_t i = 0; i < d.samples.size(); ++i) {
    EXPECT_NEAR(d.samples[i].measured, l.samples[i].measured,
                1e-9 * d.samples[i].measured);
  }
}

TEST(NormScalingFit, RecoversPowerLawOnSmallGrid) {
  const NormFit fit = norm_scaling_fit({2, 3, 4}, 5, 1);
  EXPECT_EQ(fit.ns, (std::vector<int>{2, 3, 4}));
  EXPECT_GT(fit.exponent, 1.0);
  EXPECT_LT(fit.exponent, 2.5);
  EXPECT_THROW(norm_scaling_fit({3, 3}, 5, 1), std::invalid_argument);
}

TEST(ExtrapolateExpCounts, CoarseToleranceReference) {
  const auto rows = extrapolate_exp_counts({2, 4, 10, 40, 100}, 0.01, 0.1);
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0].count1, 36);
  EXPECT_EQ(rows[0].count2, 90);
  EXPECT_NEAR(rows[0].ratio, 0.40, 0.005);
  EXPECT_FALSE(rows[0].deviates);
  EXPECT_EQ(rows[1].count1, 432);
  EXPECT_EQ(rows[1].count2, 540);
  EXPECT_NEAR(rows[1].ratio, 0.80, 0.005);
  EXPECT_FALSE(rows[1].deviates);
  EXPECT_EQ(rows[2].count2, 8100);
  EXPECT_EQ(rows[2].reference1, 8190);
  EXPECT_NE(rows[2].count1, 8190);
  EXPECT_TRUE(rows[2].deviates);
  for (const auto& r : rows) {
    EXPECT_EQ(r.m, static_cast<std::size_t>(9 * r.n * (r.n - 1) / 2));
    EXPECT_EQ(r.count1, 2 * static_cast<std::int64_t>(r.m) * r.r1);
    EXPECT_EQ(r.count2, 10 * static_cast<std::int64_t>(r.m) * r.r2);
  }
  const std::string text = format_exp_counts(rows);
  EXPECT_NE(text.find("2,9,"), std::string::npos);
  EXPECT_NE(text.find(",yes\n"), std::string::npos);
}

TEST(ExtrapolateExpCounts, FineToleranceFlagsSmallestRow) {
  const auto rows = extrapolate_exp_counts({2, 10}, 1e-6, 0.01);
  EXPECT_TRUE(rows[0].deviates);
  EXPECT_EQ(rows[0].reference1, 108);
  EXPECT_EQ(rows[1].count2, 4050);
}

TEST(ExtrapolateExpCounts, UnknownSettingsHaveNoReference) {
  const auto rows = extrapolate_exp_counts({3}, 0.02, 0.1);
  EXPECT_FALSE(rows[0].reference1.has_value());
  EXPECT_NE(format_exp_counts(rows).find(",-,-,-\n"), std::string::npos);
}

}  // namespace
}  // namespace hamsim
