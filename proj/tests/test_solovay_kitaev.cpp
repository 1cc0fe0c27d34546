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
#include <cstdio>
#include <filesystem>
#include <numbers>

#include <Eigen/SVD>

#include "hamsim/solovay_kitaev.hpp"
#include "hamsim/random.hpp"

namespace hamsim {
namespace {

double matrix_distance(const Eigen::Matrix2cd& a, const Eigen::Matrix2cd& b) {
  // Phase-invariant spectral distance on 2x2 by sampling the phase finely.
  double best = 1e9;
  for (int k = 0; k < 20000; ++k) {
    const std::complex<double> ph = std::polar(1.0, 2 * std::numbers::pi * k / 20000);
    Eigen::JacobiSVD<Eigen::Matrix2cd> svd(a - ph * b);
    best = std::min(best, svd.singularValues()(0));
  }
  return best;
}

std::shared_ptr<const BaseNet> shared_net() {
  static const auto net = std::make_shared<const BaseNet>(12);
  return net;
}

TEST(Su2, GateMatrices) {
  Eigen::Matrix2cd h;
  h << 1, 1, 1, -1;
  h /= std::sqrt(2.0);
  EXPECT_LT(matrix_distance(Su2::hadamard().matrix(), h), 1e-4);
  Eigen::Matrix2cd t;
  t << 1, 0, 0, std::polar(1.0, std::numbers::pi / 4);
  EXPECT_LT(matrix_distance(Su2::t_gate().matrix(), t), 1e-4);
  Eigen::Matrix2cd rz;
  rz << std::polar(1.0, -0.15), 0, 0, std::polar(1.0, 0.15);
  EXPECT_LT((Su2::rz(0.3).matrix() - rz).norm(), 1e-15);
}

TEST(Su2, FromMatrixRoundTrip) {
  Rng rng(1);
  for (int i = 0; i < 50; ++i) {
    const Su2 u = Su2::rotation(rng.uniform(0, 6), 0.6, 0.0, 0.8) *
                  Su2::rz(rng.uniform(-3, 3));
    const Eigen::Matrix2cd m = std::polar(1.0, rng.uniform(0, 6)) * u.matrix();
    EXPECT_LT(su2_distance(Su2::from_matrix(m), u), 1e-12);
  }
}

TEST(Su2, DistanceMatchesMatrixOracle) {
  Rng rng(2);
  for (int i = 0; i < 10; ++i) {
    const Su2 a = Su2::rotation(rng.uniform(0, 6), 0, 0.6, 0.8);
    const Su2 b = Su2::rotation(rng.uniform(0, 6), 1, 0, 0);
    EXPECT_NEAR(su2_distance(a, b), matrix_distance(a.matrix(), b.matrix()), 1e-4);
  }
}

TEST(Words, TSixIsMinusHalfPiRotation) {
  EXPECT_LT(su2_distance(word_unitary("TTTTTT"), Su2::rz(-std::numbers::pi / 2)),
            1e-12);
  EXPECT_LT(su2_distance(word_unitary("TTTTTTTT"), Su2::identity()), 1e-12);
  EXPECT_LT(su2_distance(word_unitary("HH"), Su2::identity()), 1e-12);
  EXPECT_THROW(word_unitary("HX"), std::invalid_argument);
}

TEST(Words, TimeOrder) {
  // "HT" applies H first: T * H as a matrix product.
  const Su2 ht = word_unitary("HT");
  EXPECT_LT(su2_distance(ht, Su2::t_gate() * Su2::hadamard()), 1e-12);
}

TEST(Words, SimplifyAndInvert) {
  EXPECT_EQ(simplify_word("HHT"), "T");
  EXPECT_EQ(simplify_word("TTTTTTTTH"), "H");
  EXPECT_EQ(simplify_word("THHT"), "TT");
  Rng rng(3);
  for (int i = 0; i < 100; ++i) {
    std::string w;
    const auto len = rng.uniform_int(0, 40);
    for (std::int64_t k = 0; k < len; ++k) w += rng.uniform_int(0, 1) ? 'H' : 'T';
    EXPECT_LT(su2_distance(word_unitary(simplify_word(w)), word_unitary(w)), 1e-9);
    EXPECT_LT(su2_distance(word_unitary(w + invert_word(w)), Su2::identity()),
              1e-9);
    EXPECT_LE(simplify_word(w).size(), w.size());
  }
}

TEST(BaseNet, ContentsAreShortestDistinctWords) {
  const BaseNet net(6);
  EXPECT_EQ(net.word(0), "");
  for (std::size_t i = 0; i < net.size(); ++i) {
    EXPECT_LE(static_cast<int>(net.word(i).size()), 6);
    EXPECT_LT(su2_distance(net.point(i), word_unitary(net.word(i))), 1e-12);
    for (std::size_t j = 0; j < i; ++j) {
      EXPECT_GT(su2_distance(net.point(i), net.point(j)), 1e-6);
    }
  }
}

TEST(BaseNet, NearestIsExhaustiveMinimum) {
  const auto net = shared_net();
  Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const Su2 target = Su2::rotation(rng.uniform(0, 6), 0.36, 0.48, 0.8);
    const std::size_t k = net->nearest(target);
    for (std::size_t j = 0; j < net->size(); ++j) {
      EXPECT_LE(su2_distance(net->point(k), target),
                su2_distance(net->point(j), target) + 1e-12);
    }
  }
}

TEST(BaseNet, SaveLoadRoundTrip) {
  const BaseNet net(7);
  const auto path =
      (std::filesystem::temp_directory_path() / "hamsim_test_net.txt").string();
  net.save(path);
  const BaseNet back = BaseNet::load(path);
  ASSERT_EQ(back.size(), net.size());
  for (std::size_t i = 0; i < net.size(); ++i) EXPECT_EQ(back.word(i), net.word(i));
  EXPECT_EQ(BaseNet::load_or_build(path, 7).size(), net.size());
  EXPECT_EQ(BaseNet::load_or_build(path, 5).max_length(), 5);
  std::remove(path.c_str());
}

TEST(GroupCommutator, ReproducesTarget) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const double angle = rng.uniform(1e-4, 0.3);
    const double ax = rng.normal(), ay = rng.normal(), az = rng.normal();
    const double norm = std::sqrt(ax * ax + ay * ay + az * az);
    const Su2 delta = Su2::rotation(angle, ax / norm, ay / norm, az / norm);
    const auto [v, w] = group_commutator(delta);
    EXPECT_LT(su2_distance(v * w * v.adjoint() * w.adjoint(), delta), 1e-9);
  }
}

TEST(SolovayKitaev, DecomposeMeetsTolerance) {
  const SolovayKitaev sk(shared_net());
  Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    const Su2 target = Su2::rz(rng.uniform(-std::numbers::pi, std::numbers::pi));
    const SkResult res = sk.decompose(target, 1e-2);
    EXPECT_LE(res.distance, 1e-2);
    EXPECT_NEAR(su2_distance(word_unitary(res.word), target), res.distance, 1e-12);
    for (char c : res.word) EXPECT_TRUE(c == 'H' || c == 'T');
  }
}

TEST(SolovayKitaev, DeeperIsCloser) {
  const SolovayKitaev sk(shared_net());
  Rng rng(7);
  double sum1 = 0, sum3 = 0;
  for (int i = 0; i < 10; ++i) {
    const Su2 target = Su2::rz(rng.uniform(-3, 3));
    sum1 += sk.approximate(target, 1).distance;
    sum3 += sk.approximate(target, 3).distance;
  }
  EXPECT_LT(sum3, sum1);
}

TEST(SolovayKitaev, UnreachableToleranceThrows) {
  const SolovayKitaev sk(shared_net(), 1);
  try {
    sk.decompose(Su2::rz(0.123), 1e-9);
    FAIL() << "expected SkToleranceError";
  } catch (const SkToleranceError& e) {
    EXPECT_DOUBLE_EQ(e.requested(), 1e-9);
    EXPECT_GT(e.achieved(), 1e-9);
  }
}

TEST(SkTolerance, Value) {
  EXPECT_NEAR(sk_tolerance(0.01, 3, 1, 10), 0.01 / 120, 1e-18);
  EXPECT_NEAR(sk_tolerance(0.01, 3, 2, 10), 0.01 / 600, 1e-18);
}

}  // namespace
}  // namespace hamsim
