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

#include <map>
#include <set>

#include "hamsim/hamiltonian.hpp"
#include "test_util.hpp"

namespace hamsim {
namespace {

constexpr const char* kThreeTerm = "n=3\n1 X1 X2\n2 Y1 Y2\n4 Y1 Z3\n";

TEST(ParseHamiltonian, ThreeTermExampleEncoding) {
  const HamiltonianSpec s = parse_hamiltonian(kThreeTerm);
  ASSERT_EQ(s.n, 3);
  ASSERT_EQ(s.m(), 3u);
  const auto e1 = encode(s.terms[0]);
  const auto e2 = encode(s.terms[1]);
  const auto e3 = encode(s.terms[2]);
  EXPECT_EQ(e1.counts, (std::array<std::size_t, 3>{2, 0, 0}));
  EXPECT_EQ(e1.of(PauliLetter::X), (std::vector<Qubit>{1, 2}));
  EXPECT_EQ(e2.counts, (std::array<std::size_t, 3>{0, 2, 0}));
  EXPECT_EQ(e2.of(PauliLetter::Y), (std::vector<Qubit>{1, 2}));
  EXPECT_EQ(e3.counts, (std::array<std::size_t, 3>{0, 1, 1}));
  EXPECT_EQ(e3.of(PauliLetter::Y), std::vector<Qubit>{1});
  EXPECT_EQ(e3.of(PauliLetter::Z), std::vector<Qubit>{3});
  EXPECT_DOUBLE_EQ(s.terms[2].coefficient(), 4.0);
}

TEST(ParseHamiltonian, SerializeIsByteStable) {
  const HamiltonianSpec s = parse_hamiltonian(kThreeTerm);
  EXPECT_EQ(serialize_hamiltonian(s), kThreeTerm);
  EXPECT_EQ(serialize_hamiltonian(parse_hamiltonian(serialize_hamiltonian(s))),
            kThreeTerm);
}

TEST(ParseHamiltonian, SingleZ) {
  const HamiltonianSpec s = parse_hamiltonian("n=1\n1.5 Z1");
  ASSERT_EQ(s.m(), 1u);
  EXPECT_EQ(encode(s.terms[0]).counts, (std::array<std::size_t, 3>{0, 0, 1}));
  EXPECT_EQ(serialize_hamiltonian(s), "n=1\n1.5 Z1\n");
}

TEST(ParseHamiltonian, CommentsBlankLinesAndLocality) {
  const HamiltonianSpec s =
      parse_hamiltonian("# model\nn=2\nk=2\n\n0.5 X1 X2  # coupling\n-1e-3 Z2\n");
  EXPECT_EQ(s.k, 2);
  ASSERT_EQ(s.m(), 2u);
  EXPECT_DOUBLE_EQ(s.terms[1].coefficient(), -1e-3);
}

TEST(ParseHamiltonian, Errors) {
  const auto line_of = [](const char* text) -> std::size_t {
    try {
      parse_hamiltonian(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("n=2\n1 X1 X1\n"), 2u);         // duplicate index
  EXPECT_EQ(line_of("n=2\n1 X3\n"), 2u);            // out of range
  EXPECT_EQ(line_of("n=2\nabc X1\n"), 2u);          // bad coefficient
  EXPECT_EQ(line_of("n=2\n1\n"), 2u);               // identity term
  EXPECT_EQ(line_of("n=2\n1 Q1\n"), 2u);            // bad letter
  EXPECT_EQ(line_of("n=3\nk=1\n1 X1 X2\n"), 3u);    // locality
  EXPECT_EQ(line_of("1 X1\n"), 1u);                 // missing header
  EXPECT_NE(line_of("n=2\n"), 0u);                  // no terms
  EXPECT_EQ(line_of("n=2\n1 X1\nk=2\n"), 3u);       // late k
  EXPECT_EQ(line_of("n=2\n1 X1\n"), 0u);
  try {
    parse_hamiltonian("n=2\n1 X1 X1\n");
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("duplicate"), std::string::npos);
  }
}

TEST(ParseHamiltonian, GroupMarkers) {
  const HamiltonianSpec s =
      parse_hamiltonian("n=2\n1 Z1\n# group\n1 X1\n2 X2\n#group\n3 Y1\n");
  ASSERT_TRUE(s.group_boundaries);
  EXPECT_EQ(*s.group_boundaries,
            (std::vector<GroupRange>{{0, 1}, {1, 3}, {3, 4}}));
  EXPECT_EQ(serialize_hamiltonian(s),
            "n=2\n# group\n1 Z1\n# group\n1 X1\n2 X2\n# group\n3 Y1\n");
  EXPECT_EQ(parse_hamiltonian(serialize_hamiltonian(s)), s);
}

TEST(ParseHamiltonian, RoundTripRandomSpecs) {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng.uniform_int(1, 8));
    HamiltonianSpec s = testing::random_spec(
        rng, n, static_cast<std::size_t>(rng.uniform_int(1, 12)), 4);
    if (trial % 3 == 0) s.k = 4;
    const HamiltonianSpec back = parse_hamiltonian(serialize_hamiltonian(s));
    EXPECT_EQ(back, s);
    for (const auto& t : back.terms) {
      const TermEncoding e = encode(t);
      std::set<Qubit> seen;
      for (int v = 0; v < 3; ++v) {
        EXPECT_EQ(e.counts[v], e.positions[v].size());
        for (Qubit q : e.positions[v]) EXPECT_TRUE(seen.insert(q).second);
      }
    }
  }
}

TEST(Honeycomb, SmallestCell) {
  const HamiltonianSpec s = make_honeycomb(1, 1, 1, 1, 1);
  EXPECT_EQ(s.n, 2);
  EXPECT_EQ(s.m(), 3u);
}

void expect_regular(const HamiltonianSpec& s) {
  std::map<Qubit, std::multiset<PauliLetter>> links;
  for (const auto& t : s.terms) {
    ASSERT_EQ(t.weight(), 2u);
    const auto letter = t.support()[0].second;
    EXPECT_EQ(t.support()[1].second, letter);
    for (const auto& [q, l] : t.support()) links[q].insert(l);
  }
  ASSERT_EQ(links.size(), static_cast<std::size_t>(s.n));
  for (const auto& [q, ls] : links) {
    EXPECT_EQ(ls, (std::multiset<PauliLetter>{PauliLetter::X, PauliLetter::Y,
                                              PauliLetter::Z}))
        << "qubit " << q;
  }
}

TEST(Honeycomb, RegularityAndCounts) {
  const HamiltonianSpec s = make_honeycomb(1, 2, 1, 1, 1);
  EXPECT_EQ(s.n, 4);
  EXPECT_EQ(s.m(), 6u);
  expect_regular(s);
  for (int rows = 1; rows <= 4; ++rows) {
    for (int cols = 1; cols <= 4; ++cols) {
      const HamiltonianSpec h = make_honeycomb(rows, cols, 0.5, 0.7, 0.9);
      EXPECT_EQ(h.n, 2 * rows * cols);
      EXPECT_EQ(h.m(), static_cast<std::size_t>(3 * rows * cols));
      expect_regular(h);
      for (const auto& t : h.terms) {
        const double expect = t.support()[0].second == PauliLetter::X   ? -0.5
                              : t.support()[0].second == PauliLetter::Y ? -0.7
                                                                        : -0.9;
        EXPECT_DOUBLE_EQ(t.coefficient(), expect);
      }
    }
  }
}

TEST(Honeycomb, ZeroCouplings) {
  EXPECT_EQ(make_honeycomb(1, 2, 0, 1, 1).m(), 4u);
  EXPECT_EQ(make_honeycomb(1, 2, 0, 1, 1, true).m(), 6u);
  EXPECT_THROW(make_honeycomb(0, 2, 1, 1, 1), std::invalid_argument);
}

TEST(Pairing, TwoQubitExpansion) {
  Eigen::MatrixXd vp = Eigen::MatrixXd::Zero(2, 2), vm = vp;
  vp(0, 1) = 1.0;
  const HamiltonianSpec s = make_pairing(2, {1.0, 1.0}, vp, vm);
  EXPECT_EQ(serialize_hamiltonian(s),
            "n=2\nk=2\n0.5 Z1\n0.5 Z2\n1 X1 X2\n1 Y1 Y2\n");
}

TEST(Pairing, MinusChannelSign) {
  Eigen::MatrixXd vp = Eigen::MatrixXd::Zero(2, 2), vm = vp;
  vm(0, 1) = 2.0;
  const HamiltonianSpec s = make_pairing(2, {0.0, 0.0}, vp, vm);
  ASSERT_EQ(s.m(), 2u);
  EXPECT_DOUBLE_EQ(s.terms[0].coefficient(), 2.0);
  EXPECT_DOUBLE_EQ(s.terms[1].coefficient(), -2.0);
}

TEST(Pairing, SingleQubitAndErrors) {
  const Eigen::MatrixXd z = Eigen::MatrixXd::Zero(1, 1);
  const HamiltonianSpec s = make_pairing(1, {3.0}, z, z);
  ASSERT_EQ(s.m(), 1u);
  EXPECT_DOUBLE_EQ(s.terms[0].coefficient(), 1.5);
  EXPECT_THROW(make_pairing(2, {1.0}, Eigen::MatrixXd::Zero(2, 2),
                            Eigen::MatrixXd::Zero(2, 2)),
               std::invalid_argument);
}

TEST(RandomTwoBody, SizeAndDeterminism) {
  for (int n = 2; n <= 8; ++n) {
    EXPECT_EQ(sample_random_twobody(n, 5).m(),
              static_cast<std::size_t>(9 * n * (n - 1) / 2));
  }
  EXPECT_EQ(sample_random_twobody(4, 99), sample_random_twobody(4, 99));
  EXPECT_NE(sample_random_twobody(4, 99), sample_random_twobody(4, 100));
  for (const auto& t : sample_random_twobody(3, 1).terms) {
    EXPECT_EQ(t.weight(), 2u);
  }
  EXPECT_THROW(sample_random_twobody(1, 1), std::invalid_argument);
}

TEST(Rng, NormalMoments) {
  Rng rng(3);
  double sum = 0, sq = 0;
  const int count = 200000;
  for (int i = 0; i < count; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  EXPECT_NEAR(sum / count, 0.0, 0.01);
  EXPECT_NEAR(sq / count, 1.0, 0.01);
}

TEST(Rng, UniformIntRange) {
  Rng rng(4);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(-2, 2);
    EXPECT_GE(v, -2);
    EXPECT_LE(v, 2);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
}

}  // namespace
}  // namespace hamsim
