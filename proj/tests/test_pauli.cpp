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

#include "hamsim/pauli.hpp"

namespace hamsim {
namespace {

TEST(PauliTerm, SortsSupportByQubit) {
  PauliTerm t(2.0, {{4, PauliLetter::Z}, {1, PauliLetter::X}, {2, PauliLetter::Y}});
  EXPECT_EQ(t.letters_string(), "X1 Y2 Z4");
  EXPECT_EQ(t.weight(), 3u);
  EXPECT_EQ(t.max_qubit(), 4u);
  EXPECT_EQ(t.at(3), PauliLetter::I);
  EXPECT_EQ(t.at(2), PauliLetter::Y);
}

TEST(PauliTerm, RejectsBadFactors) {
  EXPECT_THROW(PauliTerm(1.0, {{1, PauliLetter::X}, {1, PauliLetter::X}}),
               std::invalid_argument);
  EXPECT_THROW(PauliTerm(1.0, {{0, PauliLetter::X}}), std::invalid_argument);
  EXPECT_THROW(PauliTerm(1.0, {{1, PauliLetter::I}}), std::invalid_argument);
}

TEST(PauliLetter, CharRoundTrip) {
  for (char c : {'I', 'X', 'Y', 'Z'}) EXPECT_EQ(to_char(letter_from_char(c)), c);
  EXPECT_THROW(letter_from_char('Q'), std::invalid_argument);
}

TEST(TermEncoding, MatchesLetterPositions) {
  PauliTerm t(4.0, {{1, PauliLetter::Y}, {3, PauliLetter::Z}});
  const TermEncoding e = encode(t);
  EXPECT_EQ(e.counts, (std::array<std::size_t, 3>{0, 1, 1}));
  EXPECT_EQ(e.of(PauliLetter::Y), std::vector<Qubit>{1});
  EXPECT_EQ(e.of(PauliLetter::Z), std::vector<Qubit>{3});
  EXPECT_TRUE(e.of(PauliLetter::X).empty());
  EXPECT_EQ(decode(4.0, e), t);
}

TEST(TermEncoding, DecodeRejectsInconsistentCounts) {
  TermEncoding e;
  e.counts = {2, 0, 0};
  e.positions[0] = {1};
  EXPECT_THROW(decode(1.0, e), std::invalid_argument);
}

TEST(PauliMask, QubitOneIsMostSignificant) {
  PauliTerm t(1.0, {{1, PauliLetter::X}, {2, PauliLetter::Y}, {3, PauliLetter::Z}});
  const PauliMask m = to_mask(t, 3);
  EXPECT_EQ(m.x, 0b110u);
  EXPECT_EQ(m.z, 0b011u);
  EXPECT_EQ(m.num_y, 1);
  EXPECT_THROW(to_mask(t, 2), std::out_of_range);
}

}  // namespace
}  // namespace hamsim
