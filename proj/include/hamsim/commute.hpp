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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamsim/hamiltonian.hpp"
#include "hamsim/pauli.hpp"

namespace hamsim {

enum class GroupMode { kCommuting, kDisjoint, kNone };

std::string to_string(GroupMode mode);
GroupMode group_mode_from_string(std::string_view s);

/// Number of qubits on which `a` and `b` carry different non-identity
/// letters, i.e. sum over v != w of |S_v(a) & S_w(b)|.
std::size_t anticommuting_overlap(const PauliTerm& a, const PauliTerm& b);

/// Pauli strings commute iff their anticommuting overlap is even.
bool commutes(const PauliTerm& a, const PauliTerm& b);

/// True iff the supports share no qubit at all (same-letter overlaps count
/// as shared).
bool disjoint(const PauliTerm& a, const PauliTerm& b);

struct GroupPartition {
  /// Original 0-based term indices, group by group.
  std::vector<std::vector<std::size_t>> groups;
  GroupMode mode = GroupMode::kNone;
};

/// Greedy first-fit grouping: each term, in input order, joins the first
/// existing group whose every member passes the mode's pairwise test;
/// otherwise it opens a new group. The returned spec lists terms group by
/// group with group_boundaries set. kNone returns the input unchanged with
/// one group per term.
std::pair<HamiltonianSpec, GroupPartition> sort_hamiltonian(
    const HamiltonianSpec& spec, GroupMode mode);

struct GroupStats {
  std::size_t num_groups = 0;  ///< m-bar
  std::size_t max_size = 0;
  double mean_size = 0.0;
};

GroupStats group_count_stats(const GroupPartition& partition);

}  // namespace hamsim
