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

#include "hamsim/commute.hpp"

#include <algorithm>
#include <stdexcept>

namespace hamsim {

std::string to_string(GroupMode mode) {
  switch (mode) {
    case GroupMode::kCommuting:
      return "commuting";
    case GroupMode::kDisjoint:
      return "disjoint";
    case GroupMode::kNone:
      return "none";
  }
  return "?";
}

GroupMode group_mode_from_string(std::string_view s) {
  if (s == "commuting") return GroupMode::kCommuting;
  if (s == "disjoint") return GroupMode::kDisjoint;
  if (s == "none") return GroupMode::kNone;
  throw std::invalid_argument("unknown group mode '" + std::string(s) + "'");
}

std::size_t anticommuting_overlap(const PauliTerm& a, const PauliTerm& b) {
  // Both supports are sorted by qubit; walk them together.
  const auto& sa = a.support();
  const auto& sb = b.support();
  std::size_t i = 0, j = 0, count = 0;
  while (i < sa.size() && j < sb.size()) {
    if (sa[i].first < sb[j].first) {
      ++i;
    } else if (sb[j].first < sa[i].first) {
      ++j;
    } else {
      if (sa[i].second != sb[j].second) ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

bool commutes(const PauliTerm& a, const PauliTerm& b) {
  return anticommuting_overlap(a, b) % 2 == 0;
}

bool disjoint(const PauliTerm& a, const PauliTerm& b) {
  const auto& sa = a.support();
  const auto& sb = b.support();
  std::size_t i = 0, j = 0;
  while (i < sa.size() && j < sb.size()) {
    if (sa[i].first < sb[j].first) {
      ++i;
    } else if (sb[j].first < sa[i].first) {
      ++j;
    } else {
      return false;
    }
  }
  return true;
}

std::pair<HamiltonianSpec, GroupPartition> sort_hamiltonian(
    const HamiltonianSpec& spec, GroupMode mode) {
  GroupPartition partition;
  partition.mode = mode;
  const std::size_t m = spec.terms.size();

  if (mode == GroupMode::kNone) {
    partition.groups.reserve(m);
    for (std::size_t j = 0; j < m; ++j) partition.groups.push_back({j});
    return {spec, std::move(partition)};
  }

  auto compatible = [mode](const PauliTerm& a, const PauliTerm& b) {
    return mode == GroupMode::kCommuting ? commutes(a, b) : disjoint(a, b);
  };

  for (std::size_t j = 0; j < m; ++j) {
    const PauliTerm& term = spec.terms[j];
    bool assigned = false;
    for (auto& group : partition.groups) {
      const bool fits =
          std::all_of(group.begin(), group.end(), [&](std::size_t i) {
            return compatible(spec.terms[i], term);
          });
      if (fits) {
        group.push_back(j);
        assigned = true;
        break;
      }
    }
    if (!assigned) partition.groups.push_back({j});
  }

  HamiltonianSpec sorted;
  sorted.n = spec.n;
  sorted.k = spec.k;
  sorted.terms.reserve(m);
  std::vector<GroupRange> ranges;
  ranges.reserve(partition.groups.size());
  for (const auto& group : partition.groups) {
    GroupRange r{sorted.terms.size(), 0};
    for (std::size_t i : group) sorted.terms.push_back(spec.terms[i]);
    r.end = sorted.terms.size();
    ranges.push_back(r);
  }
  sorted.group_boundaries = std::move(ranges);
  return {std::move(sorted), std::move(partition)};
}

GroupStats group_count_stats(const GroupPartition& partition) {
  GroupStats s;
  s.num_groups = partition.groups.size();
  std::size_t total = 0;
  for (const auto& g : partition.groups) {
    s.max_size = std::max(s.max_size, g.size());
    total += g.size();
  }
  s.mean_size = s.num_groups == 0
                    ? 0.0
                    : static_cast<double>(total) /
                          static_cast<double>(s.num_groups);
  return s;
}

}  // namespace hamsim
