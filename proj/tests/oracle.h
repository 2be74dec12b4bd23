// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Test-only reference evaluations on std::set, written straight from the
// family formulas. They share no code with the compiled oracles.

#ifndef EFX_TESTS_ORACLE_H_
#define EFX_TESTS_ORACLE_H_

#include <algorithm>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "efx/bundle.h"
#include "efx/model.h"
#include "efx/valuation.h"

namespace efx::testing {

using ItemSet = std::set<int>;

inline int CountIn(const ItemSet& s, const std::vector<int>& items) {
  int count = 0;
  for (int g : items) count += s.count(g);
  return count;
}

inline int OracleValue(const ValuationSpec& spec, const ItemSet& s) {
  if (auto* a = std::get_if<AdditiveSpec>(&spec)) return CountIn(s, a->liked);
  if (auto* t = std::get_if<ThresholdSpec>(&spec)) {
    return CountIn(s, t->set) >= t->k ? 1 : 0;
  }
  if (auto* c = std::get_if<CappedSpec>(&spec)) {
    return std::min(CountIn(s, c->liked), c->cap);
  }
  if (auto* r = std::get_if<MatroidRankSpec>(&spec)) {
    int total = 0;
    for (size_t j = 0; j < r->parts.size(); ++j) {
      total += std::min(CountIn(s, r->parts[j]), r->caps[j]);
    }
    return total;
  }
  const auto& table = std::get<TableSpec>(spec);
  unsigned mask = 0;
  for (int g : s) mask |= 1U << g;
  return table.values[mask];
}

// Rank of a partition matroid by greedy independent-set growth.
inline int GreedyPartitionRank(const MatroidRankSpec& spec, const ItemSet& s) {
  std::vector<int> used(spec.parts.size(), 0);
  int rank = 0;
  for (int g : s) {
    for (size_t j = 0; j < spec.parts.size(); ++j) {
      const auto& part = spec.parts[j];
      if (std::find(part.begin(), part.end(), g) != part.end() &&
          used[j] < spec.caps[j]) {
        ++used[j];
        ++rank;
      }
    }
  }
  return rank;
}

inline ItemSet ToSet(const Bundle& b) {
  const std::vector<int> items = b.items();
  return ItemSet(items.begin(), items.end());
}

// Smallest g in other with v(other - g) > v(own).
inline std::optional<int> OracleStrongEnvy(const ValuationSpec& spec,
                                           const ItemSet& own,
                                           const ItemSet& other) {
  const int own_value = OracleValue(spec, own);
  for (int g : other) {
    ItemSet rest = other;
    rest.erase(g);
    if (OracleValue(spec, rest) > own_value) return g;
  }
  return std::nullopt;
}

inline PartialAllocation MakeAllocation(
    const Instance& instance, const std::vector<std::vector<int>>& bundles) {
  PartialAllocation a;
  const int m = instance.num_items();
  Bundle used(m);
  for (const auto& items : bundles) {
    a.bundles.push_back(Bundle::FromItems(m, items));
    used |= a.bundles.back();
  }
  a.pool = Bundle::Full(m) - used;
  return a;
}

}  // namespace efx::testing

#endif  // EFX_TESTS_ORACLE_H_
