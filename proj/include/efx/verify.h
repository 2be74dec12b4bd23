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

// Definition-level checkers. Nothing here calls into the solver, the envy
// graph or the strong-envy helpers of model.h, so the results can be used as
// independent oracles for them.

#ifndef EFX_VERIFY_H_
#define EFX_VERIFY_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "efx/efx_core.h"
#include "efx/model.h"

namespace efx {

struct Finding {
  std::string kind;
  std::optional<int64_t> step;  // trace step, when it applies
  std::vector<int> agents;
  std::vector<int> items;
  std::vector<int> values;
  std::string message;
};

struct VerificationReport {
  bool passed = true;
  std::vector<Finding> violations;

  void Add(Finding finding) {
    passed = false;
    violations.push_back(std::move(finding));
  }
  bool Has(const std::string& kind) const;
};

// Lexicographically smallest (i, j, g), i != j, g in A_j, with
// v_i(A_j \ {g}) > v_i(A_i), straight from the definition.
std::optional<EfxViolation> FindEfxViolation(
    const Instance& instance, const PartialAllocation& allocation);

inline constexpr int64_t kMaxAssignments = 10'000'000;

// Visits every complete allocation in lexicographic order of the base-n
// digit string (digit g = owner of item g, item 0 most significant). Stops
// early when `visit` returns false. Throws UsageError if n^m exceeds
// kMaxAssignments.
void ForEachAssignment(
    const Instance& instance,
    const std::function<bool(const PartialAllocation&)>& visit);

// First complete EFX allocation in the order above, or nullopt.
std::optional<PartialAllocation> BruteForceEfx(const Instance& instance);

struct SafeBundleCandidate {
  Bundle bundle;
  std::vector<int> enviers;  // every valid maximal envious agent
};

inline constexpr int kMaxSafeBundleItems = 20;

// All safe bundles for (allocation, i, g) by enumerating subsets of
// A_i ∪ {g}, ascending by bitmask over that bundle's items. Throws
// UsageError if |A_i ∪ {g}| > kMaxSafeBundleItems, the allocation is not
// partial EFX, or nobody strongly envies A_i ∪ {g}.
std::vector<SafeBundleCandidate> BruteForceSafeBundles(
    const Instance& instance, const PartialAllocation& allocation, int i,
    int g);

// Called with the allocation just before each event is replayed.
using ReplayObserver =
    std::function<void(const PartialAllocation& before, const TraceEvent&)>;

// Re-simulates the trace from the empty allocation and audits it: item
// conservation, partial EFX after every event, recorded welfare, welfare
// monotonicity with strict progress at U1, the U1 and update budgets and
// completeness at the end. Structural errors (unknown agent, item not in the
// pool, stale cycle) stop the replay.
VerificationReport ReplayTrace(const Instance& instance, const Trace& trace,
                               const ReplayObserver& observer = {});

// Every envy pair of an EFX allocation differs by exactly one unit of value.
// Throws UsageError on a non-EFX allocation.
VerificationReport CheckPropositionGap(const Instance& instance,
                                       const PartialAllocation& allocation);

}  // namespace efx

#endif  // EFX_VERIFY_H_
