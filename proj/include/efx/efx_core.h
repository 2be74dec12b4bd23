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

#ifndef EFX_EFX_CORE_H_
#define EFX_EFX_CORE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "efx/envy_graph.h"
#include "efx/model.h"

namespace efx {

enum class EventKind { kU0, kU1, kCycleElim };

std::string EventKindName(EventKind kind);  // "U0", "U1", "CycleElim"

// One solver step.
//   U0:        item g went to `agent`.
//   U1:        item g triggered a safe-bundle swap; cycle[0] is the source
//              whose bundle became `safe_bundle`, cycle.back() its maximal
//              envious agent; `returned_items` went back to the pool.
//   CycleElim: bundles rotated along the envy cycle `cycle`.
struct TraceEvent {
  int64_t step = 0;
  EventKind kind = EventKind::kU0;
  std::optional<int> item;
  std::optional<int> agent;
  std::vector<int> cycle;
  std::vector<int> safe_bundle;
  std::vector<int> returned_items;
  int usw_after = 0;

  friend bool operator==(const TraceEvent&, const TraceEvent&) = default;
};

using Trace = std::vector<TraceEvent>;

// m^2 n + m n + m: at most m n U1 steps, each preceded by at most m U0
// steps, plus the U0 steps after the last U1.
int64_t UpdateBudget(int num_agents, int num_items);

// Smallest source s such that nobody, s included, strongly envies
// A_s ∪ {g}. Throws InternalError if there is no source at all.
std::optional<int> U0Candidate(const Instance& instance,
                               const PartialAllocation& allocation, int g);

PartialAllocation ApplyU0(const Instance& instance,
                          const PartialAllocation& allocation, int g,
                          int agent);

// Replaces A_s by the closing safe bundle (s = cycle.agents[0]), returns the
// rest of A_s ∪ {g} to the pool and rotates bundles along the cycle.
// Throws InternalError if the cycle does not match the allocation.
PartialAllocation ApplyU1(const Instance& instance,
                          const PartialAllocation& allocation, int g,
                          const SourceCycle& cycle);

struct UpdateResult {
  PartialAllocation allocation;
  TraceEvent event;  // step left at 0; Solve numbers events
};

// U0 if some source can take g, otherwise U1.
UpdateResult Update(const Instance& instance,
                    const PartialAllocation& allocation, int g);

struct SolveStats {
  int64_t u0 = 0;
  int64_t u1 = 0;
  int64_t eliminations = 0;
};

struct SolveResult {
  PartialAllocation allocation;
  Trace trace;
  SolveStats stats;
};

// Allocates the smallest pool item with Update, then eliminates envy cycles,
// until the pool is empty. The result is a complete EFX allocation.
SolveResult Solve(const Instance& instance);

}  // namespace efx

#endif  // EFX_EFX_CORE_H_
