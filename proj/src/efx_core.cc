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

#include "efx/efx_core.h"

#include <algorithm>

#include "efx/errors.h"
#include "efx/safe_bundle.h"

namespace efx {

std::string EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kU0:
      return "U0";
    case EventKind::kU1:
      return "U1";
    case EventKind::kCycleElim:
      return "CycleElim";
  }
  return "unknown";
}

int64_t UpdateBudget(int num_agents, int num_items) {
  const int64_t n = num_agents;
  const int64_t m = num_items;
  return m * m * n + m * n + m;
}

std::optional<int> U0Candidate(const Instance& instance,
                               const PartialAllocation& allocation, int g) {
  instance.CheckItem(g);
  const std::vector<int> sources =
      Sources(BuildGraph(instance, allocation));
  if (sources.empty()) throw InternalError("envy graph has no source");
  for (int s : sources) {
    if (!StrongEnvierOfAugmented(instance, allocation, s, g)) return s;
  }
  return std::nullopt;
}

PartialAllocation ApplyU0(const Instance& instance,
                          const PartialAllocation& allocation, int g,
                          int agent) {
  instance.CheckAgent(agent);
  instance.CheckItem(g);
  if (!allocation.pool.contains(g)) {
    throw UsageError("item " + std::to_string(g) + " is not in the pool");
  }
  PartialAllocation out = allocation;
  out.pool.erase(g);
  out.bundles[agent].insert(g);
  return out;
}

PartialAllocation ApplyU1(const Instance& instance,
                          const PartialAllocation& allocation, int g,
                          const SourceCycle& cycle) {
  instance.CheckItem(g);
  if (!allocation.pool.contains(g)) {
    throw UsageError("item " + std::to_string(g) + " is not in the pool");
  }
  const Cycle& agents = cycle.agents;
  const int k = static_cast<int>(agents.size());
  if (k == 0) throw InternalError("empty U1 cycle");
  std::vector<bool> on_cycle(instance.num_agents(), false);
  for (int u : agents) {
    instance.CheckAgent(u);
    if (on_cycle[u]) throw InternalError("U1 cycle repeats an agent");
    on_cycle[u] = true;
  }

  const int s = agents.front();
  const int c = agents.back();
  const Bundle& safe = cycle.closing.safe.bundle;
  const Bundle augmented = allocation.bundles[s].With(g);
  if (cycle.closing.from != c || cycle.closing.to != s ||
      cycle.closing.safe.agent != c) {
    throw InternalError("U1 closing edge does not match the cycle ends");
  }
  if (!safe.IsSubsetOf(augmented)) {
    throw InternalError("safe bundle is not a subset of A_s + g");
  }
  if (instance.valuation(c).Value(safe) <=
      AgentValue(instance, allocation, c)) {
    throw InternalError("maximal envious agent does not envy the safe bundle");
  }
  for (int j = 0; j < instance.num_agents(); ++j) {
    if (StrongEnvyWitness(instance.valuation(j),
                          AgentValue(instance, allocation, j), safe)) {
      throw InternalError("agent " + std::to_string(j) +
                          " strongly envies the safe bundle");
    }
  }
  for (int t = 0; t + 1 < k; ++t) {
    const int u = agents[t];
    const int w = agents[t + 1];
    const Valuation& v = instance.valuation(u);
    const int own = v.Value(allocation.bundles[u]);
    const int other = v.Value(allocation.bundles[w]);
    const bool maximal = std::any_of(
        cycle.maximal_edges.begin(), cycle.maximal_edges.end(),
        [&](const MaximalEnvyEdge& e) { return e.from == u && e.to == w; });
    if (maximal ? other != own : other <= own) {
      throw InternalError("stale U1 cycle at edge " + std::to_string(u) +
                          " -> " + std::to_string(w));
    }
  }

  PartialAllocation replaced = allocation;
  replaced.pool.erase(g);
  replaced.pool |= augmented - safe;
  replaced.bundles[s] = safe;
  PartialAllocation out = replaced;
  for (int t = 0; t < k; ++t) {
    out.bundles[agents[t]] = replaced.bundles[agents[(t + 1) % k]];
  }
  return out;
}

UpdateResult Update(const Instance& instance,
                    const PartialAllocation& allocation, int g) {
  UpdateResult result;
  result.event.item = g;
  if (std::optional<int> s = U0Candidate(instance, allocation, g)) {
    result.allocation = ApplyU0(instance, allocation, g, *s);
    result.event.kind = EventKind::kU0;
    result.event.agent = *s;
  } else {
    const SourceCycle cycle = FindSourceCycle(instance, allocation, g);
    const int source = cycle.agents.front();
    result.allocation = ApplyU1(instance, allocation, g, cycle);
    result.event.kind = EventKind::kU1;
    result.event.cycle = cycle.agents;
    result.event.safe_bundle = cycle.closing.safe.bundle.items();
    result.event.returned_items =
        (allocation.bundles[source].With(g) - cycle.closing.safe.bundle).items();
  }
  result.event.usw_after = Usw(instance, result.allocation);
  return result;
}

SolveResult Solve(const Instance& instance) {
  const int n = instance.num_agents();
  const int m = instance.num_items();
  const int64_t u1_limit = static_cast<int64_t>(m) * n;
  const int64_t update_limit = UpdateBudget(n, m);

  SolveResult result;
  PartialAllocation allocation = PartialAllocation::Empty(instance);
  int64_t step = 0;
  while (!allocation.pool.empty()) {
    UpdateResult update = Update(instance, allocation, allocation.pool.First());
    update.event.step = step++;
    if (update.event.kind == EventKind::kU0) {
      ++result.stats.u0;
    } else {
      ++result.stats.u1;
    }
    if (result.stats.u1 > u1_limit) {
      throw InternalError("more than m * n U1 updates");
    }
    if (result.stats.u0 + result.stats.u1 > update_limit) {
      throw InternalError("update budget exhausted");
    }
    result.trace.push_back(std::move(update.event));

    EliminationResult elimination =
        EliminateAllEnvyCycles(instance, std::move(update.allocation));
    allocation = std::move(elimination.allocation);
    for (size_t e = 0; e < elimination.eliminated.size(); ++e) {
      ++result.stats.eliminations;
      TraceEvent event;
      event.step = step++;
      event.kind = EventKind::kCycleElim;
      event.cycle = std::move(elimination.eliminated[e]);
      event.usw_after = elimination.usw_after[e];
      result.trace.push_back(std::move(event));
    }
  }
  result.allocation = std::move(allocation);
  if (EfxCheck check = CheckEfx(instance, result.allocation); !check.efx) {
    throw InternalError("solver produced a non-EFX allocation");
  }
  return result;
}

}  // namespace efx
