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

#include "efx/verify.h"

#include <algorithm>

#include "efx/errors.h"

namespace efx {

bool VerificationReport::Has(const std::string& kind) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Finding& f) { return f.kind == kind; });
}

std::optional<EfxViolation> FindEfxViolation(
    const Instance& instance, const PartialAllocation& allocation) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const Valuation& v = instance.valuation(i);
    const int own = v.Value(allocation.bundles[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      for (int g : allocation.bundles[j].items()) {
        if (v.Value(allocation.bundles[j].Without(g)) > own) {
          return EfxViolation{i, j, g};
        }
      }
    }
  }
  return std::nullopt;
}

void ForEachAssignment(
    const Instance& instance,
    const std::function<bool(const PartialAllocation&)>& visit) {
  const int n = instance.num_agents();
  const int m = instance.num_items();
  int64_t total = 1;
  for (int g = 0; g < m; ++g) {
    total *= n;
    if (total > kMaxAssignments) {
      throw UsageError("brute force over " + std::to_string(n) + "^" +
                       std::to_string(m) + " assignments exceeds the limit of " +
                       std::to_string(kMaxAssignments) +
                       "; use a smaller instance");
    }
  }
  std::vector<int> owner(m, 0);
  PartialAllocation allocation;
  allocation.pool = Bundle(m);
  allocation.bundles.assign(n, Bundle(m));
  for (int g = 0; g < m; ++g) allocation.bundles[0].insert(g);
  while (true) {
    if (!visit(allocation)) return;
    // Odometer step; the last item is the least significant digit.
    int g = m - 1;
    while (g >= 0 && owner[g] == n - 1) {
      allocation.bundles[owner[g]].erase(g);
      owner[g] = 0;
      allocation.bundles[0].insert(g);
      --g;
    }
    if (g < 0) return;
    allocation.bundles[owner[g]].erase(g);
    ++owner[g];
    allocation.bundles[owner[g]].insert(g);
  }
}

std::optional<PartialAllocation> BruteForceEfx(const Instance& instance) {
  std::optional<PartialAllocation> found;
  ForEachAssignment(instance, [&](const PartialAllocation& allocation) {
    if (!FindEfxViolation(instance, allocation)) {
      found = allocation;
      return false;
    }
    return true;
  });
  return found;
}

std::vector<SafeBundleCandidate> BruteForceSafeBundles(
    const Instance& instance, const PartialAllocation& allocation, int i,
    int g) {
  instance.CheckAgent(i);
  instance.CheckItem(g);
  if (!allocation.pool.contains(g)) {
    throw UsageError("item " + std::to_string(g) + " is not in the pool");
  }
  const Bundle augmented = allocation.bundles[i].With(g);
  const std::vector<int> items = augmented.items();
  const int size = static_cast<int>(items.size());
  if (size > kMaxSafeBundleItems) {
    throw UsageError("A_i + g has " + std::to_string(size) +
                     " items; brute force supports at most " +
                     std::to_string(kMaxSafeBundleItems));
  }
  if (FindEfxViolation(instance, allocation)) {
    throw UsageError("safe bundles require a partial EFX allocation");
  }

  const int n = instance.num_agents();
  std::vector<int> own(n);
  for (int j = 0; j < n; ++j) {
    own[j] = instance.valuation(j).Value(allocation.bundles[j]);
  }
  auto strongly_envied_by = [&](int j, const Bundle& s) {
    for (int item : s.items()) {
      if (instance.valuation(j).Value(s.Without(item)) > own[j]) return true;
    }
    return false;
  };

  std::vector<int> augmented_enviers;
  bool anyone_strong = false;
  for (int j = 0; j < n; ++j) {
    if (instance.valuation(j).Value(augmented) > own[j]) {
      augmented_enviers.push_back(j);
    }
    anyone_strong = anyone_strong || strongly_envied_by(j, augmented);
  }
  if (!anyone_strong) {
    throw UsageError("nobody strongly envies A_i + g");
  }

  std::vector<SafeBundleCandidate> out;
  for (uint32_t mask = 0; mask < (uint32_t{1} << size); ++mask) {
    Bundle s(instance.num_items());
    for (int b = 0; b < size; ++b) {
      if ((mask >> b) & 1U) s.insert(items[b]);
    }
    std::vector<int> enviers;
    for (int j = 0; j < n; ++j) {
      if (instance.valuation(j).Value(s) > own[j]) enviers.push_back(j);
    }
    if (enviers.empty()) continue;
    const bool safe = std::none_of(
        augmented_enviers.begin(), augmented_enviers.end(),
        [&](int j) { return strongly_envied_by(j, s); });
    if (safe) out.push_back(SafeBundleCandidate{std::move(s), std::move(enviers)});
  }
  return out;
}

namespace {

class Replayer {
 public:
  Replayer(const Instance& instance, VerificationReport& report)
      : instance_(instance),
        report_(report),
        allocation_(PartialAllocation::Empty(instance)) {}

  const PartialAllocation& allocation() const { return allocation_; }

  // Returns false when the replay cannot continue.
  bool Apply(const TraceEvent& event) {
    step_ = event.step;
    switch (event.kind) {
      case EventKind::kU0:
        return ApplyU0(event);
      case EventKind::kU1:
        return ApplyU1(event);
      case EventKind::kCycleElim:
        return ApplyCycle(event.cycle, /*strict=*/true);
    }
    return Fail("malformed", "unknown event kind");
  }

  bool Fail(const std::string& kind, const std::string& message,
            std::vector<int> agents = {}, std::vector<int> items = {},
            std::vector<int> values = {}) {
    report_.Add(Finding{kind, step_, std::move(agents), std::move(items),
                        std::move(values), message});
    return false;
  }

 private:
  int Value(int agent, const Bundle& bundle) const {
    return instance_.valuation(agent).Value(bundle);
  }

  bool CheckPoolItem(const std::optional<int>& item) {
    if (!item || *item < 0 || *item >= instance_.num_items()) {
      return Fail("malformed", "event item missing or out of range");
    }
    if (!allocation_.pool.contains(*item)) {
      return Fail("partition", "item is not in the pool", {}, {*item});
    }
    return true;
  }

  bool CheckCycleAgents(const std::vector<int>& cycle) {
    if (cycle.empty()) return Fail("invalid-cycle", "empty cycle");
    std::vector<bool> seen(instance_.num_agents(), false);
    for (int u : cycle) {
      if (u < 0 || u >= instance_.num_agents() || seen[u]) {
        return Fail("invalid-cycle", "cycle agent out of range or repeated",
                    cycle);
      }
      seen[u] = true;
    }
    return true;
  }

  // Each edge u -> w on the cycle: w's bundle is worth at least u's own to u,
  // strictly for envy cycles. The closing edge is skipped when `open_end`.
  bool CheckEdges(const std::vector<int>& cycle, bool strict, bool open_end) {
    const int k = static_cast<int>(cycle.size());
    for (int t = 0; t < k; ++t) {
      if (open_end && t == k - 1) break;
      const int u = cycle[t];
      const int w = cycle[(t + 1) % k];
      const int own = Value(u, allocation_.bundles[u]);
      const int other = Value(u, allocation_.bundles[w]);
      if (strict ? other <= own : other < own) {
        return Fail("invalid-cycle", "cycle edge not backed by envy",
                    {u, w}, {}, {own, other});
      }
    }
    return true;
  }

  void Rotate(const std::vector<int>& cycle) {
    const int k = static_cast<int>(cycle.size());
    std::vector<Bundle> old;
    for (int u : cycle) old.push_back(allocation_.bundles[u]);
    for (int t = 0; t < k; ++t) allocation_.bundles[cycle[t]] = old[(t + 1) % k];
  }

  bool ApplyU0(const TraceEvent& event) {
    if (!CheckPoolItem(event.item)) return false;
    if (!event.agent || *event.agent < 0 ||
        *event.agent >= instance_.num_agents()) {
      return Fail("malformed", "U0 event without a valid agent");
    }
    allocation_.pool.erase(*event.item);
    allocation_.bundles[*event.agent].insert(*event.item);
    return true;
  }

  bool ApplyU1(const TraceEvent& event) {
    if (!CheckPoolItem(event.item)) return false;
    if (!CheckCycleAgents(event.cycle)) return false;
    const int g = *event.item;
    const int s = event.cycle.front();
    const int c = event.cycle.back();
    for (int item : event.safe_bundle) {
      if (item < 0 || item >= instance_.num_items()) {
        return Fail("malformed", "safe bundle item out of range");
      }
    }
    for (int item : event.returned_items) {
      if (item < 0 || item >= instance_.num_items()) {
        return Fail("malformed", "returned item out of range");
      }
    }
    const int m = instance_.num_items();
    const Bundle safe = Bundle::FromItems(m, event.safe_bundle);
    const Bundle augmented = allocation_.bundles[s].With(g);
    if (!safe.IsSubsetOf(augmented)) {
      return Fail("invalid-safe-bundle", "safe bundle is not inside A_s + g",
                  {s}, event.safe_bundle);
    }
    if (Bundle::FromItems(m, event.returned_items) != augmented - safe) {
      return Fail("invalid-safe-bundle",
                  "returned items differ from (A_s + g) minus the safe bundle",
                  {s}, event.returned_items);
    }
    const int own_c = Value(c, allocation_.bundles[c]);
    const int safe_c = Value(c, safe);
    if (safe_c <= own_c) {
      return Fail("invalid-safe-bundle",
                  "agent preceding s does not envy the safe bundle", {c, s},
                  event.safe_bundle, {own_c, safe_c});
    }
    if (!CheckEdges(event.cycle, /*strict=*/false, /*open_end=*/true)) {
      return false;
    }
    allocation_.pool.erase(g);
    allocation_.pool |= augmented - safe;
    allocation_.bundles[s] = safe;
    Rotate(event.cycle);
    return true;
  }

  bool ApplyCycle(const std::vector<int>& cycle, bool strict) {
    if (!CheckCycleAgents(cycle)) return false;
    if (!CheckEdges(cycle, strict, /*open_end=*/false)) return false;
    Rotate(cycle);
    return true;
  }

  const Instance& instance_;
  VerificationReport& report_;
  PartialAllocation allocation_;
  int64_t step_ = 0;
};

}  // namespace

VerificationReport ReplayTrace(const Instance& instance, const Trace& trace,
                               const ReplayObserver& observer) {
  VerificationReport report;
  Replayer replayer(instance, report);
  const int n = instance.num_agents();
  const int m = instance.num_items();
  int64_t u0 = 0;
  int64_t u1 = 0;
  int64_t u0_run = 0;
  int previous_usw = 0;

  for (size_t index = 0; index < trace.size(); ++index) {
    const TraceEvent& event = trace[index];
    if (event.step != static_cast<int64_t>(index)) {
      report.Add(Finding{"malformed", event.step, {}, {}, {},
                         "step numbers must count up from 0"});
    }
    if (observer) observer(replayer.allocation(), event);
    if (!replayer.Apply(event)) return report;

    if (event.kind == EventKind::kU0) {
      ++u0;
      if (++u0_run > m) {
        replayer.Fail("u0-run-bound", "more than m U0 steps without a U1");
      }
    } else if (event.kind == EventKind::kU1) {
      ++u1;
      u0_run = 0;
    }

    const PartialAllocation& now = replayer.allocation();
    if (auto error = now.PartitionError(instance)) {
      replayer.Fail("partition", *error);
      return report;
    }
    int usw = 0;
    for (int i = 0; i < n; ++i) {
      usw += instance.valuation(i).Value(now.bundles[i]);
    }
    if (usw != event.usw_after) {
      replayer.Fail("usw-mismatch", "recorded welfare differs from replay", {},
                    {}, {event.usw_after, usw});
    }
    if (event.usw_after < previous_usw) {
      replayer.Fail("usw-decrease", "welfare decreased", {}, {},
                    {previous_usw, event.usw_after});
    }
    if (event.kind == EventKind::kU1 && event.usw_after <= previous_usw) {
      replayer.Fail("u1-no-progress", "U1 did not raise welfare", {}, {},
                    {previous_usw, event.usw_after});
    }
    if (auto violation = FindEfxViolation(instance, now)) {
      replayer.Fail("not-efx", "partial allocation is not EFX",
                    {violation->envier, violation->envied}, {violation->item});
    }
    previous_usw = event.usw_after;
  }

  if (u1 > static_cast<int64_t>(m) * n) {
    report.Add(Finding{"u1-bound", std::nullopt, {}, {}, {},
                       "more than m * n U1 steps"});
  }
  if (u0 + u1 > UpdateBudget(n, m)) {
    report.Add(Finding{"update-bound", std::nullopt, {}, {}, {},
                       "more than m^2 n + m n + m updates"});
  }
  if (!replayer.allocation().pool.empty()) {
    report.Add(Finding{"incomplete", std::nullopt, {},
                       replayer.allocation().pool.items(), {},
                       "items left in the pool"});
  }
  return report;
}

VerificationReport CheckPropositionGap(const Instance& instance,
                                       const PartialAllocation& allocation) {
  if (FindEfxViolation(instance, allocation)) {
    throw UsageError("the value-gap check needs an EFX allocation");
  }
  VerificationReport report;
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const Valuation& v = instance.valuation(i);
    const int own = v.Value(allocation.bundles[i]);
    for (int j = 0; j < n; ++j) {
      const int other = v.Value(allocation.bundles[j]);
      if (i != j && other > own && other - own != 1) {
        report.Add(Finding{"gap", std::nullopt, {i, j}, {}, {own, other},
                           "envy gap is not exactly 1"});
      }
    }
  }
  return report;
}

}  // namespace efx
