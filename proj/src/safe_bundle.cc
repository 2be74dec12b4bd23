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

#include "efx/safe_bundle.h"

#include <vector>

#include "efx/errors.h"

namespace efx {
namespace {

// Agents that currently strongly envy `bundle`, ascending.
std::vector<int> StrongEnviers(const Instance& instance,
                               const std::vector<int>& own_values,
                               const Bundle& bundle) {
  std::vector<int> out;
  for (int j = 0; j < instance.num_agents(); ++j) {
    if (StrongEnvyWitness(instance.valuation(j), own_values[j], bundle)) {
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace

std::optional<int> StrongEnvierOfAugmented(const Instance& instance,
                                           const PartialAllocation& allocation,
                                           int i, int g) {
  const Bundle augmented = allocation.bundles[i].With(g);
  for (int j = 0; j < instance.num_agents(); ++j) {
    const Valuation& v = instance.valuation(j);
    if (StrongEnvyWitness(v, v.Value(allocation.bundles[j]), augmented)) {
      return j;
    }
  }
  return std::nullopt;
}

SafeBundleResult ComputeSafeBundle(const Instance& instance,
                                   const PartialAllocation& allocation, int i,
                                   int g) {
  instance.CheckAgent(i);
  instance.CheckItem(g);
  if (!allocation.pool.contains(g)) {
    throw UsageError("item " + std::to_string(g) + " is not in the pool");
  }
  const int n = instance.num_agents();
  std::vector<int> own_values(n);
  for (int j = 0; j < n; ++j) {
    own_values[j] = AgentValue(instance, allocation, j);
  }

  SafeBundleResult result{allocation.bundles[i].With(g), -1};
  Bundle& s = result.bundle;
  std::vector<int> enviers = StrongEnviers(instance, own_values, s);
  if (enviers.empty()) {
    throw UsageError("nobody strongly envies bundle " + std::to_string(i) +
                     " plus item " + std::to_string(g));
  }
  while (!enviers.empty()) {
    const int a = enviers.front();
    const Valuation& v = instance.valuation(a);
    bool removed_any = false;
    // The strong-envy witness is exactly the smallest item whose removal
    // keeps a envious.
    for (auto removable = StrongEnvyWitness(v, own_values[a], s); removable;
         removable = StrongEnvyWitness(v, own_values[a], s)) {
      s.erase(*removable);
      removed_any = true;
    }
    if (removed_any) result.agent = a;
    enviers = StrongEnviers(instance, own_values, s);
  }
  if (result.agent < 0 ||
      instance.valuation(result.agent).Value(s) <= own_values[result.agent]) {
    throw InternalError("safe bundle lost its envious agent");
  }
  return result;
}

SafeBundleResult SafeBundle(const Instance& instance,
                            const PartialAllocation& allocation, int i,
                            int g) {
  if (auto error = allocation.PartitionError(instance)) {
    throw UsageError("invalid allocation: " + *error);
  }
  if (!IsEfx(instance, allocation)) {
    throw UsageError("safe bundle requires a partial EFX allocation");
  }
  return ComputeSafeBundle(instance, allocation, i, g);
}

}  // namespace efx
