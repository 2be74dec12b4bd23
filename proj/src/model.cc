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

#include "efx/model.h"

#include "efx/errors.h"

namespace efx {

Instance::Instance(int num_items, std::vector<ValuationSpec> specs)
    : num_items_(num_items) {
  if (specs.empty()) throw UsageError("instance needs at least one agent");
  if (num_items < 0 || num_items > kMaxItems) {
    throw UsageError("item count " + std::to_string(num_items) +
                     " out of range [0, " + std::to_string(kMaxItems) + "]");
  }
  valuations_.reserve(specs.size());
  for (const ValuationSpec& spec : specs) {
    valuations_.push_back(Valuation::Compile(spec, num_items));
  }
}

void Instance::CheckAgent(int agent) const {
  if (agent < 0 || agent >= num_agents()) {
    throw UsageError("agent index " + std::to_string(agent) +
                     " out of range [0, " + std::to_string(num_agents()) + ")");
  }
}

void Instance::CheckItem(int item) const {
  if (item < 0 || item >= num_items_) {
    throw UsageError("item index " + std::to_string(item) +
                     " out of range [0, " + std::to_string(num_items_) + ")");
  }
}

PartialAllocation PartialAllocation::Empty(const Instance& instance) {
  PartialAllocation a;
  a.bundles.assign(instance.num_agents(), Bundle(instance.num_items()));
  a.pool = Bundle::Full(instance.num_items());
  return a;
}

std::optional<std::string> PartialAllocation::PartitionError(
    const Instance& instance) const {
  const int m = instance.num_items();
  if (static_cast<int>(bundles.size()) != instance.num_agents()) {
    return "expected " + std::to_string(instance.num_agents()) +
           " bundles, got " + std::to_string(bundles.size());
  }
  if (pool.universe() != m) return "pool has the wrong item universe";
  Bundle seen = pool;
  for (size_t i = 0; i < bundles.size(); ++i) {
    if (bundles[i].universe() != m) {
      return "bundle " + std::to_string(i) + " has the wrong item universe";
    }
    if (!bundles[i].IsDisjointFrom(seen)) {
      return "bundle " + std::to_string(i) +
             " overlaps the pool or an earlier bundle";
    }
    seen |= bundles[i];
  }
  if (seen.size() != m) {
    return "items not covered: " + (Bundle::Full(m) - seen).ToString();
  }
  return std::nullopt;
}

std::optional<int> StrongEnvyWitness(const Valuation& v, int own_value,
                                     const Bundle& other) {
  // Monotone: removing an item can never exceed v(other).
  if (v.Value(other) <= own_value) return std::nullopt;
  std::optional<int> witness;
  other.ForEach([&](int g) {
    if (!witness && v.ValueWithout(other, g) > own_value) witness = g;
  });
  return witness;
}

bool Envies(const Instance& instance, const PartialAllocation& allocation,
            int i, int j) {
  instance.CheckAgent(i);
  instance.CheckAgent(j);
  const Valuation& v = instance.valuation(i);
  return v.Value(allocation.bundles[j]) > v.Value(allocation.bundles[i]);
}

std::optional<int> StronglyEnvies(const Instance& instance,
                                  const PartialAllocation& allocation, int i,
                                  int j) {
  instance.CheckAgent(i);
  instance.CheckAgent(j);
  const Valuation& v = instance.valuation(i);
  return StrongEnvyWitness(v, v.Value(allocation.bundles[i]),
                           allocation.bundles[j]);
}

int AgentValue(const Instance& instance, const PartialAllocation& allocation,
               int agent) {
  return instance.valuation(agent).Value(allocation.bundles[agent]);
}

int Usw(const Instance& instance, const PartialAllocation& allocation) {
  int total = 0;
  for (int i = 0; i < instance.num_agents(); ++i) {
    total += AgentValue(instance, allocation, i);
  }
  return total;
}

EfxCheck CheckEfx(const Instance& instance,
                  const PartialAllocation& allocation) {
  const int n = instance.num_agents();
  for (int i = 0; i < n; ++i) {
    const Valuation& v = instance.valuation(i);
    const int own = v.Value(allocation.bundles[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (auto g = StrongEnvyWitness(v, own, allocation.bundles[j])) {
        return EfxCheck{false, EfxViolation{i, j, *g}};
      }
    }
  }
  return EfxCheck{};
}

}  // namespace efx
