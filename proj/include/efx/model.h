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

#ifndef EFX_MODEL_H_
#define EFX_MODEL_H_

#include <optional>
#include <string>
#include <vector>

#include "efx/bundle.h"
#include "efx/valuation.h"

namespace efx {

inline constexpr int kMaxItems = 1'000'000;

// n agents with binary valuations over items {0, ..., m - 1}.
class Instance {
 public:
  // Throws UsageError if specs is empty, num_items is out of range, or a
  // spec fails to compile.
  Instance(int num_items, std::vector<ValuationSpec> specs);

  int num_agents() const { return static_cast<int>(valuations_.size()); }
  int num_items() const { return num_items_; }
  const Valuation& valuation(int agent) const { return valuations_[agent]; }
  const ValuationSpec& spec(int agent) const {
    return valuations_[agent].spec();
  }

  void CheckAgent(int agent) const;
  void CheckItem(int item) const;

 private:
  int num_items_;
  std::vector<Valuation> valuations_;
};

// Bundles A_0..A_{n-1} plus the unallocated pool P; together they partition
// the item set.
struct PartialAllocation {
  std::vector<Bundle> bundles;
  Bundle pool;

  // Every item in the pool, every bundle empty.
  static PartialAllocation Empty(const Instance& instance);

  bool IsComplete() const { return pool.empty(); }

  // Describes the first broken partition property, if any.
  std::optional<std::string> PartitionError(const Instance& instance) const;

  friend bool operator==(const PartialAllocation&,
                         const PartialAllocation&) = default;
};

// Smallest g in `other` with v(other \ {g}) > own_value, i.e. an agent whose
// own bundle is worth own_value strongly envies `other`.
std::optional<int> StrongEnvyWitness(const Valuation& v, int own_value,
                                     const Bundle& other);

bool Envies(const Instance& instance, const PartialAllocation& allocation,
            int i, int j);

// Smallest-index witness item g in A_j with v_i(A_j \ {g}) > v_i(A_i).
std::optional<int> StronglyEnvies(const Instance& instance,
                                  const PartialAllocation& allocation, int i,
                                  int j);

int AgentValue(const Instance& instance, const PartialAllocation& allocation,
               int agent);

// Utilitarian social welfare: sum of v_i(A_i). The pool is worth nothing.
int Usw(const Instance& instance, const PartialAllocation& allocation);

struct EfxViolation {
  int envier;
  int envied;
  int item;
  friend bool operator==(const EfxViolation&, const EfxViolation&) = default;
};

struct EfxCheck {
  bool efx = true;
  std::optional<EfxViolation> violation;  // lexicographically smallest
};

// Checks strong envy over all ordered pairs i != j. Pool items are ignored,
// so this also decides partial EFX.
EfxCheck CheckEfx(const Instance& instance,
                  const PartialAllocation& allocation);

inline bool IsEfx(const Instance& instance,
                  const PartialAllocation& allocation) {
  return CheckEfx(instance, allocation).efx;
}

}  // namespace efx

#endif  // EFX_MODEL_H_
