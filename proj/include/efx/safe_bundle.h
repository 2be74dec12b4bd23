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

#ifndef EFX_SAFE_BUNDLE_H_
#define EFX_SAFE_BUNDLE_H_

#include <optional>

#include "efx/bundle.h"
#include "efx/model.h"

namespace efx {

// A subset S of A_i ∪ {g} that `agent` envies and that nobody strongly envies.
// `agent` is the maximal envious agent and may be i itself.
struct SafeBundleResult {
  Bundle bundle;
  int agent = -1;
  friend bool operator==(const SafeBundleResult&,
                         const SafeBundleResult&) = default;
};

// Smallest agent j (j = i included) that strongly envies A_i ∪ {g} relative
// to its own bundle A_j, or nullopt if adding g to A_i is EFX-safe.
std::optional<int> StrongEnvierOfAugmented(const Instance& instance,
                                           const PartialAllocation& allocation,
                                           int i, int g);

// Shrinks S = A_i ∪ {g} one agent at a time. The smallest agent that still
// strongly envies S removes its smallest removable item until it merely
// envies S; the last agent that removed anything is reported. Runs at most n
// rounds.
//
// Requires that the allocation is partial EFX and that someone strongly
// envies A_i ∪ {g}; throws UsageError otherwise.
SafeBundleResult SafeBundle(const Instance& instance,
                            const PartialAllocation& allocation, int i, int g);

// Same as SafeBundle but trusts the caller that the allocation is partial
// EFX. Used inside the solver where that invariant is maintained.
SafeBundleResult ComputeSafeBundle(const Instance& instance,
                                   const PartialAllocation& allocation, int i,
                                   int g);

}  // namespace efx

#endif  // EFX_SAFE_BUNDLE_H_
