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

#ifndef EFX_GENERATE_H_
#define EFX_GENERATE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "efx/model.h"

namespace efx {

enum class GeneratorFamily {
  kRandomAdditive,
  kRandomThreshold,
  kRandomCapped,
  kRandomMatroidRank,
  kRandomTable,
  // Agent 0 values only bundles with at least m - n + 1 items (value 1);
  // every other agent counts items. No Nash-welfare-maximizing allocation of
  // this instance is EFX once m is large relative to n.
  kPaperExample,
};

// random_additive, random_threshold, random_capped, random_matroid_rank,
// random_table, paper_example.
std::string GeneratorFamilyName(GeneratorFamily family);
std::optional<GeneratorFamily> ParseGeneratorFamily(std::string_view name);
const std::vector<GeneratorFamily>& AllGeneratorFamilies();

struct GeneratorParams {
  // Chance that an agent likes an item (additive, capped, threshold set) and
  // that a table value steps up when it is free to.
  double like_probability = 0.5;
};

// Deterministic in (family, n, m, seed, params). Throws UsageError for n < 1,
// m < 0, m > 16 with random_table, m < n with paper_example, or a
// probability outside [0, 1].
Instance Generate(GeneratorFamily family, int n, int m, uint64_t seed,
                  const GeneratorParams& params = {});

}  // namespace efx

#endif  // EFX_GENERATE_H_
