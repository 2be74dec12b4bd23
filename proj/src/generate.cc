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

#include "efx/generate.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <random>

#include "efx/errors.h"

namespace efx {
namespace {

// Distribution objects are implementation-defined, so draws are derived from
// raw engine output to keep instances identical across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : engine_(seed) {}

  // Uniform in [lo, hi].
  int Int(int lo, int hi) {
    const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(engine_() % span);
  }

  bool Coin(double p) {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
  }

 private:
  std::mt19937_64 engine_;
};

std::vector<int> RandomSubset(Rng& rng, int m, double p) {
  std::vector<int> items;
  for (int g = 0; g < m; ++g) {
    if (rng.Coin(p)) items.push_back(g);
  }
  return items;
}

std::vector<int> AllItems(int m) {
  std::vector<int> items(m);
  std::iota(items.begin(), items.end(), 0);
  return items;
}

// Values are filled in increasing mask order, so every S \ {g} is already
// known. Those predecessors pairwise differ by at most one (both are within
// one of v(S \ {g, h})), so the admissible range [max, min + 1] is never
// empty.
TableSpec RandomTable(Rng& rng, int m, double p) {
  const uint32_t subsets = uint32_t{1} << m;
  TableSpec table;
  table.values.assign(subsets, 0);
  for (uint32_t s = 1; s < subsets; ++s) {
    int lo = 0;
    int hi = std::numeric_limits<int>::max();
    for (int g = 0; g < m; ++g) {
      if ((s >> g) & 1U) {
        const int below = table.values[s & ~(uint32_t{1} << g)];
        lo = std::max(lo, below);
        hi = std::min(hi, below + 1);
      }
    }
    table.values[s] = (lo < hi && rng.Coin(p)) ? hi : lo;
  }
  return table;
}

ValuationSpec RandomSpec(GeneratorFamily family, Rng& rng, int m, double p) {
  switch (family) {
    case GeneratorFamily::kRandomAdditive:
      return AdditiveSpec{RandomSubset(rng, m, p)};
    case GeneratorFamily::kRandomThreshold: {
      std::vector<int> set = RandomSubset(rng, m, p);
      const int k = rng.Int(1, std::max<int>(1, set.size()));
      return ThresholdSpec{std::move(set), k};
    }
    case GeneratorFamily::kRandomCapped: {
      std::vector<int> liked = RandomSubset(rng, m, p);
      const int cap = rng.Int(1, std::max<int>(1, liked.size()));
      return CappedSpec{std::move(liked), cap};
    }
    case GeneratorFamily::kRandomMatroidRank: {
      const int num_parts = rng.Int(1, std::max(1, std::min(m, 4)));
      MatroidRankSpec spec;
      spec.parts.resize(num_parts);
      for (int g = 0; g < m; ++g) {
        // Part index num_parts leaves the item out of every part.
        const int part = rng.Int(0, num_parts);
        if (part < num_parts) spec.parts[part].push_back(g);
      }
      for (const auto& part : spec.parts) {
        spec.caps.push_back(rng.Int(1, std::max<int>(1, part.size())));
      }
      return spec;
    }
    case GeneratorFamily::kRandomTable:
      return RandomTable(rng, m, p);
    case GeneratorFamily::kPaperExample:
      break;
  }
  throw UsageError("not a random family");
}

}  // namespace

std::string GeneratorFamilyName(GeneratorFamily family) {
  switch (family) {
    case GeneratorFamily::kRandomAdditive:
      return "random_additive";
    case GeneratorFamily::kRandomThreshold:
      return "random_threshold";
    case GeneratorFamily::kRandomCapped:
      return "random_capped";
    case GeneratorFamily::kRandomMatroidRank:
      return "random_matroid_rank";
    case GeneratorFamily::kRandomTable:
      return "random_table";
    case GeneratorFamily::kPaperExample:
      return "paper_example";
  }
  return "unknown";
}

const std::vector<GeneratorFamily>& AllGeneratorFamilies() {
  static const std::vector<GeneratorFamily> kAll = {
      GeneratorFamily::kRandomAdditive,     GeneratorFamily::kRandomThreshold,
      GeneratorFamily::kRandomCapped,       GeneratorFamily::kRandomMatroidRank,
      GeneratorFamily::kRandomTable,        GeneratorFamily::kPaperExample};
  return kAll;
}

std::optional<GeneratorFamily> ParseGeneratorFamily(std::string_view name) {
  for (GeneratorFamily family : AllGeneratorFamilies()) {
    if (GeneratorFamilyName(family) == name) return family;
  }
  return std::nullopt;
}

Instance Generate(GeneratorFamily family, int n, int m, uint64_t seed,
                  const GeneratorParams& params) {
  if (n < 1) throw UsageError("n must be at least 1");
  if (m < 0) throw UsageError("m must be non-negative");
  if (!(params.like_probability >= 0.0 && params.like_probability <= 1.0)) {
    throw UsageError("like probability must lie in [0, 1]");
  }
  std::vector<ValuationSpec> specs;
  if (family == GeneratorFamily::kPaperExample) {
    if (m < n) throw UsageError("paper_example needs m >= n");
    specs.push_back(ThresholdSpec{AllItems(m), m - n + 1});
    for (int i = 1; i < n; ++i) specs.push_back(AdditiveSpec{AllItems(m)});
    return Instance(m, std::move(specs));
  }
  if (family == GeneratorFamily::kRandomTable && m > kMaxTableItems) {
    throw UsageError("random_table supports at most " +
                     std::to_string(kMaxTableItems) + " items");
  }
  Rng rng(seed);
  for (int i = 0; i < n; ++i) {
    specs.push_back(RandomSpec(family, rng, m, params.like_probability));
  }
  return Instance(m, std::move(specs));
}

}  // namespace efx
