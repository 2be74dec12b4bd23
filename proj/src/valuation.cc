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

#include "efx/valuation.h"

#include <algorithm>
#include <limits>

namespace efx {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};

Bundle MaskOf(const std::vector<int>& items, int num_items,
              const char* what) {
  Bundle mask(num_items);
  for (int item : items) {
    if (item < 0 || item >= num_items) {
      throw UsageError(std::string(what) + ": item index " +
                       std::to_string(item) + " out of range [0, " +
                       std::to_string(num_items) + ")");
    }
    mask.insert(item);
  }
  return mask;
}

std::string SubsetString(uint32_t mask) {
  std::string out = "{";
  bool first = true;
  for (int g = 0; g < 32; ++g) {
    if ((mask >> g) & 1U) {
      if (!first) out += ",";
      out += std::to_string(g);
      first = false;
    }
  }
  return out + "}";
}

}  // namespace

std::string FamilyName(const ValuationSpec& spec) {
  return std::visit(
      Overloaded{[](const AdditiveSpec&) { return "additive"; },
                 [](const ThresholdSpec&) { return "threshold"; },
                 [](const CappedSpec&) { return "capped"; },
                 [](const MatroidRankSpec&) { return "matroid_rank"; },
                 [](const TableSpec&) { return "table"; }},
      spec);
}

std::string ReasonName(BinaryViolationReason reason) {
  switch (reason) {
    case BinaryViolationReason::kNotNormalized:
      return "not-normalized";
    case BinaryViolationReason::kNegativeMarginal:
      return "negative-marginal";
    case BinaryViolationReason::kMarginalAboveOne:
      return "marginal-above-one";
  }
  return "unknown";
}

std::string BinaryViolation::ToString() const {
  std::string out = "subset " + SubsetString(subset) + " (mask " +
                    std::to_string(subset) + ")";
  if (item.has_value()) out += ", item " + std::to_string(*item);
  return out + ", " + ReasonName(reason);
}

std::optional<BinaryViolation> ValidateBinary(const TableSpec& table,
                                              int num_items) {
  if (num_items < 0 || num_items > kMaxTableItems) {
    throw FormatError("table valuations support at most " +
                      std::to_string(kMaxTableItems) + " items, got " +
                      std::to_string(num_items));
  }
  const uint32_t subsets = uint32_t{1} << num_items;
  if (table.values.size() != subsets) {
    throw FormatError("table must define all " + std::to_string(subsets) +
                      " subsets, got " + std::to_string(table.values.size()));
  }
  if (table.values[0] != 0) {
    return BinaryViolation{0, std::nullopt,
                           BinaryViolationReason::kNotNormalized};
  }
  for (uint32_t s = 0; s < subsets; ++s) {
    for (int g = 0; g < num_items; ++g) {
      const uint32_t bit = uint32_t{1} << g;
      if (s & bit) continue;
      const int delta = table.values[s | bit] - table.values[s];
      if (delta < 0) {
        return BinaryViolation{s, g, BinaryViolationReason::kNegativeMarginal};
      }
      if (delta > 1) {
        return BinaryViolation{s, g, BinaryViolationReason::kMarginalAboveOne};
      }
    }
  }
  return std::nullopt;
}

Valuation Valuation::Compile(const ValuationSpec& spec, int num_items) {
  Valuation v;
  v.spec_ = spec;
  v.num_items_ = num_items;
  std::visit(
      Overloaded{
          [&](const AdditiveSpec& s) {
            v.kind_ = Kind::kParts;
            v.masks_.push_back(MaskOf(s.liked, num_items, "additive"));
            v.caps_.push_back(std::numeric_limits<int>::max());
          },
          [&](const ThresholdSpec& s) {
            if (s.k < 1) throw UsageError("threshold: k must be positive");
            v.kind_ = Kind::kThreshold;
            v.masks_.push_back(MaskOf(s.set, num_items, "threshold"));
            v.threshold_ = s.k;
          },
          [&](const CappedSpec& s) {
            if (s.cap < 1) throw UsageError("capped: cap must be positive");
            v.kind_ = Kind::kParts;
            v.masks_.push_back(MaskOf(s.liked, num_items, "capped"));
            v.caps_.push_back(s.cap);
          },
          [&](const MatroidRankSpec& s) {
            if (s.parts.size() != s.caps.size()) {
              throw UsageError("matroid_rank: parts and caps differ in length");
            }
            v.kind_ = Kind::kParts;
            Bundle seen(num_items);
            for (size_t j = 0; j < s.parts.size(); ++j) {
              if (s.caps[j] < 1) {
                throw UsageError("matroid_rank: caps must be positive");
              }
              Bundle mask = MaskOf(s.parts[j], num_items, "matroid_rank");
              if (!mask.IsDisjointFrom(seen)) {
                throw UsageError("matroid_rank: parts must be disjoint");
              }
              seen |= mask;
              v.masks_.push_back(std::move(mask));
              v.caps_.push_back(s.caps[j]);
            }
          },
          [&](const TableSpec& s) {
            if (auto violation = ValidateBinary(s, num_items)) {
              throw BinaryViolationError(*violation);
            }
            v.kind_ = Kind::kTable;
            v.table_ = s.values;
          }},
      spec);
  return v;
}

int Valuation::Evaluate(const Bundle& bundle, int removed, int added) const {
  if (removed >= 0 && !bundle.contains(removed)) removed = -1;
  if (added >= 0 && bundle.contains(added)) added = -1;
  switch (kind_) {
    case Kind::kTable: {
      uint64_t mask = bundle.LowBits();
      if (removed >= 0) mask &= ~(uint64_t{1} << removed);
      if (added >= 0) mask |= uint64_t{1} << added;
      return table_[mask];
    }
    case Kind::kThreshold: {
      const Bundle& set = masks_[0];
      int count = bundle.CountCommon(set);
      if (removed >= 0 && set.contains(removed)) --count;
      if (added >= 0 && set.contains(added)) ++count;
      return count >= threshold_ ? 1 : 0;
    }
    case Kind::kParts: {
      int total = 0;
      for (size_t j = 0; j < masks_.size(); ++j) {
        int count = bundle.CountCommon(masks_[j]);
        if (removed >= 0 && masks_[j].contains(removed)) --count;
        if (added >= 0 && masks_[j].contains(added)) ++count;
        total += std::min(count, caps_[j]);
      }
      return total;
    }
  }
  return 0;
}

int Valuation::Marginal(const Bundle& bundle, int item) const {
  const int delta = ValueWith(bundle, item) - Value(bundle);
  if (delta != 0 && delta != 1) {
    throw InternalError("non-binary marginal " + std::to_string(delta) +
                        " for item " + std::to_string(item) + " on bundle " +
                        bundle.ToString());
  }
  return delta;
}

}  // namespace efx
