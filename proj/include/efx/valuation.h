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

#ifndef EFX_VALUATION_H_
#define EFX_VALUATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "efx/bundle.h"
#include "efx/errors.h"

namespace efx {

// v(S) = |S ∩ liked|.
struct AdditiveSpec {
  std::vector<int> liked;
  friend bool operator==(const AdditiveSpec&, const AdditiveSpec&) = default;
};

// v(S) = 1 if |S ∩ set| >= k, else 0.
struct ThresholdSpec {
  std::vector<int> set;
  int k = 1;
  friend bool operator==(const ThresholdSpec&, const ThresholdSpec&) = default;
};

// v(S) = min(|S ∩ liked|, cap).
struct CappedSpec {
  std::vector<int> liked;
  int cap = 1;
  friend bool operator==(const CappedSpec&, const CappedSpec&) = default;
};

// Rank function of a partition matroid: v(S) = sum_j min(|S ∩ parts[j]|,
// caps[j]). Parts must be pairwise disjoint.
struct MatroidRankSpec {
  std::vector<std::vector<int>> parts;
  std::vector<int> caps;
  friend bool operator==(const MatroidRankSpec&,
                         const MatroidRankSpec&) = default;
};

// Explicit value for every subset; values[mask] = v({g : bit g of mask}).
// Only allowed for up to kMaxTableItems items.
struct TableSpec {
  std::vector<int> values;
  friend bool operator==(const TableSpec&, const TableSpec&) = default;
};

inline constexpr int kMaxTableItems = 16;

using ValuationSpec = std::variant<AdditiveSpec, ThresholdSpec, CappedSpec,
                                   MatroidRankSpec, TableSpec>;

// Family name as used in instance files: "additive", "threshold", "capped",
// "matroid_rank", "table".
std::string FamilyName(const ValuationSpec& spec);

enum class BinaryViolationReason {
  kNotNormalized,
  kNegativeMarginal,
  kMarginalAboveOne,
};

std::string ReasonName(BinaryViolationReason reason);

struct BinaryViolation {
  uint32_t subset = 0;      // bitmask of S
  std::optional<int> item;  // g, absent for kNotNormalized
  BinaryViolationReason reason = BinaryViolationReason::kNotNormalized;

  std::string ToString() const;
  friend bool operator==(const BinaryViolation&,
                         const BinaryViolation&) = default;
};

class BinaryViolationError : public FormatError {
 public:
  explicit BinaryViolationError(const BinaryViolation& violation)
      : FormatError("table valuation is not binary: " + violation.ToString()),
        violation_(violation) {}
  const BinaryViolation& violation() const { return violation_; }

 private:
  BinaryViolation violation_;
};

// Scans every (S, g ∉ S) in ascending bitmask order of S, then ascending g,
// and reports the first place where v(∅) != 0 or v(S ∪ {g}) - v(S) ∉ {0, 1}.
// Throws FormatError if the table does not have exactly 2^num_items entries
// or num_items exceeds kMaxTableItems.
std::optional<BinaryViolation> ValidateBinary(const TableSpec& table,
                                              int num_items);

// Compiled, immutable valuation oracle over a fixed item universe.
class Valuation {
 public:
  // Throws UsageError on out-of-range items, overlapping matroid parts or
  // non-positive parameters, and BinaryViolationError for non-binary tables.
  static Valuation Compile(const ValuationSpec& spec, int num_items);

  int num_items() const { return num_items_; }
  const ValuationSpec& spec() const { return spec_; }

  int Value(const Bundle& bundle) const { return Evaluate(bundle, -1, -1); }
  // v(bundle \ {item}) and v(bundle ∪ {item}) without materializing a copy.
  int ValueWithout(const Bundle& bundle, int item) const {
    return Evaluate(bundle, item, -1);
  }
  int ValueWith(const Bundle& bundle, int item) const {
    return Evaluate(bundle, -1, item);
  }
  // v(bundle ∪ {item}) - v(bundle). Throws InternalError if the result is
  // outside {0, 1}.
  int Marginal(const Bundle& bundle, int item) const;

 private:
  enum class Kind { kParts, kThreshold, kTable };

  Valuation() = default;
  int Evaluate(const Bundle& bundle, int removed, int added) const;

  ValuationSpec spec_;
  int num_items_ = 0;
  Kind kind_ = Kind::kParts;
  // kParts / kThreshold: part masks; for kThreshold exactly one.
  std::vector<Bundle> masks_;
  std::vector<int> caps_;
  int threshold_ = 0;
  std::vector<int> table_;
};

}  // namespace efx

#endif  // EFX_VALUATION_H_
