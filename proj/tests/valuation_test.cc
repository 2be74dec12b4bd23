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

#include <random>

#include "efx/generate.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace efx {
namespace {

using testing::ItemSet;
using testing::OracleValue;

Bundle Items(int m, std::initializer_list<int> items) {
  return Bundle::FromItems(m, items);
}

TEST(ValuationTest, EveryFamilyIsNormalized) {
  const std::vector<ValuationSpec> specs = {
      AdditiveSpec{{0, 1}},
      ThresholdSpec{{0, 1, 2}, 2},
      CappedSpec{{1, 2}, 1},
      MatroidRankSpec{{{0}, {1, 2}}, {1, 1}},
      TableSpec{{0, 1, 0, 1, 1, 1, 1, 2}},
  };
  for (const ValuationSpec& spec : specs) {
    EXPECT_EQ(Valuation::Compile(spec, 3).Value(Bundle(3)), 0)
        << FamilyName(spec);
  }
}

TEST(ValuationTest, ThresholdCountsItemsInSet) {
  const Valuation v = Valuation::Compile(ThresholdSpec{{0, 1, 2, 3}, 3}, 4);
  EXPECT_EQ(v.Value(Items(4, {0, 1, 2})), 1);
  EXPECT_EQ(v.Value(Items(4, {0, 1})), 0);
  EXPECT_EQ(v.Value(Bundle::Full(4)), 1);
}

TEST(ValuationTest, MatroidRankMatchesGreedyRank) {
  const MatroidRankSpec spec{{{0, 1}, {2}}, {1, 1}};
  const Valuation v = Valuation::Compile(spec, 3);
  EXPECT_EQ(v.Value(Items(3, {0, 1, 2})), 2);
  EXPECT_EQ(testing::GreedyPartitionRank(spec, {0, 1, 2}), 2);
  for (unsigned mask = 0; mask < 8; ++mask) {
    ItemSet s;
    for (int g = 0; g < 3; ++g) {
      if (mask >> g & 1U) s.insert(g);
    }
    EXPECT_EQ(v.Value(Bundle::FromItems(3, std::vector<int>(s.begin(), s.end()))),
              testing::GreedyPartitionRank(spec, s));
  }
}

TEST(ValuationTest, Marginals) {
  const Valuation additive = Valuation::Compile(AdditiveSpec{{0}}, 2);
  EXPECT_EQ(additive.Marginal(Bundle(2), 0), 1);
  EXPECT_EQ(additive.Marginal(Bundle(2), 1), 0);

  const Valuation threshold = Valuation::Compile(ThresholdSpec{{0, 1, 2}, 3}, 4);
  EXPECT_EQ(threshold.Marginal(Items(4, {0, 1}), 2), 1);
  EXPECT_EQ(threshold.Marginal(Items(4, {0, 1}), 3), 0);
  EXPECT_EQ(threshold.Marginal(Items(4, {0}), 2), 0);
}

TEST(ValuationTest, ValueWithAndWithoutMatchCopies) {
  const Valuation v = Valuation::Compile(CappedSpec{{0, 2, 4}, 2}, 6);
  const Bundle b = Items(6, {0, 1, 2});
  EXPECT_EQ(v.ValueWithout(b, 0), v.Value(b.Without(0)));
  EXPECT_EQ(v.ValueWith(b, 4), v.Value(b.With(4)));
  // Removing an absent item or adding a present one changes nothing.
  EXPECT_EQ(v.ValueWithout(b, 4), v.Value(b));
  EXPECT_EQ(v.ValueWith(b, 0), v.Value(b));
}

TEST(ValidateBinaryTest, AcceptsUnitAdditiveTable) {
  EXPECT_FALSE(ValidateBinary(TableSpec{{0, 1, 1, 2}}, 2).has_value());
}

TEST(ValidateBinaryTest, RejectsNonNormalized) {
  const auto violation = ValidateBinary(TableSpec{{1, 1, 1, 2}}, 2);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(*violation,
            (BinaryViolation{0, std::nullopt,
                             BinaryViolationReason::kNotNormalized}));
}

TEST(ValidateBinaryTest, ReportsFirstMarginalAboveOne) {
  // v({0}) = v({1}) = 1, v({0,1}) = 3: first hit scanning S = {0}, g = 1.
  const auto violation = ValidateBinary(TableSpec{{0, 1, 1, 3}}, 2);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(*violation,
            (BinaryViolation{1, 1, BinaryViolationReason::kMarginalAboveOne}));
}

TEST(ValidateBinaryTest, ReportsNegativeMarginal) {
  const auto violation = ValidateBinary(TableSpec{{0, 1, 1, 0}}, 2);
  ASSERT_TRUE(violation.has_value());
  EXPECT_EQ(*violation,
            (BinaryViolation{1, 1, BinaryViolationReason::kNegativeMarginal}));
}

TEST(ValidateBinaryTest, RejectsWrongSizeAndTooManyItems) {
  EXPECT_THROW(ValidateBinary(TableSpec{{0, 1, 1}}, 2), FormatError);
  EXPECT_THROW(ValidateBinary(TableSpec{{0}}, 17), FormatError);
}

TEST(CompileTest, RejectsInvalidSpecs) {
  EXPECT_THROW(Valuation::Compile(AdditiveSpec{{3}}, 3), UsageError);
  EXPECT_THROW(Valuation::Compile(ThresholdSpec{{0}, 0}, 3), UsageError);
  EXPECT_THROW(Valuation::Compile(CappedSpec{{0}, 0}, 3), UsageError);
  EXPECT_THROW(Valuation::Compile(MatroidRankSpec{{{0, 1}, {1}}, {1, 1}}, 3),
               UsageError);
  EXPECT_THROW(Valuation::Compile(MatroidRankSpec{{{0}}, {1, 1}}, 3),
               UsageError);
  try {
    Valuation::Compile(TableSpec{{0, 1, 1, 3}}, 2);
    FAIL() << "expected BinaryViolationError";
  } catch (const BinaryViolationError& e) {
    EXPECT_EQ(e.violation().subset, 1U);
    EXPECT_EQ(e.violation().item, 1);
  }
}

// Exhaustive over every subset for m <= 10: compiled values equal the set
// formulas, v(∅) = 0 and every single-item marginal is 0 or 1.
TEST(ValuationPropertyTest, ExhaustiveSmallUniverses) {
  for (GeneratorFamily family : AllGeneratorFamilies()) {
    if (family == GeneratorFamily::kPaperExample) continue;
    for (int m = 0; m <= 10; m += (m < 4 ? 1 : 3)) {
      for (uint64_t seed = 0; seed < 3; ++seed) {
        const Instance instance = Generate(family, 2, m, seed);
        for (int agent = 0; agent < 2; ++agent) {
          const Valuation& v = instance.valuation(agent);
          EXPECT_EQ(v.Value(Bundle(m)), 0);
          for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
            Bundle s(m);
            ItemSet set;
            for (int g = 0; g < m; ++g) {
              if (mask >> g & 1U) {
                s.insert(g);
                set.insert(g);
              }
            }
            ASSERT_EQ(v.Value(s), OracleValue(v.spec(), set))
                << GeneratorFamilyName(family) << " m=" << m;
            for (int g = 0; g < m; ++g) {
              if (s.contains(g)) continue;
              const int d = v.Value(s.With(g)) - v.Value(s);
              ASSERT_TRUE(d == 0 || d == 1);
            }
          }
        }
      }
    }
  }
}

TEST(ValuationPropertyTest, RandomPairsLargeUniverse) {
  constexpr int kItems = 70;
  std::mt19937_64 rng(11);
  for (GeneratorFamily family :
       {GeneratorFamily::kRandomAdditive, GeneratorFamily::kRandomThreshold,
        GeneratorFamily::kRandomCapped, GeneratorFamily::kRandomMatroidRank}) {
    const Instance instance = Generate(family, 1, kItems, 5);
    const Valuation& v = instance.valuation(0);
    for (int trial = 0; trial < 10'000; ++trial) {
      Bundle s(kItems);
      for (int g = 0; g < kItems; ++g) {
        if (rng() & 1) s.insert(g);
      }
      const int g = static_cast<int>(rng() % kItems);
      if (s.contains(g)) s.erase(g);
      const int d = v.Marginal(s, g);
      ASSERT_TRUE(d == 0 || d == 1);
      ASSERT_EQ(v.Value(s), OracleValue(v.spec(), testing::ToSet(s)));
    }
  }
}

}  // namespace
}  // namespace efx
