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

#include "efx/io.h"
#include "gtest/gtest.h"

namespace efx {
namespace {

TEST(GenerateTest, SameSeedSameInstance) {
  for (GeneratorFamily family : AllGeneratorFamilies()) {
    EXPECT_EQ(SerializeInstance(Generate(family, 3, 8, 42)),
              SerializeInstance(Generate(family, 3, 8, 42)))
        << GeneratorFamilyName(family);
  }
  EXPECT_NE(SerializeInstance(Generate(GeneratorFamily::kRandomAdditive, 3, 8, 1)),
            SerializeInstance(Generate(GeneratorFamily::kRandomAdditive, 3, 8, 2)));
}

TEST(GenerateTest, NamesRoundTrip) {
  EXPECT_EQ(AllGeneratorFamilies().size(), 6U);
  for (GeneratorFamily family : AllGeneratorFamilies()) {
    EXPECT_EQ(ParseGeneratorFamily(GeneratorFamilyName(family)), family);
  }
  EXPECT_FALSE(ParseGeneratorFamily("random_gross").has_value());
}

TEST(GenerateTest, ThresholdExampleShape) {
  const Instance instance = Generate(GeneratorFamily::kPaperExample, 2, 4, 0);
  const auto& t = std::get<ThresholdSpec>(instance.spec(0));
  EXPECT_EQ(t.k, 3);
  EXPECT_EQ(t.set, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_EQ(std::get<AdditiveSpec>(instance.spec(1)).liked,
            (std::vector<int>{0, 1, 2, 3}));
  EXPECT_THROW(Generate(GeneratorFamily::kPaperExample, 3, 2, 0), UsageError);
}

TEST(GenerateTest, TablesAreBinary) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const Instance instance =
        Generate(GeneratorFamily::kRandomTable, 2, 1 + seed % 8, seed);
    for (int i = 0; i < 2; ++i) {
      EXPECT_FALSE(ValidateBinary(std::get<TableSpec>(instance.spec(i)),
                                  instance.num_items())
                       .has_value());
    }
  }
  EXPECT_THROW(Generate(GeneratorFamily::kRandomTable, 2, 17, 0), UsageError);
}

TEST(GenerateTest, RejectsBadParameters) {
  EXPECT_THROW(Generate(GeneratorFamily::kRandomAdditive, 0, 3, 0), UsageError);
  EXPECT_THROW(Generate(GeneratorFamily::kRandomAdditive, 2, -1, 0), UsageError);
  EXPECT_THROW(
      Generate(GeneratorFamily::kRandomAdditive, 2, 3, 0, {.like_probability = 1.5}),
      UsageError);
}

TEST(GenerateTest, LikeProbabilityExtremes) {
  const Instance none = Generate(GeneratorFamily::kRandomAdditive, 2, 6, 0,
                                 {.like_probability = 0.0});
  EXPECT_TRUE(std::get<AdditiveSpec>(none.spec(0)).liked.empty());
  const Instance all = Generate(GeneratorFamily::kRandomAdditive, 2, 6, 0,
                                {.like_probability = 1.0});
  EXPECT_EQ(std::get<AdditiveSpec>(all.spec(1)).liked.size(), 6U);
}

}  // namespace
}  // namespace efx
