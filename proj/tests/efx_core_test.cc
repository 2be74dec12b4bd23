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

#include "efx/efx_core.h"

#include "efx/generate.h"
#include "efx/safe_bundle.h"
#include "efx/verify.h"
#include "gtest/gtest.h"
#include "oracle.h"

namespace efx {
namespace {

using testing::MakeAllocation;
using testing::OracleStrongEnvy;
using testing::ToSet;

Instance TwoAgentInstance() {
  return Instance(4, {AdditiveSpec{{1, 3}}, AdditiveSpec{{0, 1, 3}}});
}

TEST(SafeBundleTest, TwoAgentExample) {
  const Instance instance = TwoAgentInstance();
  const PartialAllocation a = MakeAllocation(instance, {{0, 2}, {1}});
  EXPECT_EQ(StrongEnvierOfAugmented(instance, a, 0, 3), 0);
  const SafeBundleResult r = SafeBundle(instance, a, 0, 3);
  EXPECT_EQ(r.bundle.items(), std::vector<int>{3});
  EXPECT_EQ(r.agent, 0);
}

TEST(SafeBundleTest, EmptyBundlePlusItemIsNeverStronglyEnvied) {
  const Instance instance = TwoAgentInstance();
  const PartialAllocation a = MakeAllocation(instance, {{}, {1}});
  EXPECT_FALSE(StrongEnvierOfAugmented(instance, a, 0, 3).has_value());
  EXPECT_THROW(SafeBundle(instance, a, 0, 3), UsageError);
}

TEST(SafeBundleTest, RejectsBrokenPreconditions) {
  const Instance instance = TwoAgentInstance();
  // Item not in the pool.
  EXPECT_THROW(
      SafeBundle(instance, MakeAllocation(instance, {{0, 2}, {1}}), 0, 1),
      UsageError);
  // Input allocation not EFX: agent 1 strongly envies {0, 1, 3}.
  EXPECT_THROW(
      SafeBundle(instance, MakeAllocation(instance, {{0, 1, 3}, {}}), 1, 2),
      UsageError);
}

// The returned bundle is a subset of A_i + g, nobody strongly envies it and
// the reported agent envies it, for every state the solver passes through.
TEST(SafeBundleTest, PostconditionsOnSolverStates) {
  int checked = 0;
  for (uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const int m = 2 + static_cast<int>(seed % 8);
    const Instance instance =
        Generate(AllGeneratorFamilies()[seed % 5], n, m, seed);
    PartialAllocation a = PartialAllocation::Empty(instance);
    while (!a.pool.empty()) {
      const int g = a.pool.First();
      for (int i = 0; i < n; ++i) {
        if (!StrongEnvierOfAugmented(instance, a, i, g)) continue;
        const SafeBundleResult r = SafeBundle(instance, a, i, g);
        ++checked;
        EXPECT_TRUE(r.bundle.IsSubsetOf(a.bundles[i].With(g)));
        const Valuation& vc = instance.valuation(r.agent);
        EXPECT_GT(vc.Value(r.bundle), vc.Value(a.bundles[r.agent]));
        for (int k = 0; k < n; ++k) {
          EXPECT_FALSE(OracleStrongEnvy(instance.spec(k), ToSet(a.bundles[k]),
                                        ToSet(r.bundle)))
              << "seed " << seed << " agent " << k;
        }
      }
      a = EliminateAllEnvyCycles(instance, Update(instance, a, g).allocation)
              .allocation;
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(U0CandidateTest, Examples) {
  const Instance both(2, {AdditiveSpec{{0, 1}}, AdditiveSpec{{0, 1}}});
  EXPECT_EQ(U0Candidate(both, PartialAllocation::Empty(both), 0), 0);
  // Agent 1 is the only source once agent 0 envies it.
  EXPECT_EQ(U0Candidate(both, MakeAllocation(both, {{}, {0}}), 1), 0);
  const PartialAllocation a = MakeAllocation(both, {{0}, {}});
  EXPECT_EQ(U0Candidate(both, a, 1), 1);

  const Instance instance = TwoAgentInstance();
  EXPECT_FALSE(
      U0Candidate(instance, MakeAllocation(instance, {{0, 2}, {1}}), 3));
}

TEST(ApplyU0Test, MovesItemFromPool) {
  const Instance instance = TwoAgentInstance();
  const PartialAllocation a = ApplyU0(
      instance, PartialAllocation::Empty(instance), 2, 1);
  EXPECT_EQ(a.bundles[1].items(), std::vector<int>{2});
  EXPECT_FALSE(a.pool.contains(2));
  EXPECT_THROW(ApplyU0(instance, a, 2, 0), UsageError);
}

TEST(ApplyU1Test, TwoAgentExample) {
  const Instance instance = TwoAgentInstance();
  const PartialAllocation a = MakeAllocation(instance, {{0, 2}, {1}});
  EXPECT_EQ(Usw(instance, a), 1);
  const SourceCycle cycle = FindSourceCycle(instance, a, 3);
  const PartialAllocation b = ApplyU1(instance, a, 3, cycle);
  EXPECT_EQ(b.bundles[0].items(), std::vector<int>{3});
  EXPECT_EQ(b.bundles[1].items(), std::vector<int>{1});
  EXPECT_EQ(b.pool.items(), (std::vector<int>{0, 2}));
  EXPECT_EQ(Usw(instance, b), 2);
  EXPECT_TRUE(IsEfx(instance, b));
}

TEST(UpdateTest, ReportsEvents) {
  const Instance instance = TwoAgentInstance();
  const UpdateResult u0 = Update(instance, PartialAllocation::Empty(instance), 0);
  EXPECT_EQ(u0.event.kind, EventKind::kU0);
  EXPECT_EQ(u0.event.item, 0);
  EXPECT_EQ(u0.event.agent, 0);
  EXPECT_EQ(u0.event.usw_after, 0);

  const UpdateResult u1 =
      Update(instance, MakeAllocation(instance, {{0, 2}, {1}}), 3);
  EXPECT_EQ(u1.event.kind, EventKind::kU1);
  EXPECT_EQ(u1.event.item, 3);
  EXPECT_FALSE(u1.event.agent.has_value());
  EXPECT_EQ(u1.event.cycle, std::vector<int>{0});
  EXPECT_EQ(u1.event.safe_bundle, std::vector<int>{3});
  EXPECT_EQ(u1.event.returned_items, (std::vector<int>{0, 2}));
  EXPECT_EQ(u1.event.usw_after, 2);
}

TEST(UpdateBudgetTest, Formula) {
  EXPECT_EQ(UpdateBudget(2, 4), 16 * 2 + 8 + 4);
  EXPECT_EQ(UpdateBudget(50, 1000), int64_t{1000} * 1000 * 50 + 50'000 + 1000);
}

TEST(SolveTest, ThresholdExample) {
  const Instance instance = Generate(GeneratorFamily::kPaperExample, 2, 4, 0);
  const SolveResult r = Solve(instance);
  EXPECT_EQ(r.allocation.bundles[0].items(), (std::vector<int>{0, 2}));
  EXPECT_EQ(r.allocation.bundles[1].items(), (std::vector<int>{1, 3}));
  EXPECT_EQ(Usw(instance, r.allocation), 2);
  ASSERT_EQ(r.trace.size(), 4U);
  const std::vector<int> agents = {0, 1, 0, 1};
  for (int t = 0; t < 4; ++t) {
    EXPECT_EQ(r.trace[t].step, t);
    EXPECT_EQ(r.trace[t].kind, EventKind::kU0);
    EXPECT_EQ(r.trace[t].item, t);
    EXPECT_EQ(r.trace[t].agent, agents[t]);
  }
  EXPECT_EQ(r.stats.u0, 4);
  EXPECT_EQ(r.stats.u1, 0);
}

TEST(SolveTest, IdenticalAgentsAlternate) {
  const Instance instance(2, {AdditiveSpec{{0, 1}}, AdditiveSpec{{0, 1}}});
  const SolveResult r = Solve(instance);
  ASSERT_EQ(r.trace.size(), 2U);
  EXPECT_EQ(r.trace[0].agent, 0);
  EXPECT_EQ(r.trace[1].agent, 1);
}

TEST(SolveTest, DegenerateInstances) {
  const Instance no_items(0, {AdditiveSpec{}, AdditiveSpec{}});
  const SolveResult empty = Solve(no_items);
  EXPECT_TRUE(empty.trace.empty());
  EXPECT_TRUE(empty.allocation.IsComplete());

  const Instance single(5, {ThresholdSpec{{0, 1, 2, 3, 4}, 5}});
  const SolveResult one = Solve(single);
  EXPECT_EQ(one.allocation.bundles[0].size(), 5);
  EXPECT_EQ(Usw(single, one.allocation), 1);
}

// Every run ends complete and EFX by an independent check, within the
// update bounds, and welfare never drops along the trace.
TEST(SolvePropertyTest, RandomInstances) {
  for (uint64_t seed = 0; seed < 500; ++seed) {
    const int n = 1 + static_cast<int>(seed % 6);
    const int m = 1 + static_cast<int>((seed / 6) % 10);
    const Instance instance =
        Generate(AllGeneratorFamilies()[seed % 5], n, m, seed);
    const SolveResult r = Solve(instance);
    EXPECT_TRUE(r.allocation.IsComplete());
    EXPECT_FALSE(r.allocation.PartitionError(instance).has_value());
    EXPECT_FALSE(FindEfxViolation(instance, r.allocation).has_value())
        << "seed " << seed;
    EXPECT_LE(r.stats.u1, int64_t{m} * n);
    EXPECT_LE(r.stats.u0 + r.stats.u1, UpdateBudget(n, m));
    int last = 0;
    for (const TraceEvent& e : r.trace) {
      if (e.kind == EventKind::kU1) {
        EXPECT_GT(e.usw_after, last);
      }
      EXPECT_GE(e.usw_after, last);
      last = e.usw_after;
    }
    EXPECT_EQ(last, Usw(instance, r.allocation));
  }
}

TEST(SolvePropertyTest, Deterministic) {
  for (uint64_t seed = 0; seed < 50; ++seed) {
    const Instance instance =
        Generate(AllGeneratorFamilies()[seed % 5], 4, 9, seed);
    const SolveResult a = Solve(instance);
    const SolveResult b = Solve(instance);
    EXPECT_EQ(a.allocation, b.allocation);
    EXPECT_EQ(a.trace, b.trace);
  }
}

TEST(SolvePropertyTest, ExercisesEveryEventKind) {
  int u1 = 0, elim = 0;
  for (uint64_t seed = 0; seed < 200; ++seed) {
    const SolveResult r = Solve(
        Generate(AllGeneratorFamilies()[seed % 5], 4, 10, seed));
    u1 += r.stats.u1;
    elim += r.stats.eliminations;
  }
  EXPECT_GT(u1, 0);
  EXPECT_GT(elim, 0);
}

}  // namespace
}  // namespace efx
