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

// Command-line front end. Exit codes: 0 success, 2 verification failure,
// 3 input error, 4 internal invariant breach. Errors are reported on stderr
// as a single JSON object.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "efx/efx_core.h"
#include "efx/envy_graph.h"
#include "efx/errors.h"
#include "efx/generate.h"
#include "efx/io.h"
#include "efx/model.h"
#include "efx/verify.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 2;
constexpr int kExitInputError = 3;
constexpr int kExitInternalError = 4;

using nlohmann::json;

int ReportError(const std::string& kind, const std::string& message,
                int code) {
  std::cerr << json{{"error", kind}, {"message", message}}.dump() << "\n";
  return code;
}

void PrintAllocationSummary(const efx::Instance& instance,
                            const efx::PartialAllocation& allocation) {
  std::cout << "usw " << efx::Usw(instance, allocation) << "\n";
  for (int i = 0; i < instance.num_agents(); ++i) {
    std::cout << "agent " << i << " value "
              << efx::AgentValue(instance, allocation, i) << " bundle "
              << allocation.bundles[i].ToString() << "\n";
  }
}

int RunSolve(const std::string& instance_path, const std::string& out_path,
             const std::string& trace_path, bool dump_graph) {
  const efx::Instance instance = efx::LoadInstance(instance_path);
  const efx::SolveResult result = efx::Solve(instance);
  PrintAllocationSummary(instance, result.allocation);
  std::cout << "steps u0 " << result.stats.u0 << " u1 " << result.stats.u1
            << " eliminations " << result.stats.eliminations << "\n";
  if (dump_graph) {
    std::cout << efx::BuildGraph(instance, result.allocation).Dump();
  }
  if (!out_path.empty()) {
    efx::SaveAllocation(instance, result.allocation, out_path);
  }
  if (!trace_path.empty()) efx::SaveTrace(result.trace, trace_path);
  return kExitOk;
}

int RunVerify(const std::string& instance_path,
              const std::string& allocation_path) {
  const efx::Instance instance = efx::LoadInstance(instance_path);
  const efx::PartialAllocation allocation =
      efx::LoadAllocation(instance, allocation_path);
  const efx::EfxCheck check = efx::CheckEfx(instance, allocation);
  json out{{"efx", check.efx}, {"complete", allocation.IsComplete()}};
  if (check.violation) {
    out["violation"] = json{{"envier", check.violation->envier},
                            {"envied", check.violation->envied},
                            {"item", check.violation->item}};
  } else {
    out["proposition_gap"] =
        efx::ReportToJson(efx::CheckPropositionGap(instance, allocation));
  }
  std::cout << out.dump(2) << "\n";
  return check.efx ? kExitOk : kExitVerificationFailed;
}

int RunBrute(const std::string& instance_path) {
  const efx::Instance instance = efx::LoadInstance(instance_path);
  const auto found = efx::BruteForceEfx(instance);
  if (!found) {
    std::cout << "no EFX allocation found\n";
    return kExitVerificationFailed;
  }
  std::cout << efx::SerializeAllocation(instance, *found);
  return kExitOk;
}

int RunGen(const std::string& family_name, int n, int m, uint64_t seed,
           double like_probability, const std::string& out_path) {
  const auto family = efx::ParseGeneratorFamily(family_name);
  if (!family) throw efx::UsageError("unknown family " + family_name);
  const efx::Instance instance =
      efx::Generate(*family, n, m, seed, {like_probability});
  if (out_path.empty()) {
    std::cout << efx::SerializeInstance(instance);
  } else {
    efx::SaveInstance(instance, out_path);
  }
  return kExitOk;
}

int RunReplay(const std::string& instance_path,
              const std::string& trace_path) {
  const efx::Instance instance = efx::LoadInstance(instance_path);
  const efx::Trace trace = efx::LoadTrace(trace_path);
  const efx::VerificationReport report = efx::ReplayTrace(instance, trace);
  std::cout << efx::ReportToJson(report).dump(2) << "\n";
  return report.passed ? kExitOk : kExitVerificationFailed;
}

int RunBench(const std::string& family_name, int n, int m, int reps,
             uint64_t seed, double like_probability) {
  const auto family = efx::ParseGeneratorFamily(family_name);
  if (!family) throw efx::UsageError("unknown family " + family_name);
  if (reps < 1) throw efx::UsageError("reps must be positive");
  std::cout << "family,n,m,seed,millis,u0,u1,eliminations,usw\n";
  for (int r = 0; r < reps; ++r) {
    const uint64_t rep_seed = seed + static_cast<uint64_t>(r);
    const efx::Instance instance =
        efx::Generate(*family, n, m, rep_seed, {like_probability});
    const auto start = std::chrono::steady_clock::now();
    const efx::SolveResult result = efx::Solve(instance);
    const auto stop = std::chrono::steady_clock::now();
    const double millis =
        std::chrono::duration<double, std::milli>(stop - start).count();
    std::cout << family_name << "," << n << "," << m << "," << rep_seed << ","
              << millis << "," << result.stats.u0 << "," << result.stats.u1
              << "," << result.stats.eliminations << ","
              << efx::Usw(instance, result.allocation) << "\n";
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"EFX allocations for binary valuations"};
  app.require_subcommand(1);

  std::string instance_path;
  std::string second_path;
  std::string out_path;
  std::string trace_path;
  bool dump_graph = false;
  std::string family;
  int n = 0;
  int m = 0;
  int reps = 1;
  uint64_t seed = 0;
  double like_probability = 0.5;

  CLI::App* solve = app.add_subcommand("solve", "Compute an EFX allocation");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--out", out_path, "Write the allocation JSON here");
  solve->add_option("--trace", trace_path, "Write the JSONL trace here");
  solve->add_flag("--dump-graph", dump_graph,
                  "Print the final envy graph (E/E' edges)");

  CLI::App* verify =
      app.add_subcommand("verify", "Check an allocation for EFX");
  verify->add_option("instance", instance_path)->required();
  verify->add_option("allocation", second_path)->required();

  CLI::App* brute =
      app.add_subcommand("brute", "Search all assignments for an EFX one");
  brute->add_option("instance", instance_path)->required();

  CLI::App* gen = app.add_subcommand("gen", "Generate a seeded instance");
  gen->add_option("--family", family)->required();
  gen->add_option("--n", n)->required();
  gen->add_option("--m", m)->required();
  gen->add_option("--seed", seed);
  gen->add_option("--like-probability", like_probability);
  gen->add_option("--out", out_path);

  CLI::App* replay = app.add_subcommand("replay", "Audit a solver trace");
  replay->add_option("instance", instance_path)->required();
  replay->add_option("trace", second_path)->required();

  CLI::App* bench = app.add_subcommand("bench", "Time the solver (CSV)");
  bench->add_option("--family", family)->required();
  bench->add_option("--n", n)->required();
  bench->add_option("--m", m)->required();
  bench->add_option("--reps", reps);
  bench->add_option("--seed", seed);
  bench->add_option("--like-probability", like_probability);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return ReportError("usage", e.what(), kExitInputError);
  }

  try {
    if (*solve) return RunSolve(instance_path, out_path, trace_path, dump_graph);
    if (*verify) return RunVerify(instance_path, second_path);
    if (*brute) return RunBrute(instance_path);
    if (*gen) return RunGen(family, n, m, seed, like_probability, out_path);
    if (*replay) return RunReplay(instance_path, second_path);
    if (*bench) return RunBench(family, n, m, reps, seed, like_probability);
  } catch (const efx::BinaryViolationError& e) {
    return ReportError("binary_violation", e.what(), kExitInputError);
  } catch (const efx::FormatError& e) {
    return ReportError("format", e.what(), kExitInputError);
  } catch (const efx::UsageError& e) {
    return ReportError("usage", e.what(), kExitInputError);
  } catch (const efx::InternalError& e) {
    return ReportError("internal", e.what(), kExitInternalError);
  }
  return kExitInputError;
}
