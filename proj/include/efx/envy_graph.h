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

#ifndef EFX_ENVY_GRAPH_H_
#define EFX_ENVY_GRAPH_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "efx/model.h"
#include "efx/safe_bundle.h"

namespace efx {

// Agents u_0, ..., u_{k-1} with an edge u_i -> u_{(i+1) mod k}.
using Cycle = std::vector<int>;

// c ⇢_g s: c is the maximal envious agent of the safe bundle computed for
// source s and pool item g.
struct MaximalEnvyEdge {
  int from = -1;  // c
  int to = -1;    // s
  SafeBundleResult safe;
  friend bool operator==(const MaximalEnvyEdge&,
                         const MaximalEnvyEdge&) = default;
};

// Envy (i -> j iff v_i(A_i) < v_i(A_j)) and pre-envy (i ⇢ j iff
// v_i(A_i) = v_i(A_j), i != j) relations of one allocation. Always rebuilt
// from scratch after the allocation changes.
class EnvyGraph {
 public:
  explicit EnvyGraph(int num_agents);

  int num_agents() const { return n_; }
  bool HasEnvy(int i, int j) const { return kind_[i * n_ + j] == kEnvy; }
  bool HasPreEnvy(int i, int j) const { return kind_[i * n_ + j] == kPreEnvy; }

  // Envy out-neighbours of i, ascending.
  const std::vector<int>& EnvyOut(int i) const { return envy_out_[i]; }

  std::vector<std::pair<int, int>> EnvyEdges() const;
  std::vector<std::pair<int, int>> PreEnvyEdges() const;

  // Transient edges added while building a U1 cycle.
  const std::vector<MaximalEnvyEdge>& maximal_edges() const {
    return maximal_edges_;
  }
  void AddMaximalEdge(MaximalEnvyEdge edge) {
    maximal_edges_.push_back(std::move(edge));
  }

  void AddEdge(int i, int j, bool envy);

  // One line per edge: "E i j", "E' i j" or "Eg c s".
  std::string Dump() const;

  friend bool operator==(const EnvyGraph&, const EnvyGraph&) = default;

 private:
  static constexpr uint8_t kNone = 0;
  static constexpr uint8_t kEnvy = 1;
  static constexpr uint8_t kPreEnvy = 2;

  int n_;
  std::vector<uint8_t> kind_;
  std::vector<std::vector<int>> envy_out_;
  std::vector<MaximalEnvyEdge> maximal_edges_;
};

EnvyGraph BuildGraph(const Instance& instance,
                     const PartialAllocation& allocation);

// Agents no one envies (only envy edges count), ascending.
std::vector<int> Sources(const EnvyGraph& graph);

// Depth-first search from the smallest agent, out-neighbours ascending; the
// first back edge found closes the returned cycle.
std::optional<Cycle> FindEnvyCycle(const EnvyGraph& graph);

// Each u_i receives the bundle of u_{i+1}. Every agent on the cycle must
// weakly prefer the bundle it receives; otherwise the cycle is stale and
// InternalError is thrown.
PartialAllocation EliminateCycle(const Instance& instance,
                                 const PartialAllocation& allocation,
                                 const Cycle& cycle);

struct EliminationResult {
  PartialAllocation allocation;
  std::vector<Cycle> eliminated;  // in application order
  std::vector<int> usw_after;     // welfare after each elimination
};

// Eliminates envy cycles until the envy relation is acyclic. Each round
// raises welfare by at least 2, so more than m * n rounds is an InternalError.
EliminationResult EliminateAllEnvyCycles(const Instance& instance,
                                         PartialAllocation allocation);

// Cycle built from envy paths and maximal-envy edges for a pool item g that
// no source can take directly. agents[0] is the source s whose safe bundle
// is used and agents.back() is its maximal envious agent, so the closing
// edge agents.back() ⇢_g agents[0] is `closing`.
struct SourceCycle {
  Cycle agents;
  MaximalEnvyEdge closing;
  // Every maximal-envy edge on the cycle, `closing` included.
  std::vector<MaximalEnvyEdge> maximal_edges;
  // Envy graph of the allocation plus every maximal-envy edge the traversal
  // created, including those that ended up off the cycle.
  EnvyGraph graph{0};
};

// Starting from the smallest source s_1: compute the safe bundle of s_t and
// its maximal envious agent c_t, then step back to the smallest source
// s_{t+1} with an envy path to c_t, until a source repeats. The resulting
// closed walk is cut down to a simple cycle if paths overlap.
//
// Throws UsageError if g is not in the pool or some source can take g
// without strong envy; InternalError if the envy relation has a cycle or some
// c_t is unreachable from every source.
SourceCycle FindSourceCycle(const Instance& instance,
                            const PartialAllocation& allocation, int g);

}  // namespace efx

#endif  // EFX_ENVY_GRAPH_H_
