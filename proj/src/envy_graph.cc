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

#include "efx/envy_graph.h"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "efx/errors.h"

namespace efx {

EnvyGraph::EnvyGraph(int num_agents)
    : n_(num_agents),
      kind_(static_cast<size_t>(num_agents) * num_agents, kNone),
      envy_out_(num_agents) {}

void EnvyGraph::AddEdge(int i, int j, bool envy) {
  kind_[i * n_ + j] = envy ? kEnvy : kPreEnvy;
  if (envy) {
    auto& out = envy_out_[i];
    out.insert(std::lower_bound(out.begin(), out.end(), j), j);
  }
}

std::vector<std::pair<int, int>> EnvyGraph::EnvyEdges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j : envy_out_[i]) edges.emplace_back(i, j);
  }
  return edges;
}

std::vector<std::pair<int, int>> EnvyGraph::PreEnvyEdges() const {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (HasPreEnvy(i, j)) edges.emplace_back(i, j);
    }
  }
  return edges;
}

std::string EnvyGraph::Dump() const {
  std::ostringstream out;
  for (const auto& [i, j] : EnvyEdges()) out << "E " << i << " " << j << "\n";
  for (const auto& [i, j] : PreEnvyEdges()) {
    out << "E' " << i << " " << j << "\n";
  }
  for (const MaximalEnvyEdge& e : maximal_edges_) {
    out << "Eg " << e.from << " " << e.to << "\n";
  }
  return out.str();
}

EnvyGraph BuildGraph(const Instance& instance,
                     const PartialAllocation& allocation) {
  const int n = instance.num_agents();
  EnvyGraph graph(n);
  for (int i = 0; i < n; ++i) {
    const Valuation& v = instance.valuation(i);
    const int own = v.Value(allocation.bundles[i]);
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int other = v.Value(allocation.bundles[j]);
      if (other > own) {
        graph.AddEdge(i, j, /*envy=*/true);
      } else if (other == own) {
        graph.AddEdge(i, j, /*envy=*/false);
      }
    }
  }
  return graph;
}

std::vector<int> Sources(const EnvyGraph& graph) {
  std::vector<int> in_degree(graph.num_agents(), 0);
  for (int i = 0; i < graph.num_agents(); ++i) {
    for (int j : graph.EnvyOut(i)) ++in_degree[j];
  }
  std::vector<int> sources;
  for (int i = 0; i < graph.num_agents(); ++i) {
    if (in_degree[i] == 0) sources.push_back(i);
  }
  return sources;
}

namespace {

enum class Color { kWhite, kGray, kBlack };

bool Dfs(const EnvyGraph& graph, int u, std::vector<Color>& color,
         std::vector<int>& stack, Cycle& cycle) {
  color[u] = Color::kGray;
  stack.push_back(u);
  for (int w : graph.EnvyOut(u)) {
    if (color[w] == Color::kGray) {
      auto start = std::find(stack.begin(), stack.end(), w);
      cycle.assign(start, stack.end());
      return true;
    }
    if (color[w] == Color::kWhite && Dfs(graph, w, color, stack, cycle)) {
      return true;
    }
  }
  stack.pop_back();
  color[u] = Color::kBlack;
  return false;
}

// Shortest envy path from `from` to `to`, both ends included.
std::vector<int> EnvyPath(const EnvyGraph& graph, int from, int to) {
  std::vector<int> parent(graph.num_agents(), -1);
  parent[from] = from;
  std::deque<int> queue = {from};
  while (!queue.empty() && parent[to] < 0) {
    const int u = queue.front();
    queue.pop_front();
    for (int w : graph.EnvyOut(u)) {
      if (parent[w] < 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] < 0) {
    throw InternalError("no envy path from " + std::to_string(from) + " to " +
                        std::to_string(to));
  }
  std::vector<int> path = {to};
  while (path.back() != from) path.push_back(parent[path.back()]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Smallest source with an envy path to `target` (target itself if it is a
// source).
int SourceReaching(const EnvyGraph& graph, const std::vector<bool>& is_source,
                   int target) {
  const int n = graph.num_agents();
  std::vector<std::vector<int>> envy_in(n);
  for (int i = 0; i < n; ++i) {
    for (int j : graph.EnvyOut(i)) envy_in[j].push_back(i);
  }
  std::vector<bool> seen(n, false);
  seen[target] = true;
  std::deque<int> queue = {target};
  int best = -1;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop_front();
    if (is_source[u] && (best < 0 || u < best)) best = u;
    for (int w : envy_in[u]) {
      if (!seen[w]) {
        seen[w] = true;
        queue.push_back(w);
      }
    }
  }
  if (best < 0) {
    throw InternalError("agent " + std::to_string(target) +
                        " is not reachable from any source");
  }
  return best;
}

}  // namespace

std::optional<Cycle> FindEnvyCycle(const EnvyGraph& graph) {
  std::vector<Color> color(graph.num_agents(), Color::kWhite);
  std::vector<int> stack;
  Cycle cycle;
  for (int u = 0; u < graph.num_agents(); ++u) {
    if (color[u] == Color::kWhite && Dfs(graph, u, color, stack, cycle)) {
      return cycle;
    }
  }
  return std::nullopt;
}

PartialAllocation EliminateCycle(const Instance& instance,
                                 const PartialAllocation& allocation,
                                 const Cycle& cycle) {
  const int k = static_cast<int>(cycle.size());
  if (k == 0) throw InternalError("empty cycle");
  std::vector<bool> on_cycle(instance.num_agents(), false);
  for (int u : cycle) {
    instance.CheckAgent(u);
    if (on_cycle[u]) throw InternalError("cycle repeats agent " + std::to_string(u));
    on_cycle[u] = true;
  }
  for (int t = 0; t < k; ++t) {
    const int u = cycle[t];
    const int w = cycle[(t + 1) % k];
    const Valuation& v = instance.valuation(u);
    if (v.Value(allocation.bundles[w]) < v.Value(allocation.bundles[u])) {
      throw InternalError("stale cycle: agent " + std::to_string(u) +
                          " prefers its bundle to that of " + std::to_string(w));
    }
  }
  PartialAllocation out = allocation;
  for (int t = 0; t < k; ++t) {
    out.bundles[cycle[t]] = allocation.bundles[cycle[(t + 1) % k]];
  }
  return out;
}

EliminationResult EliminateAllEnvyCycles(const Instance& instance,
                                         PartialAllocation allocation) {
  const long long limit =
      static_cast<long long>(instance.num_items()) * instance.num_agents();
  EliminationResult result;
  while (auto cycle = FindEnvyCycle(BuildGraph(instance, allocation))) {
    if (static_cast<long long>(result.eliminated.size()) >= limit) {
      throw InternalError("cycle elimination exceeded m * n rounds");
    }
    allocation = EliminateCycle(instance, allocation, *cycle);
    result.eliminated.push_back(std::move(*cycle));
    result.usw_after.push_back(Usw(instance, allocation));
  }
  result.allocation = std::move(allocation);
  return result;
}

SourceCycle FindSourceCycle(const Instance& instance,
                            const PartialAllocation& allocation, int g) {
  instance.CheckItem(g);
  if (!allocation.pool.contains(g)) {
    throw UsageError("item " + std::to_string(g) + " is not in the pool");
  }
  EnvyGraph graph = BuildGraph(instance, allocation);
  if (FindEnvyCycle(graph)) {
    throw InternalError("envy relation has a cycle");
  }
  const std::vector<int> sources = Sources(graph);
  std::vector<bool> is_source(instance.num_agents(), false);
  for (int s : sources) {
    is_source[s] = true;
    if (!StrongEnvierOfAugmented(instance, allocation, s, g)) {
      throw UsageError("source " + std::to_string(s) + " can take item " +
                       std::to_string(g) + " without strong envy");
    }
  }

  // Backward traversal. Step t visits source s_t, creates c_t ⇢ s_t and walks
  // back to the source s_{t+1} that reaches c_t along `paths[t]`.
  std::map<int, int> step_of_source;
  std::vector<MaximalEnvyEdge> edges;
  std::vector<std::vector<int>> paths;
  int s = sources.front();
  while (!step_of_source.contains(s)) {
    step_of_source[s] = static_cast<int>(edges.size());
    SafeBundleResult safe = ComputeSafeBundle(instance, allocation, s, g);
    const int c = safe.agent;
    const Valuation& vc = instance.valuation(c);
    if (vc.Value(allocation.bundles[c]) != vc.Value(allocation.bundles[s])) {
      throw InternalError("maximal envious agent " + std::to_string(c) +
                          " does not pre-envy source " + std::to_string(s));
    }
    edges.push_back(MaximalEnvyEdge{c, s, std::move(safe)});
    graph.AddMaximalEdge(edges.back());
    const int next = SourceReaching(graph, is_source, c);
    paths.push_back(EnvyPath(graph, next, c));
    s = next;
  }

  // Forward closed walk: paths[t], paths[t-1], ..., paths[r]; the edge leaving
  // the end of paths[u] is the maximal edge into s_u.
  const int first = step_of_source[s];
  std::vector<int> walk;
  std::vector<int> maximal_at;  // index into edges, or -1 for an envy edge
  for (int t = static_cast<int>(paths.size()) - 1; t >= first; --t) {
    for (size_t p = 0; p < paths[t].size(); ++p) {
      walk.push_back(paths[t][p]);
      maximal_at.push_back(p + 1 == paths[t].size() ? t : -1);
    }
  }

  // Overlapping paths: keep the first simple sub-cycle. Envy edges alone are
  // acyclic, so it still carries a maximal edge.
  int begin = 0;
  int end = static_cast<int>(walk.size());
  std::vector<int> position(instance.num_agents(), -1);
  for (int p = 0; p < static_cast<int>(walk.size()); ++p) {
    if (position[walk[p]] >= 0) {
      begin = position[walk[p]];
      end = p;
      break;
    }
    position[walk[p]] = p;
  }

  // Close at the last maximal edge of the sub-cycle.
  int close = -1;
  for (int p = begin; p < end; ++p) {
    if (maximal_at[p] >= 0) close = p;
  }
  if (close < 0) throw InternalError("source cycle has no maximal-envy edge");

  SourceCycle result;
  const int len = end - begin;
  for (int q = 1; q <= len; ++q) {
    const int p = begin + (close - begin + q) % len;
    result.agents.push_back(walk[p]);
    if (maximal_at[p] >= 0 && p != close) {
      result.maximal_edges.push_back(edges[maximal_at[p]]);
    }
  }
  result.closing = edges[maximal_at[close]];
  result.maximal_edges.push_back(result.closing);
  result.graph = std::move(graph);
  return result;
}

}  // namespace efx
