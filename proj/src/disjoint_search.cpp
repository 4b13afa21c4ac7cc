// Copyright 2026 The NPC Toolkit Authors
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

// Exact search for edge-disjoint paths between several node pairs. The
// general problem is NP-complete, so this is plain backtracking kept honest
// by a size guard.

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

#include "flow_network.hpp"
#include "npc/connectivity.hpp"
#include "npc/errors.hpp"

namespace npc {

namespace {

constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

void validate(const Graph& g, std::span<const PathRequest> pairs,
              const SearchLimits& limits) {
  if (pairs.empty()) throw std::invalid_argument("no source-receiver pairs given");
  for (const auto& p : pairs) {
    if (!g.has_node(p.source) || !g.has_node(p.target)) {
      throw std::invalid_argument("pair references an unknown node");
    }
    if (p.source == p.target) {
      throw std::invalid_argument("pair with identical source and receiver");
    }
  }
  if (pairs.size() > limits.max_pairs || g.edge_count() > limits.max_edges) {
    throw SearchLimitError(
        "instance too large for exact search (" + std::to_string(pairs.size()) +
        " pairs, " + std::to_string(g.edge_count()) + " edges; limits " +
        std::to_string(limits.max_pairs) + " / " +
        std::to_string(limits.max_edges) + ")");
  }
}

std::size_t bfs_distance(const Graph& g, NodeId s, NodeId t, const EdgeMask& used) {
  std::vector<std::size_t> dist(g.node_count(), kUnreachable);
  std::deque<NodeId> queue{s};
  dist[s] = 0;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    if (v == t) return dist[v];
    for (const auto& inc : g.incident(v)) {
      if (used[inc.edge] || dist[inc.other] != kUnreachable) continue;
      dist[inc.other] = dist[v] + 1;
      queue.push_back(inc.other);
    }
  }
  return kUnreachable;
}

// All pairs share one endpoint: one max-flow from the hub to a super node
// fed by each terminal with capacity equal to its multiplicity.
std::optional<DisjointPathSet> hub_flow(const Graph& g,
                                        std::span<const PathRequest> pairs,
                                        bool hub_is_target) {
  const NodeId hub = hub_is_target ? pairs[0].target : pairs[0].source;
  std::map<NodeId, int> multiplicity;
  for (const auto& p : pairs) ++multiplicity[hub_is_target ? p.source : p.target];

  detail::FlowNetwork net = detail::unit_network(g);
  const std::size_t sink = net.add_node();
  for (auto [terminal, m] : multiplicity) net.add_arc(terminal, sink, m, 0);
  const int need = static_cast<int>(pairs.size());
  if (net.max_flow(hub, sink, need) < need) return std::nullopt;

  std::map<NodeId, std::vector<Path>> by_terminal;
  for (const auto& arcs : net.decompose(hub, sink)) {
    Path p = detail::to_graph_path(net, arcs, hub);
    by_terminal[p.target].push_back(std::move(p));
  }
  DisjointPathSet out;
  for (const auto& req : pairs) {
    auto& bucket = by_terminal[hub_is_target ? req.source : req.target];
    Path p = std::move(bucket.front());
    bucket.erase(bucket.begin());
    if (hub_is_target) {
      std::reverse(p.edges.begin(), p.edges.end());
      std::swap(p.source, p.target);
    }
    out.paths.push_back(std::move(p));
  }
  return out;
}

class Backtracker {
 public:
  Backtracker(const Graph& g, std::span<const PathRequest> pairs)
      : g_(g),
        pairs_(pairs),
        used_(g.edge_id_bound(), false),
        on_path_(pairs.size(), std::vector<bool>(g.node_count(), false)) {
    chosen_.paths.resize(pairs.size());
  }

  // Total-length budget for iterative deepening; unset means unbounded.
  void set_budget(std::optional<std::size_t> budget) {
    budget_ = budget;
    next_budget_ = kUnreachable;
  }
  std::size_t next_budget() const { return next_budget_; }

  bool run(const PathSetVisitor& visit, const PartialFilter& viable) {
    visit_ = &visit;
    viable_ = &viable;
    length_ = 0;
    return assign(0);
  }

 private:
  // Admissible checks on the remaining pairs: each group of pairs with the
  // same endpoints needs that many edge-disjoint paths in the residual
  // graph, and the summed shortest distances must fit the budget.
  bool remaining_feasible(std::size_t from) {
    std::map<std::pair<NodeId, NodeId>, std::size_t> groups;
    std::size_t lower = 0;
    for (std::size_t i = from; i < pairs_.size(); ++i) {
      const auto [s, t] = pairs_[i];
      ++groups[{std::min(s, t), std::max(s, t)}];
      if (budget_) {
        const std::size_t d = bfs_distance(g_, s, t, used_);
        if (d == kUnreachable) return false;
        lower += d;
      }
    }
    if (budget_ && length_ + lower > *budget_) {
      next_budget_ = std::min(next_budget_, length_ + lower);
      return false;
    }
    for (const auto& [ends, count] : groups) {
      if (max_edge_disjoint_path_count(g_, ends.first, ends.second, count,
                                       &used_) < count) {
        return false;
      }
    }
    return true;
  }

  bool assign(std::size_t index) {
    if (index == pairs_.size()) return (*visit_)(chosen_, used_);
    if (*viable_ && !(*viable_)(used_)) return false;
    if (!remaining_feasible(index)) return false;
    Path& path = chosen_.paths[index];
    path.source = pairs_[index].source;
    path.target = pairs_[index].target;
    path.edges.clear();
    on_path_[index][path.source] = true;
    const bool stop = extend(index, path.source);
    on_path_[index][path.source] = false;
    return stop;
  }

  // Depth-first over simple paths, incident edges in ascending id order.
  bool extend(std::size_t index, NodeId at) {
    Path& path = chosen_.paths[index];
    if (at == path.target) return assign(index + 1);
    for (const auto& inc : g_.incident(at)) {
      if (used_[inc.edge] || on_path_[index][inc.other]) continue;
      if (budget_ && length_ + 1 > *budget_) {
        next_budget_ = std::min(next_budget_, length_ + 1);
        return false;
      }
      used_[inc.edge] = true;
      on_path_[index][inc.other] = true;
      path.edges.push_back(inc.edge);
      ++length_;
      const bool stop = extend(index, inc.other);
      --length_;
      path.edges.pop_back();
      on_path_[index][inc.other] = false;
      used_[inc.edge] = false;
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  std::span<const PathRequest> pairs_;
  EdgeMask used_;
  std::vector<std::vector<bool>> on_path_;  // per pair
  DisjointPathSet chosen_;
  std::size_t length_ = 0;
  std::optional<std::size_t> budget_;
  std::size_t next_budget_ = kUnreachable;
  const PathSetVisitor* visit_ = nullptr;
  const PartialFilter* viable_ = nullptr;
};

}  // namespace

std::optional<DisjointPathSet> find_disjoint_paths_multi(
    const Graph& g, std::span<const PathRequest> pairs,
    const SearchLimits& limits) {
  validate(g, pairs, limits);

  auto same = [&](auto field) {
    return std::all_of(pairs.begin(), pairs.end(), [&](const PathRequest& p) {
      return p.*field == pairs[0].*field;
    });
  };
  if (same(&PathRequest::source)) return hub_flow(g, pairs, false);
  if (same(&PathRequest::target)) return hub_flow(g, pairs, true);

  const EdgeMask none(g.edge_id_bound(), false);
  std::size_t budget = 0;
  for (const auto& p : pairs) {
    const std::size_t d = bfs_distance(g, p.source, p.target, none);
    if (d == kUnreachable) return std::nullopt;
    budget += d;
  }

  std::optional<DisjointPathSet> found;
  const PathSetVisitor keep_first = [&](const DisjointPathSet& set, const EdgeMask&) {
    found = set;
    return true;
  };
  Backtracker search(g, pairs);
  while (true) {
    search.set_budget(budget);
    if (search.run(keep_first, {})) return found;
    // Nothing was cut off by the budget: the search space is exhausted.
    if (search.next_budget() == kUnreachable) return std::nullopt;
    budget = search.next_budget();
  }
}

bool enumerate_disjoint_path_sets(const Graph& g,
                                  std::span<const PathRequest> pairs,
                                  const PathSetVisitor& visit,
                                  const PartialFilter& viable,
                                  const SearchLimits& limits) {
  validate(g, pairs, limits);
  Backtracker search(g, pairs);
  search.set_budget(std::nullopt);
  return search.run(visit, viable);
}

}  // namespace npc
