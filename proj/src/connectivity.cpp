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

#include "npc/connectivity.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "flow_network.hpp"

namespace npc {

using detail::FlowNetwork;

namespace {

void check_pair(const Graph& g, NodeId s, NodeId r) {
  if (!g.has_node(s) || !g.has_node(r)) {
    throw std::invalid_argument("unknown node in s-r pair");
  }
  if (s == r) throw std::invalid_argument("source and target coincide");
}

bool blocked_edge(const EdgeMask* blocked, EdgeId e) {
  return blocked && e < blocked->size() && (*blocked)[e];
}

// Component labels over live, unblocked edges.
std::vector<std::size_t> components(const Graph& g, const EdgeMask* blocked) {
  constexpr auto kUnset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(g.node_count(), kUnset);
  std::size_t next = 0;
  std::vector<NodeId> stack;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (comp[root] != kUnset) continue;
    comp[root] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const NodeId v = stack.back();
      stack.pop_back();
      for (const auto& inc : g.incident(v)) {
        if (blocked_edge(blocked, inc.edge) || comp[inc.other] != kUnset) continue;
        comp[inc.other] = next;
        stack.push_back(inc.other);
      }
    }
    ++next;
  }
  return comp;
}

// Node-split network: v_in = 2v, v_out = 2v + 1. Internal nodes carry unit
// capacity; s and r are uncapacitated. Edges listed in `skip` are left out.
FlowNetwork split_network(const Graph& g, NodeId s, NodeId r,
                          const EdgeMask* skip) {
  FlowNetwork net(2 * g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    const int cap = (v == s || v == r) ? FlowNetwork::kInfinite : 1;
    net.add_arc(2 * v, 2 * v + 1, cap, 0);
  }
  for (EdgeId e : g.edge_ids()) {
    if (blocked_edge(skip, e)) continue;
    const Edge& ed = g.edge(e);
    net.add_arc(2 * ed.u + 1, 2 * ed.v, FlowNetwork::kInfinite, 0, e);
    net.add_arc(2 * ed.v + 1, 2 * ed.u, FlowNetwork::kInfinite, 0, e);
  }
  return net;
}

}  // namespace

DisjointPathSet max_edge_disjoint_paths(const Graph& g, NodeId s, NodeId r) {
  check_pair(g, s, r);
  FlowNetwork net = detail::unit_network(g);
  net.max_flow(s, r);
  DisjointPathSet out;
  for (const auto& arcs : net.decompose(s, r)) {
    out.paths.push_back(detail::to_graph_path(net, arcs, s));
  }
  return out;
}

std::size_t max_edge_disjoint_path_count(const Graph& g, NodeId s, NodeId r,
                                         std::size_t limit,
                                         const EdgeMask* blocked) {
  check_pair(g, s, r);
  FlowNetwork net = detail::unit_network(g, blocked);
  const int cap = static_cast<int>(
      std::min<std::size_t>(limit, static_cast<std::size_t>(FlowNetwork::kInfinite)));
  return static_cast<std::size_t>(net.max_flow(s, r, cap));
}

CutReport min_edge_cut(const Graph& g, NodeId s, NodeId r) {
  check_pair(g, s, r);
  FlowNetwork net = detail::unit_network(g);
  CutReport out;
  out.value = static_cast<std::size_t>(net.max_flow(s, r));
  const auto reach = net.residual_reachable(s);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (reach[v]) out.side.push_back(v);
  }
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    if (reach[ed.u] != reach[ed.v]) out.edges.push_back(e);
  }
  return out;
}

std::size_t max_node_disjoint_path_count(const Graph& g, NodeId s, NodeId r) {
  check_pair(g, s, r);
  EdgeMask direct(g.edge_id_bound(), false);
  bool adjacent = false;
  for (const auto& inc : g.incident(s)) {
    if (inc.other == r) {
      direct[inc.edge] = true;
      adjacent = true;
    }
  }
  FlowNetwork net = split_network(g, s, r, &direct);
  const auto flow = static_cast<std::size_t>(net.max_flow(2 * s + 1, 2 * r));
  return flow + (adjacent ? 1 : 0);
}

CutReport edge_connectivity(const Graph& g) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("edge connectivity needs at least two nodes");
  }
  const auto comp = components(g, nullptr);
  if (std::any_of(comp.begin(), comp.end(), [](std::size_t c) { return c != 0; })) {
    CutReport out;
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (comp[v] == 0) out.side.push_back(v);
    }
    return out;
  }
  // Every global cut separates node 0 from some other node.
  std::optional<CutReport> best;
  for (NodeId v = 1; v < g.node_count(); ++v) {
    CutReport cut = min_edge_cut(g, 0, v);
    if (!best || cut.value < best->value) best = std::move(cut);
  }
  return *best;
}

CutReport node_connectivity(const Graph& g) {
  const std::size_t n = g.node_count();
  CutReport out;
  if (n <= 1 || !is_connected(g)) return out;

  std::optional<std::pair<NodeId, NodeId>> best_pair;
  std::size_t best = n - 1;
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId r = s + 1; r < n; ++r) {
      if (g.adjacent(s, r)) continue;
      FlowNetwork net = split_network(g, s, r, nullptr);
      const auto value = static_cast<std::size_t>(
          net.max_flow(2 * s + 1, 2 * r, static_cast<int>(best) + 1));
      if (!best_pair || value < best) {
        best = value;
        best_pair = {s, r};
      }
    }
  }

  out.value = best;
  if (!best_pair) {
    // Complete graph: removing all but one node is the only way to trivialize it.
    for (NodeId v = 0; v + 1 < n; ++v) out.nodes.push_back(v);
    return out;
  }
  auto [s, r] = *best_pair;
  FlowNetwork net = split_network(g, s, r, nullptr);
  net.max_flow(2 * s + 1, 2 * r);
  const auto reach = net.residual_reachable(2 * s + 1);
  for (NodeId v = 0; v < n; ++v) {
    if (reach[2 * v] && !reach[2 * v + 1]) out.nodes.push_back(v);
  }
  return out;
}

bool is_k_edge_connected(const Graph& g, std::size_t k) {
  if (k == 0) return true;
  if (g.node_count() < 2) return false;
  if (min_degree(g) < k) return false;
  for (NodeId v = 1; v < g.node_count(); ++v) {
    if (max_edge_disjoint_path_count(g, 0, v, k) < k) return false;
  }
  return true;
}

std::size_t min_degree(const Graph& g) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (NodeId v = 0; v < g.node_count(); ++v) best = std::min(best, g.degree(v));
  return g.node_count() == 0 ? 0 : best;
}

bool is_connected(const Graph& g, const EdgeMask* blocked) {
  const auto comp = components(g, blocked);
  return std::all_of(comp.begin(), comp.end(), [](std::size_t c) { return c == 0; });
}

bool terminals_connected(const Graph& g, std::span<const NodeId> terminals,
                         const EdgeMask* blocked) {
  if (terminals.size() <= 1) return true;
  const auto comp = components(g, blocked);
  return std::all_of(terminals.begin(), terminals.end(),
                     [&](NodeId v) { return comp[v] == comp[terminals[0]]; });
}

std::optional<std::vector<EdgeId>> steiner_tree(
    const Graph& g, std::span<const NodeId> terminals, const EdgeMask* blocked) {
  std::vector<EdgeId> tree;
  if (terminals.size() <= 1) return tree;

  constexpr auto kNone = std::numeric_limits<EdgeId>::max();
  const NodeId root = terminals[0];
  std::vector<EdgeId> parent_edge(g.node_count(), kNone);
  std::vector<bool> seen(g.node_count(), false);
  std::deque<NodeId> queue{root};
  seen[root] = true;
  while (!queue.empty()) {
    const NodeId v = queue.front();
    queue.pop_front();
    for (const auto& inc : g.incident(v)) {
      if (blocked_edge(blocked, inc.edge) || seen[inc.other]) continue;
      seen[inc.other] = true;
      parent_edge[inc.other] = inc.edge;
      queue.push_back(inc.other);
    }
  }
  // Union of root paths to each terminal: a tree whose leaves are terminals.
  std::vector<bool> in_tree(g.node_count(), false);
  in_tree[root] = true;
  for (NodeId t : terminals) {
    if (!seen[t]) return std::nullopt;
    for (NodeId v = t; !in_tree[v]; v = g.other_end(parent_edge[v], v)) {
      in_tree[v] = true;
      tree.push_back(parent_edge[v]);
    }
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace npc
