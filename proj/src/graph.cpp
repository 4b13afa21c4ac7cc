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

#include "npc/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace npc {

std::string_view to_string(Role role) {
  switch (role) {
    case Role::source:
      return "source";
    case Role::receiver:
      return "receiver";
    case Role::relay:
      return "relay";
  }
  return "relay";
}

Role parse_role(std::string_view text) {
  if (text == "source") return Role::source;
  if (text == "receiver") return Role::receiver;
  if (text == "relay") return Role::relay;
  throw std::invalid_argument("unknown node role '" + std::string(text) + "'");
}

void Graph::check_node(NodeId v) const {
  if (!has_node(v)) {
    throw std::invalid_argument("unknown node " + std::to_string(v));
  }
}

NodeId Graph::add_node(Role role, std::string label) {
  const NodeId id = nodes_.size();
  if (label.empty()) label = "v" + std::to_string(id);
  if (!node_by_label_.emplace(label, id).second) {
    throw std::invalid_argument("duplicate node id '" + label + "'");
  }
  nodes_.push_back({role, std::move(label)});
  incidence_.emplace_back();
  return id;
}

EdgeId Graph::add_edge(NodeId u, NodeId v, std::string label) {
  check_node(u);
  check_node(v);
  if (u == v) {
    throw std::invalid_argument("self-loop on node '" + nodes_[u].label + "'");
  }
  const EdgeId id = edges_.size();
  if (label.empty()) label = "e" + std::to_string(id);
  if (!edge_by_label_.emplace(label, id).second) {
    throw std::invalid_argument("duplicate edge id '" + label + "'");
  }
  edges_.push_back({u, v, std::move(label)});
  alive_.push_back(true);
  incidence_[u].push_back({id, v});
  incidence_[v].push_back({id, u});
  ++live_edges_;
  return id;
}

void Graph::remove_edge(EdgeId id) {
  if (!has_edge(id)) {
    throw std::invalid_argument("unknown edge " + std::to_string(id));
  }
  alive_[id] = false;
  --live_edges_;
  edge_by_label_.erase(edges_[id].label);
  for (NodeId end : {edges_[id].u, edges_[id].v}) {
    auto& list = incidence_[end];
    list.erase(std::remove_if(list.begin(), list.end(),
                              [id](const Incidence& i) { return i.edge == id; }),
               list.end());
  }
}

const Edge& Graph::edge(EdgeId e) const {
  if (!has_edge(e)) {
    throw std::invalid_argument("unknown edge " + std::to_string(e));
  }
  return edges_[e];
}

NodeId Graph::other_end(EdgeId e, NodeId v) const {
  const Edge& ed = edge(e);
  if (ed.u == v) return ed.v;
  if (ed.v == v) return ed.u;
  throw std::invalid_argument("edge " + ed.label + " is not incident to " +
                              label(v));
}

std::vector<EdgeId> Graph::edge_ids() const {
  std::vector<EdgeId> out;
  out.reserve(live_edges_);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (alive_[e]) out.push_back(e);
  }
  return out;
}

std::span<const Incidence> Graph::incident(NodeId v) const {
  check_node(v);
  return incidence_[v];
}

std::vector<NodeId> Graph::neighbors(NodeId v) const {
  std::vector<NodeId> out;
  for (const auto& inc : incident(v)) out.push_back(inc.other);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t Graph::degree(NodeId v) const { return incident(v).size(); }

bool Graph::adjacent(NodeId u, NodeId v) const {
  const auto inc = incident(u);
  return std::any_of(inc.begin(), inc.end(),
                     [v](const Incidence& i) { return i.other == v; });
}

Role Graph::role(NodeId v) const {
  check_node(v);
  return nodes_[v].role;
}

void Graph::set_role(NodeId v, Role role) {
  check_node(v);
  nodes_[v].role = role;
}

std::vector<NodeId> Graph::nodes_with_role(Role role) const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < nodes_.size(); ++v) {
    if (nodes_[v].role == role) out.push_back(v);
  }
  return out;
}

const std::string& Graph::label(NodeId v) const {
  check_node(v);
  return nodes_[v].label;
}

std::optional<NodeId> Graph::find_node(std::string_view label) const {
  auto it = node_by_label_.find(std::string(label));
  if (it == node_by_label_.end()) return std::nullopt;
  return it->second;
}

std::optional<EdgeId> Graph::find_edge(std::string_view label) const {
  auto it = edge_by_label_.find(std::string(label));
  if (it == edge_by_label_.end()) return std::nullopt;
  return it->second;
}

std::vector<NodeId> path_nodes(const Graph& g, const Path& p) {
  std::vector<NodeId> out{p.source};
  NodeId at = p.source;
  for (EdgeId e : p.edges) {
    at = g.other_end(e, at);
    out.push_back(at);
  }
  if (at != p.target) {
    throw std::invalid_argument("path does not end at its target");
  }
  return out;
}

bool is_simple_path(const Graph& g, const Path& p) {
  if (p.source == p.target || p.edges.empty()) return false;
  if (!g.has_node(p.source) || !g.has_node(p.target)) return false;
  std::unordered_set<NodeId> seen{p.source};
  std::unordered_set<EdgeId> used;
  NodeId at = p.source;
  for (EdgeId e : p.edges) {
    if (!g.has_edge(e) || !used.insert(e).second) return false;
    const Edge& ed = g.edge(e);
    if (ed.u != at && ed.v != at) return false;
    at = ed.u == at ? ed.v : ed.u;
    if (!seen.insert(at).second) return false;
  }
  return at == p.target;
}

std::vector<EdgeId> DisjointPathSet::edges() const {
  std::vector<EdgeId> out;
  for (const auto& p : paths) out.insert(out.end(), p.edges.begin(), p.edges.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool pairwise_edge_disjoint(const DisjointPathSet& set) {
  std::unordered_set<EdgeId> used;
  for (const auto& p : set.paths) {
    for (EdgeId e : p.edges) {
      if (!used.insert(e).second) return false;
    }
  }
  return true;
}

}  // namespace npc
