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

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace npc {

using NodeId = std::size_t;
using EdgeId = std::size_t;

enum class Role { source, receiver, relay };

std::string_view to_string(Role role);
/// Throws std::invalid_argument for anything but source/receiver/relay.
Role parse_role(std::string_view text);

struct Edge {
  NodeId u;
  NodeId v;
  std::string label;
};

/// One entry of a node's incidence list.
struct Incidence {
  EdgeId edge;
  NodeId other;
};

/// Undirected multigraph with labelled nodes and edges.
///
/// Node and edge ids are dense indices assigned in insertion order. Removing
/// an edge retires its id; ids are never reused. Self-loops are rejected,
/// parallel edges are allowed. Labels are unique per kind and default to
/// "v<id>" / "e<id>".
class Graph {
 public:
  NodeId add_node(Role role = Role::relay, std::string label = {});
  EdgeId add_edge(NodeId u, NodeId v, std::string label = {});
  void remove_edge(EdgeId id);

  std::size_t node_count() const { return nodes_.size(); }
  /// Live edges only.
  std::size_t edge_count() const { return live_edges_; }
  /// One past the largest edge id ever issued.
  std::size_t edge_id_bound() const { return edges_.size(); }

  bool has_node(NodeId v) const { return v < nodes_.size(); }
  bool has_edge(EdgeId e) const { return e < edges_.size() && alive_[e]; }

  const Edge& edge(EdgeId e) const;
  NodeId other_end(EdgeId e, NodeId v) const;
  /// Live edge ids in ascending order.
  std::vector<EdgeId> edge_ids() const;

  /// Incident live edges of v, ascending by edge id.
  std::span<const Incidence> incident(NodeId v) const;
  /// Distinct neighbours, ascending.
  std::vector<NodeId> neighbors(NodeId v) const;
  /// Counts parallel edges separately.
  std::size_t degree(NodeId v) const;
  bool adjacent(NodeId u, NodeId v) const;

  Role role(NodeId v) const;
  void set_role(NodeId v, Role role);
  std::vector<NodeId> nodes_with_role(Role role) const;

  const std::string& label(NodeId v) const;
  std::optional<NodeId> find_node(std::string_view label) const;
  std::optional<EdgeId> find_edge(std::string_view label) const;

 private:
  struct NodeData {
    Role role;
    std::string label;
  };

  void check_node(NodeId v) const;

  std::vector<NodeData> nodes_;
  std::vector<Edge> edges_;
  std::vector<bool> alive_;
  std::vector<std::vector<Incidence>> incidence_;
  std::unordered_map<std::string, NodeId> node_by_label_;
  std::unordered_map<std::string, EdgeId> edge_by_label_;
  std::size_t live_edges_ = 0;
};

/// Simple path given as an edge sequence from `source` to `target`.
struct Path {
  NodeId source = 0;
  NodeId target = 0;
  std::vector<EdgeId> edges;

  friend bool operator==(const Path&, const Path&) = default;
};

/// Node sequence of p (source first). Throws std::invalid_argument if the
/// edges do not chain from source to target.
std::vector<NodeId> path_nodes(const Graph& g, const Path& p);

/// True iff p is a well-formed walk with no repeated node or edge over live
/// edges of g, and source != target.
bool is_simple_path(const Graph& g, const Path& p);

/// k working paths; path i runs from the i-th source to the i-th receiver.
struct DisjointPathSet {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  bool empty() const { return paths.empty(); }
  /// Union of all path edges (ascending).
  std::vector<EdgeId> edges() const;

  friend bool operator==(const DisjointPathSet&, const DisjointPathSet&) = default;
};

bool pairwise_edge_disjoint(const DisjointPathSet& set);

}  // namespace npc
