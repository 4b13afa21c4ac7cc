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
#include <limits>
#include <vector>

#include "npc/graph.hpp"

namespace npc::detail {

/// Integer-capacity flow network with paired arcs (arc a and a ^ 1 are
/// mutual reverses). Max-flow is shortest augmenting path (Edmonds-Karp);
/// with unit capacities that is the O(E^1.5)-ish regime the desk-scale
/// graphs here need.
class FlowNetwork {
 public:
  static constexpr int kInfinite = std::numeric_limits<int>::max() / 4;
  static constexpr EdgeId kNoEdge = std::numeric_limits<EdgeId>::max();

  explicit FlowNetwork(std::size_t nodes) : adjacency_(nodes) {}

  std::size_t node_count() const { return adjacency_.size(); }
  std::size_t add_node();

  /// Adds the pair (u->v, cap_forward), (v->u, cap_backward) and returns the
  /// forward arc. An undirected unit edge is add_arc(u, v, 1, 1).
  std::size_t add_arc(std::size_t u, std::size_t v, int cap_forward,
                      int cap_backward, EdgeId tag = kNoEdge);

  /// Augments until no s-t path remains or `limit` units flow. Returns the
  /// total flow pushed by this call.
  int max_flow(std::size_t s, std::size_t t, int limit = kInfinite);

  /// Net flow on arc a.
  int flow(std::size_t arc) const { return flow_[arc]; }
  std::size_t head(std::size_t arc) const { return head_[arc]; }
  std::size_t tail(std::size_t arc) const { return head_[arc ^ 1]; }
  EdgeId tag(std::size_t arc) const { return tag_[arc]; }
  std::size_t arc_count() const { return head_.size(); }
  const std::vector<std::size_t>& arcs_from(std::size_t v) const {
    return adjacency_[v];
  }

  /// Nodes reachable from s through arcs with residual capacity.
  std::vector<bool> residual_reachable(std::size_t s) const;

  /// Splits the current flow into s-t paths, each returned as its arc
  /// sequence. Arcs leaving a node are taken in insertion order, so for a
  /// network built in edge-id order ties break by lowest edge id. Flow
  /// cycles met along the way are discarded.
  std::vector<std::vector<std::size_t>> decompose(std::size_t s,
                                                  std::size_t t) const;

 private:
  int residual(std::size_t arc) const { return cap_[arc] - flow_[arc]; }

  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::size_t> head_;
  std::vector<int> cap_;
  std::vector<int> flow_;
  std::vector<EdgeId> tag_;
};

/// Unit network over the live edges of g (node ids preserved), skipping
/// edges whose `blocked` entry is true. Arc tags are the graph edge ids.
FlowNetwork unit_network(const Graph& g, const std::vector<bool>* blocked = nullptr);

/// Turns an arc path from decompose() into a graph Path, dropping untagged
/// (auxiliary) arcs.
Path to_graph_path(const FlowNetwork& net, const std::vector<std::size_t>& arcs,
                   NodeId source);

}  // namespace npc::detail
