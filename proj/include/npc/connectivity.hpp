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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "npc/graph.hpp"

namespace npc {

/// Indexed by EdgeId; true marks an edge as used/blocked.
using EdgeMask = std::vector<bool>;

/// Result of a cut computation. Edge cuts fill `edges` and `side` (the nodes
/// on the source side); node cuts fill `nodes`.
struct CutReport {
  std::size_t value = 0;
  std::vector<EdgeId> edges;
  std::vector<NodeId> nodes;
  std::vector<NodeId> side;
};

/// Maximum set of pairwise edge-disjoint s-r paths (unit max-flow followed by
/// flow decomposition, ties broken by lowest edge id). Its size equals the
/// minimum s-r edge cut. Throws std::invalid_argument if s == r.
DisjointPathSet max_edge_disjoint_paths(const Graph& g, NodeId s, NodeId r);

/// Count only, stopping early once `limit` paths are found.
std::size_t max_edge_disjoint_path_count(const Graph& g, NodeId s, NodeId r,
                                         std::size_t limit = SIZE_MAX,
                                         const EdgeMask* blocked = nullptr);

/// Minimum s-r edge cut with its witness.
CutReport min_edge_cut(const Graph& g, NodeId s, NodeId r);

/// Maximum number of internally node-disjoint s-r paths. The direct s-r
/// connection counts once however many parallel edges realize it.
std::size_t max_node_disjoint_path_count(const Graph& g, NodeId s, NodeId r);

/// Edge connectivity with a realizing cut. A disconnected graph reports 0
/// with no cut edges and `side` set to the component of node 0. Throws
/// std::invalid_argument for graphs with fewer than two nodes.
CutReport edge_connectivity(const Graph& g);

/// Node connectivity: the fewest node removals that disconnect g or leave a
/// single node, so complete graphs report n - 1. Disconnected graphs report
/// 0.
CutReport node_connectivity(const Graph& g);

/// kappa_e(g) >= k. Graphs with fewer than two nodes are not k-connected for
/// any k >= 1.
bool is_k_edge_connected(const Graph& g, std::size_t k);

std::size_t min_degree(const Graph& g);

bool is_connected(const Graph& g, const EdgeMask* blocked = nullptr);

/// True iff all `terminals` lie in one component of g minus `blocked` edges.
bool terminals_connected(const Graph& g, std::span<const NodeId> terminals,
                         const EdgeMask* blocked = nullptr);

/// Edges of a tree spanning `terminals` in g minus `blocked` (a BFS tree with
/// non-terminal leaves pruned), or nullopt if they are not connected.
std::optional<std::vector<EdgeId>> steiner_tree(
    const Graph& g, std::span<const NodeId> terminals,
    const EdgeMask* blocked = nullptr);

struct PathRequest {
  NodeId source;
  NodeId target;
};

/// Tractability guard for the exact multi-pair search.
struct SearchLimits {
  std::size_t max_pairs = 12;
  std::size_t max_edges = 200;
};

/// Exact search for pairwise edge-disjoint paths, path i joining
/// pairs[i].source to pairs[i].target.
///
/// When every pair shares its source (or every pair shares its target) the
/// answer comes from a single max-flow. Otherwise an iterative-deepening
/// backtracking search on total path length runs, pruned by per-pair
/// residual max-flow bounds; a nullopt result is a proof of exhaustion.
///
/// Throws SearchLimitError when the guard is exceeded and
/// std::invalid_argument for empty input or a pair with source == target.
std::optional<DisjointPathSet> find_disjoint_paths_multi(
    const Graph& g, std::span<const PathRequest> pairs,
    const SearchLimits& limits = {});

/// Called with each complete path assignment and the mask of edges it uses.
/// Return true to stop the enumeration.
using PathSetVisitor =
    std::function<bool(const DisjointPathSet& paths, const EdgeMask& used)>;

/// Called on partial assignments; returning false prunes the subtree.
using PartialFilter = std::function<bool(const EdgeMask& used)>;

/// Enumerates every assignment of simple, pairwise edge-disjoint paths to
/// `pairs` (paths per pair in lexicographic edge-id order). Returns true if
/// the visitor stopped it early. Same guard as find_disjoint_paths_multi.
bool enumerate_disjoint_path_sets(const Graph& g,
                                  std::span<const PathRequest> pairs,
                                  const PathSetVisitor& visit,
                                  const PartialFilter& viable = {},
                                  const SearchLimits& limits = {});

}  // namespace npc
