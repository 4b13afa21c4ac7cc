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
#include <string>
#include <string_view>
#include <vector>

#include "npc/connectivity.hpp"
#include "npc/graph.hpp"
#include "npc/hamiltonian.hpp"

namespace npc {

/// Where a protection code is to be deployed: a graph, the ordered sources
/// and receivers, and the number of working paths k.
///
/// Accepted shapes:
///   |S| = |R| = k       path i joins sources[i] and receivers[i]
///   |S| = 1, |R| = k    one sender feeding k receivers
///   |R| = 1, |S| = k    k senders feeding one receiver
///   |S| = |R| = 1       k parallel working paths between one pair
struct ProtectionInstance {
  Graph graph;
  std::vector<NodeId> sources;
  std::vector<NodeId> receivers;
  std::size_t k = 0;

  /// The k source/receiver pairs in path order.
  std::vector<PathRequest> pairs() const;
};

/// Validates and assembles an instance. When k is omitted it is
/// max(|S|, |R|). Throws std::invalid_argument for unknown or repeated nodes,
/// a node that is both source and receiver, or an unsupported shape.
ProtectionInstance make_instance(Graph graph, std::vector<NodeId> sources,
                                 std::vector<NodeId> receivers,
                                 std::optional<std::size_t> k = std::nullopt);

/// Instance with sources/receivers taken from the graph's node roles.
ProtectionInstance instance_from_roles(Graph graph,
                                       std::optional<std::size_t> k = std::nullopt);

void validate(const ProtectionInstance& inst);

enum class TreeMode {
  /// Working paths, source tree and receiver tree are pairwise edge-disjoint.
  strict,
  /// Each condition is checked on the whole graph independently; trees may
  /// reuse path edges (and each other's).
  relaxed,
};

enum class Pairing {
  /// Take the instance's pairing as given.
  fixed,
  /// Try every assignment of receivers to sources (k <= 6) until one works.
  all,
};

enum class FailureReason { paths, source_tree, receiver_tree };

std::string_view to_string(TreeMode mode);
std::string_view to_string(FailureReason reason);

struct FeasibilityOptions {
  TreeMode mode = TreeMode::strict;
  Pairing pairing = Pairing::fixed;
  SearchLimits limits;
};

/// For one-sender instances: whether the graph is k-edge-connected and
/// Hamiltonian, which together guarantee feasibility.
struct SufficientConditions {
  std::size_t edge_connectivity = 0;
  bool k_edge_connected = false;
  Tristate hamiltonian = Tristate::unknown;

  Tristate holds() const;
};

struct FeasibilityReport {
  bool feasible = false;
  TreeMode mode = TreeMode::strict;
  /// Pairing the verdict refers to (path i joins pairs[i]).
  std::vector<PathRequest> pairs;
  /// Witnesses, filled when feasible. Trees are edge-id sets.
  DisjointPathSet paths;
  std::vector<EdgeId> source_tree;
  std::vector<EdgeId> receiver_tree;
  /// Set when infeasible: the first condition no candidate could satisfy,
  /// in the order paths, source tree, receiver tree.
  std::optional<FailureReason> failure_reason;
  /// Only from check_single_source.
  std::optional<SufficientConditions> sufficient;
};

/// Exact feasibility decision with witnesses. In strict mode every path set
/// is considered (deduplicated by the edges it uses) until one leaves room
/// for edge-disjoint source and receiver trees.
///
/// Throws SearchLimitError beyond the exact-search guard, and
/// std::invalid_argument for Pairing::all with k > 6.
FeasibilityReport check_feasibility(const ProtectionInstance& inst,
                                    const FeasibilityOptions& options = {});

/// check_feasibility for one-sender instances, plus the k-edge-connected /
/// Hamiltonian sufficient conditions. Throws std::invalid_argument if the
/// instance has more than one source.
FeasibilityReport check_single_source(const ProtectionInstance& inst,
                                      const FeasibilityOptions& options = {});

/// Independent re-check of a report's witnesses against the instance.
/// Returns a description of the first problem found, or nullopt if the
/// witnesses hold up (infeasible reports only need a failure reason).
std::optional<std::string> verify_report(const ProtectionInstance& inst,
                                         const FeasibilityReport& report);

/// Ten-node 3-regular graph made of two five-node blocks joined by a bridge,
/// with one sender at a bridge endpoint and receivers on both sides. Block i
/// is the 5-cycle a-b-c-d-e plus chords b-d and c-e; the bridge joins a1 and
/// a2. The sender is a1, the receivers b1, e1 and c2: once the sender's three
/// edges carry the working paths, c2 is cut off from b1 and e1, so no
/// receiver tree exists in strict mode.
ProtectionInstance bridged_cubic_fixture();

}  // namespace npc
