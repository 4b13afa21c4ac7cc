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

#include "npc/feasibility.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <unordered_set>
#include <utility>

namespace npc {

std::string_view to_string(TreeMode mode) {
  return mode == TreeMode::strict ? "strict" : "relaxed";
}

std::string_view to_string(FailureReason reason) {
  switch (reason) {
    case FailureReason::paths:
      return "paths";
    case FailureReason::source_tree:
      return "source-tree";
    case FailureReason::receiver_tree:
      return "receiver-tree";
  }
  return "paths";
}

Tristate SufficientConditions::holds() const {
  if (!k_edge_connected || hamiltonian == Tristate::no) return Tristate::no;
  return hamiltonian;
}

std::vector<PathRequest> ProtectionInstance::pairs() const {
  std::vector<PathRequest> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    out.push_back({sources.size() == 1 ? sources[0] : sources[i],
                   receivers.size() == 1 ? receivers[0] : receivers[i]});
  }
  return out;
}

void validate(const ProtectionInstance& inst) {
  const auto& g = inst.graph;
  if (inst.sources.empty() || inst.receivers.empty()) {
    throw std::invalid_argument("instance needs at least one source and receiver");
  }
  std::vector<bool> seen(g.node_count(), false);
  for (const auto* list : {&inst.sources, &inst.receivers}) {
    for (NodeId v : *list) {
      if (!g.has_node(v)) throw std::invalid_argument("unknown node in instance");
      if (seen[v]) {
        throw std::invalid_argument("node '" + g.label(v) +
                                    "' listed twice among sources/receivers");
      }
      seen[v] = true;
    }
  }
  const std::size_t ns = inst.sources.size();
  const std::size_t nr = inst.receivers.size();
  if (inst.k == 0) throw std::invalid_argument("k must be at least 1");
  const bool ok = (ns == 1 && nr == 1) || (ns == nr && inst.k == ns) ||
                  (ns == 1 && inst.k == nr) || (nr == 1 && inst.k == ns);
  if (!ok) {
    throw std::invalid_argument(
        "unsupported instance shape: " + std::to_string(ns) + " sources, " +
        std::to_string(nr) + " receivers, k=" + std::to_string(inst.k));
  }
}

ProtectionInstance make_instance(Graph graph, std::vector<NodeId> sources,
                                 std::vector<NodeId> receivers,
                                 std::optional<std::size_t> k) {
  ProtectionInstance inst;
  inst.k = k.value_or(std::max(sources.size(), receivers.size()));
  inst.graph = std::move(graph);
  inst.sources = std::move(sources);
  inst.receivers = std::move(receivers);
  validate(inst);
  return inst;
}

ProtectionInstance instance_from_roles(Graph graph, std::optional<std::size_t> k) {
  auto sources = graph.nodes_with_role(Role::source);
  auto receivers = graph.nodes_with_role(Role::receiver);
  return make_instance(std::move(graph), std::move(sources), std::move(receivers), k);
}

namespace {

EdgeMask mask_of(const Graph& g, const std::vector<EdgeId>& edges) {
  EdgeMask m(g.edge_id_bound(), false);
  for (EdgeId e : edges) m[e] = true;
  return m;
}

struct TreePair {
  std::vector<EdgeId> sources;
  std::vector<EdgeId> receivers;
};

// Grows every subtree rooted at the first source (include/exclude on the
// lowest-id frontier edge) until it spans the sources, then looks for a
// receiver tree in what is left. Every minimal source tree is reached.
class DisjointTreeSearch {
 public:
  DisjointTreeSearch(const Graph& g, std::span<const NodeId> sources,
                     std::span<const NodeId> receivers, const EdgeMask& blocked)
      : g_(g),
        sources_(sources),
        receivers_(receivers),
        excluded_(blocked),
        taken_(blocked),
        in_tree_(g.node_count(), false) {}

  std::optional<TreePair> run() {
    in_tree_[sources_[0]] = true;
    if (grow()) return found_;
    return std::nullopt;
  }

 private:
  bool spans_sources() const {
    return std::all_of(sources_.begin(), sources_.end(),
                       [&](NodeId v) { return in_tree_[v]; });
  }

  bool grow() {
    if (spans_sources()) {
      auto receiver_tree = steiner_tree(g_, receivers_, &taken_);
      if (!receiver_tree) return false;
      found_.sources = tree_;
      std::sort(found_.sources.begin(), found_.sources.end());
      found_.receivers = std::move(*receiver_tree);
      return true;
    }
    if (!terminals_connected(g_, receivers_, &taken_)) return false;
    if (!terminals_connected(g_, sources_, &excluded_)) return false;

    std::optional<Incidence> frontier;
    for (NodeId v = 0; v < g_.node_count(); ++v) {
      if (!in_tree_[v]) continue;
      for (const auto& inc : g_.incident(v)) {
        if (excluded_[inc.edge] || in_tree_[inc.other]) continue;
        if (!frontier || inc.edge < frontier->edge) frontier = inc;
      }
    }
    if (!frontier) return false;
    const EdgeId e = frontier->edge;
    const NodeId w = frontier->other;

    in_tree_[w] = true;
    tree_.push_back(e);
    taken_[e] = true;
    const bool hit = grow();
    taken_[e] = false;
    tree_.pop_back();
    in_tree_[w] = false;
    if (hit) return true;

    excluded_[e] = true;
    const bool rest = grow();
    excluded_[e] = false;
    return rest;
  }

  const Graph& g_;
  std::span<const NodeId> sources_;
  std::span<const NodeId> receivers_;
  EdgeMask excluded_;  // blocked or ruled out for the source tree
  EdgeMask taken_;     // blocked or already in the source tree
  std::vector<bool> in_tree_;
  std::vector<EdgeId> tree_;
  TreePair found_;
};

std::optional<TreePair> disjoint_trees(const Graph& g,
                                       std::span<const NodeId> sources,
                                       std::span<const NodeId> receivers,
                                       const EdgeMask& blocked) {
  if (sources.size() <= 1) {
    auto r = steiner_tree(g, receivers, &blocked);
    if (!r) return std::nullopt;
    return TreePair{{}, std::move(*r)};
  }
  if (receivers.size() <= 1) {
    auto s = steiner_tree(g, sources, &blocked);
    if (!s) return std::nullopt;
    return TreePair{std::move(*s), {}};
  }
  return DisjointTreeSearch(g, sources, receivers, blocked).run();
}

FeasibilityReport check_relaxed(const ProtectionInstance& inst,
                                const std::vector<PathRequest>& pairs,
                                const SearchLimits& limits) {
  FeasibilityReport report;
  report.mode = TreeMode::relaxed;
  report.pairs = pairs;
  auto paths = find_disjoint_paths_multi(inst.graph, pairs, limits);
  if (!paths) {
    report.failure_reason = FailureReason::paths;
    return report;
  }
  auto source_tree = steiner_tree(inst.graph, inst.sources);
  if (!source_tree) {
    report.failure_reason = FailureReason::source_tree;
    return report;
  }
  auto receiver_tree = steiner_tree(inst.graph, inst.receivers);
  if (!receiver_tree) {
    report.failure_reason = FailureReason::receiver_tree;
    return report;
  }
  report.feasible = true;
  report.paths = std::move(*paths);
  report.source_tree = std::move(*source_tree);
  report.receiver_tree = std::move(*receiver_tree);
  return report;
}

FeasibilityReport check_strict(const ProtectionInstance& inst,
                               const std::vector<PathRequest>& pairs,
                               const SearchLimits& limits) {
  const Graph& g = inst.graph;
  FeasibilityReport report;
  report.mode = TreeMode::strict;
  report.pairs = pairs;

  auto first = find_disjoint_paths_multi(g, pairs, limits);
  if (!first) {
    report.failure_reason = FailureReason::paths;
    return report;
  }

  auto accept = [&](const DisjointPathSet& paths, TreePair trees) {
    report.feasible = true;
    report.paths = paths;
    report.source_tree = std::move(trees.sources);
    report.receiver_tree = std::move(trees.receivers);
  };

  // Usually the first witness leaves enough room.
  if (auto trees = disjoint_trees(g, inst.sources, inst.receivers,
                                  mask_of(g, first->edges()))) {
    accept(*first, std::move(*trees));
    return report;
  }

  std::unordered_set<EdgeMask> tried;
  const PathSetVisitor try_trees = [&](const DisjointPathSet& paths,
                                       const EdgeMask& used) {
    if (!tried.insert(used).second) return false;
    auto trees = disjoint_trees(g, inst.sources, inst.receivers, used);
    if (!trees) return false;
    accept(paths, std::move(*trees));
    return true;
  };
  const PartialFilter both_connected = [&](const EdgeMask& used) {
    return terminals_connected(g, inst.sources, &used) &&
           terminals_connected(g, inst.receivers, &used);
  };
  if (enumerate_disjoint_path_sets(g, pairs, try_trees, both_connected, limits)) {
    return report;
  }

  // Infeasible. Blame the source tree only if no path set leaves one.
  report.failure_reason = FailureReason::receiver_tree;
  if (inst.sources.size() > 1) {
    tried.clear();
    const PathSetVisitor has_source_tree = [&](const DisjointPathSet&,
                                               const EdgeMask& used) {
      return tried.insert(used).second &&
             terminals_connected(g, inst.sources, &used);
    };
    const PartialFilter sources_connected = [&](const EdgeMask& used) {
      return terminals_connected(g, inst.sources, &used);
    };
    if (!enumerate_disjoint_path_sets(g, pairs, has_source_tree,
                                      sources_connected, limits)) {
      report.failure_reason = FailureReason::source_tree;
    }
  }
  return report;
}

FeasibilityReport check_pairing(const ProtectionInstance& inst,
                                const std::vector<PathRequest>& pairs,
                                const FeasibilityOptions& options) {
  return options.mode == TreeMode::strict
             ? check_strict(inst, pairs, options.limits)
             : check_relaxed(inst, pairs, options.limits);
}

}  // namespace

FeasibilityReport check_feasibility(const ProtectionInstance& inst,
                                    const FeasibilityOptions& options) {
  validate(inst);
  const auto pairs = inst.pairs();
  const bool permutable = inst.sources.size() > 1 && inst.receivers.size() > 1;
  if (options.pairing == Pairing::fixed || !permutable) {
    return check_pairing(inst, pairs, options);
  }
  if (inst.k > 6) {
    throw std::invalid_argument("trying all pairings is limited to k <= 6");
  }

  std::vector<NodeId> order = inst.receivers;
  std::sort(order.begin(), order.end());
  std::optional<FeasibilityReport> as_given;
  do {
    std::vector<PathRequest> permuted;
    for (std::size_t i = 0; i < inst.k; ++i) {
      permuted.push_back({inst.sources[i], order[i]});
    }
    auto report = check_pairing(inst, permuted, options);
    if (report.feasible) return report;
    if (std::equal(order.begin(), order.end(), inst.receivers.begin())) {
      as_given = std::move(report);
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return *as_given;
}

FeasibilityReport check_single_source(const ProtectionInstance& inst,
                                      const FeasibilityOptions& options) {
  validate(inst);
  if (inst.sources.size() != 1) {
    throw std::invalid_argument("single-source check needs exactly one source");
  }
  FeasibilityReport report = check_feasibility(inst, options);
  SufficientConditions cond;
  if (inst.graph.node_count() >= 2) {
    cond.edge_connectivity = edge_connectivity(inst.graph).value;
  }
  cond.k_edge_connected = cond.edge_connectivity >= inst.k;
  cond.hamiltonian = has_hamiltonian_cycle(inst.graph);
  report.sufficient = cond;
  return report;
}

std::optional<std::string> verify_report(const ProtectionInstance& inst,
                                         const FeasibilityReport& report) {
  const Graph& g = inst.graph;
  if (!report.feasible) {
    if (!report.failure_reason) return "infeasible report without a reason";
    return std::nullopt;
  }
  if (report.pairs.size() != inst.k) return "pairing has the wrong length";
  // The pairing must keep the sources in order and use each receiver slot once.
  auto expected = inst.pairs();
  std::vector<NodeId> want_receivers, got_receivers;
  for (std::size_t i = 0; i < inst.k; ++i) {
    if (report.pairs[i].source != expected[i].source) {
      return "pairing reorders the sources";
    }
    want_receivers.push_back(expected[i].target);
    got_receivers.push_back(report.pairs[i].target);
  }
  std::sort(want_receivers.begin(), want_receivers.end());
  std::sort(got_receivers.begin(), got_receivers.end());
  if (want_receivers != got_receivers) return "pairing does not match the receivers";

  if (report.paths.size() != inst.k) return "wrong number of working paths";
  for (std::size_t i = 0; i < inst.k; ++i) {
    const Path& p = report.paths.paths[i];
    if (p.source != report.pairs[i].source || p.target != report.pairs[i].target) {
      return "path " + std::to_string(i) + " joins the wrong nodes";
    }
    if (!is_simple_path(g, p)) return "path " + std::to_string(i) + " is not a simple path";
  }
  if (!pairwise_edge_disjoint(report.paths)) return "working paths share an edge";

  auto spans = [&](const std::vector<EdgeId>& tree, const std::vector<NodeId>& terminals) {
    EdgeMask outside(g.edge_id_bound(), true);
    for (EdgeId e : tree) {
      if (!g.has_edge(e)) return false;
      outside[e] = false;
    }
    return terminals_connected(g, terminals, &outside);
  };
  if (!spans(report.source_tree, inst.sources)) return "source tree does not span the sources";
  if (!spans(report.receiver_tree, inst.receivers)) {
    return "receiver tree does not span the receivers";
  }

  if (report.mode == TreeMode::strict) {
    const EdgeMask path_edges = mask_of(g, report.paths.edges());
    const EdgeMask source_edges = mask_of(g, report.source_tree);
    for (EdgeId e : report.source_tree) {
      if (path_edges[e]) return "source tree reuses a path edge";
    }
    for (EdgeId e : report.receiver_tree) {
      if (path_edges[e]) return "receiver tree reuses a path edge";
      if (source_edges[e]) return "receiver tree reuses a source-tree edge";
    }
  }
  return std::nullopt;
}

ProtectionInstance bridged_cubic_fixture() {
  Graph g;
  std::vector<NodeId> block[2];
  for (int b = 0; b < 2; ++b) {
    for (char c : std::string_view("abcde")) {
      block[b].push_back(g.add_node(Role::relay, std::string(1, c) + std::to_string(b + 1)));
    }
    auto [a, bb, c, d, e] = std::tuple{block[b][0], block[b][1], block[b][2],
                                       block[b][3], block[b][4]};
    g.add_edge(a, bb);
    g.add_edge(bb, c);
    g.add_edge(c, d);
    g.add_edge(d, e);
    g.add_edge(e, a);
    g.add_edge(bb, d);
    g.add_edge(c, e);
  }
  g.add_edge(block[0][0], block[1][0], "bridge");

  const NodeId sender = block[0][0];
  const std::vector<NodeId> receivers{block[0][1], block[0][4], block[1][2]};
  g.set_role(sender, Role::source);
  for (NodeId r : receivers) g.set_role(r, Role::receiver);
  return make_instance(std::move(g), {sender}, receivers);
}

}  // namespace npc
