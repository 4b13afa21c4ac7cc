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

#include "npc/hamiltonian.hpp"

namespace npc {

std::string_view to_string(Tristate value) {
  switch (value) {
    case Tristate::no:
      return "no";
    case Tristate::yes:
      return "yes";
    case Tristate::unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

struct CycleSearch {
  const Graph& g;
  std::vector<NodeId> order;
  std::vector<bool> used;

  bool extend(NodeId at) {
    if (order.size() == g.node_count()) return g.adjacent(at, order.front());
    for (NodeId next : g.neighbors(at)) {
      if (used[next]) continue;
      used[next] = true;
      order.push_back(next);
      if (!dead_end() && extend(next)) return true;
      order.pop_back();
      used[next] = false;
    }
    return false;
  }

  // Some unvisited node has fewer than two usable neighbours (unvisited, or
  // the path's two ends).
  bool dead_end() const {
    const NodeId head = order.back();
    const NodeId tail = order.front();
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (used[v]) continue;
      std::size_t free = 0;
      for (NodeId w : g.neighbors(v)) {
        if (!used[w] || w == head || w == tail) ++free;
      }
      if (free < 2) return true;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<NodeId>> find_hamiltonian_cycle(const Graph& g) {
  if (g.node_count() < 3) return std::nullopt;
  CycleSearch search{g, {0}, std::vector<bool>(g.node_count(), false)};
  search.used[0] = true;
  if (!search.extend(0)) return std::nullopt;
  return search.order;
}

Tristate has_hamiltonian_cycle(const Graph& g, std::size_t max_nodes) {
  if (g.node_count() > max_nodes) return Tristate::unknown;
  return find_hamiltonian_cycle(g) ? Tristate::yes : Tristate::no;
}

}  // namespace npc
