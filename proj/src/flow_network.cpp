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

#include "flow_network.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>

namespace npc::detail {

std::size_t FlowNetwork::add_node() {
  adjacency_.emplace_back();
  return adjacency_.size() - 1;
}

std::size_t FlowNetwork::add_arc(std::size_t u, std::size_t v, int cap_forward,
                                 int cap_backward, EdgeId tag) {
  const std::size_t a = head_.size();
  head_.push_back(v);
  cap_.push_back(cap_forward);
  flow_.push_back(0);
  tag_.push_back(tag);
  head_.push_back(u);
  cap_.push_back(cap_backward);
  flow_.push_back(0);
  tag_.push_back(tag);
  adjacency_[u].push_back(a);
  adjacency_[v].push_back(a + 1);
  return a;
}

int FlowNetwork::max_flow(std::size_t s, std::size_t t, int limit) {
  int total = 0;
  std::vector<std::size_t> via(adjacency_.size());
  std::vector<bool> seen(adjacency_.size());
  std::deque<std::size_t> queue;
  while (total < limit) {
    std::fill(seen.begin(), seen.end(), false);
    queue.clear();
    queue.push_back(s);
    seen[s] = true;
    while (!queue.empty() && !seen[t]) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (std::size_t a : adjacency_[v]) {
        const std::size_t w = head_[a];
        if (seen[w] || residual(a) <= 0) continue;
        seen[w] = true;
        via[w] = a;
        queue.push_back(w);
      }
    }
    if (!seen[t]) break;

    int push = limit - total;
    for (std::size_t v = t; v != s; v = tail(via[v])) {
      push = std::min(push, residual(via[v]));
    }
    for (std::size_t v = t; v != s; v = tail(via[v])) {
      flow_[via[v]] += push;
      flow_[via[v] ^ 1] -= push;
    }
    total += push;
  }
  return total;
}

std::vector<bool> FlowNetwork::residual_reachable(std::size_t s) const {
  std::vector<bool> seen(adjacency_.size(), false);
  std::vector<std::size_t> stack{s};
  seen[s] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t a : adjacency_[v]) {
      const std::size_t w = head_[a];
      if (!seen[w] && residual(a) > 0) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<std::vector<std::size_t>> FlowNetwork::decompose(
    std::size_t s, std::size_t t) const {
  std::vector<int> left(flow_.size());
  for (std::size_t a = 0; a < flow_.size(); ++a) left[a] = std::max(flow_[a], 0);

  std::vector<std::vector<std::size_t>> paths;
  std::vector<std::size_t> position(adjacency_.size(), SIZE_MAX);
  while (true) {
    std::vector<std::size_t> nodes{s};
    std::vector<std::size_t> arcs;
    position[s] = 0;
    std::size_t at = s;
    while (at != t) {
      std::size_t next_arc = SIZE_MAX;
      for (std::size_t a : adjacency_[at]) {
        if (left[a] > 0) {
          next_arc = a;
          break;
        }
      }
      if (next_arc == SIZE_MAX) break;
      --left[next_arc];
      const std::size_t w = head_[next_arc];
      if (position[w] != SIZE_MAX) {
        // Closed a flow cycle: drop it and continue from w.
        for (std::size_t i = position[w] + 1; i < nodes.size(); ++i) {
          position[nodes[i]] = SIZE_MAX;
        }
        nodes.resize(position[w] + 1);
        arcs.resize(position[w]);
      } else {
        position[w] = nodes.size();
        nodes.push_back(w);
        arcs.push_back(next_arc);
      }
      at = w;
    }
    for (std::size_t v : nodes) position[v] = SIZE_MAX;
    if (at != t) break;
    paths.push_back(std::move(arcs));
  }
  return paths;
}

FlowNetwork unit_network(const Graph& g, const std::vector<bool>* blocked) {
  FlowNetwork net(g.node_count());
  for (EdgeId e : g.edge_ids()) {
    if (blocked && (*blocked)[e]) continue;
    const Edge& ed = g.edge(e);
    net.add_arc(ed.u, ed.v, 1, 1, e);
  }
  return net;
}

Path to_graph_path(const FlowNetwork& net, const std::vector<std::size_t>& arcs,
                   NodeId source) {
  Path p;
  p.source = source;
  p.target = source;
  for (std::size_t a : arcs) {
    if (net.tag(a) == FlowNetwork::kNoEdge) continue;
    p.edges.push_back(net.tag(a));
    p.target = net.head(a);
  }
  return p;
}

}  // namespace npc::detail
