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


#include "npc/construction.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace npc {

namespace {

std::string counts(std::size_t n, std::size_t k) {
  return " (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")";
}

}  // namespace

Graph harary(std::size_t n, std::size_t k) {
  if (k < 2 || k >= n) {
    throw std::invalid_argument("Harary graph needs 2 <= k < n" + counts(n, k));
  }
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node();

  std::vector<std::vector<bool>> joined(n, std::vector<bool>(n, false));
  auto join = [&](std::size_t i, std::size_t j) {
    if (joined[i][j]) return;
    joined[i][j] = joined[j][i] = true;
    g.add_edge(i, j);
  };

  const std::size_t r = k / 2;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (j - i <= r || n + i - j <= r) join(i, j);
    }
  }
  if (k % 2 == 1) {
    if (n % 2 == 0) {
      for (std::size_t i = 0; i < n / 2; ++i) join(i, i + n / 2);
    } else {
      join(0, (n - 1) / 2);
      join(0, (n + 1) / 2);
      for (std::size_t i = 1; i <= (n - 3) / 2; ++i) join(i, i + (n + 1) / 2);
    }
  }
  return g;
}

std::size_t min_edges_single_source(std::size_t n, std::size_t k) {
  if (k < 1 || k + 1 > n) {
    throw std::invalid_argument("single-source bound needs 1 <= k and k + 1 <= n" +
                                counts(n, k));
  }
  return n + k - 2;
}

std::size_t min_edges_predetermined(std::size_t n, std::size_t k) {
  if (k < 1 || 2 * k > n) {
    throw std::invalid_argument("predetermined bound needs 1 <= k and 2k <= n" +
                                counts(n, k));
  }
  return n + k - 2;
}

std::size_t min_edges_arbitrary(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) {
    throw std::invalid_argument("arbitrary bound needs 1 <= k <= n" + counts(n, k));
  }
  const std::size_t product = n * (n - k + 1);
  return (product + 1) / 2;
}

std::size_t harary_lower_bound(std::size_t n, std::size_t k) {
  if (k >= n) throw std::invalid_argument("lower bound needs k < n" + counts(n, k));
  return (k * n + 1) / 2;
}

std::string_view to_string(WitnessMode mode) {
  return mode == WitnessMode::single_source ? "single_source" : "predetermined";
}

WitnessMode parse_witness_mode(std::string_view text) {
  if (text == "single_source" || text == "single-source") return WitnessMode::single_source;
  if (text == "predetermined") return WitnessMode::predetermined;
  throw std::invalid_argument("unknown witness mode '" + std::string(text) + "'");
}

ProtectionInstance build_minimal_witness(std::size_t n, std::size_t k,
                                         WitnessMode mode) {
  Graph g;
  std::vector<NodeId> sources;
  std::vector<NodeId> receivers;

  if (mode == WitnessMode::single_source) {
    min_edges_single_source(n, k);
    sources.push_back(g.add_node(Role::source, "s"));
  } else {
    min_edges_predetermined(n, k);
    for (std::size_t i = 1; i <= k; ++i) {
      sources.push_back(g.add_node(Role::source, "s" + std::to_string(i)));
    }
  }
  for (std::size_t i = 1; i <= k; ++i) {
    receivers.push_back(g.add_node(Role::receiver, "r" + std::to_string(i)));
  }

  for (std::size_t i = 1; i < sources.size(); ++i) g.add_edge(sources[i - 1], sources[i]);
  for (std::size_t i = 0; i < k; ++i) {
    g.add_edge(sources.size() == 1 ? sources[0] : sources[i], receivers[i]);
  }
  for (std::size_t i = 1; i < k; ++i) g.add_edge(receivers[i - 1], receivers[i]);

  NodeId previous = receivers[0];
  for (std::size_t i = 1; g.node_count() < n; ++i) {
    const NodeId relay = g.add_node(Role::relay, "w" + std::to_string(i));
    g.add_edge(previous, relay);
    previous = relay;
  }
  return make_instance(std::move(g), std::move(sources), std::move(receivers), k);
}

}  // namespace npc
