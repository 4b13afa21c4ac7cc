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
#include <string_view>
#include <vector>

#include "npc/graph.hpp"

namespace npc {

enum class Tristate { no, yes, unknown };

std::string_view to_string(Tristate value);

/// Exact backtracking search for a Hamiltonian cycle (node order, starting
/// at node 0). Graphs with fewer than three nodes have none. Returns
/// nullopt when no cycle exists.
std::optional<std::vector<NodeId>> find_hamiltonian_cycle(const Graph& g);

/// yes/no from the exact search when node_count() <= max_nodes, unknown
/// otherwise.
Tristate has_hamiltonian_cycle(const Graph& g, std::size_t max_nodes = 16);

}  // namespace npc
