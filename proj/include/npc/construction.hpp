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
#include <string_view>

#include "npc/feasibility.hpp"
#include "npc/graph.hpp"

namespace npc {

/// Harary graph H_{k,n}: nodes v0..v(n-1) on a ring, each joined to its
/// floor(k/2) nearest neighbours on either side, plus diameters (or the
/// odd-n variant) when k is odd. It has ceil(kn/2) edges and both edge and
/// node connectivity k. Throws std::invalid_argument unless 2 <= k < n.
Graph harary(std::size_t n, std::size_t k);

/// Fewest edges for one sender and k receivers on n nodes: n + k - 2.
/// Requires 1 <= k and k + 1 <= n.
std::size_t min_edges_single_source(std::size_t n, std::size_t k);

/// Fewest edges for k predetermined sources and k receivers: n + k - 2.
/// Requires 1 <= k and 2k <= n.
std::size_t min_edges_predetermined(std::size_t n, std::size_t k);

/// Edges needed so that any k sources and k receivers work:
/// ceil(n(n - k + 1) / 2). Requires 1 <= k <= n.
std::size_t min_edges_arbitrary(std::size_t n, std::size_t k);

/// ceil(kn/2), the edge count below which no graph is k-connected.
/// Requires k < n.
std::size_t harary_lower_bound(std::size_t n, std::size_t k);

enum class WitnessMode { single_source, predetermined };

std::string_view to_string(WitnessMode mode);
WitnessMode parse_witness_mode(std::string_view text);

/// Extremal instance with exactly n + k - 2 edges.
///
/// single_source: s joined to every receiver, receivers r1..rk chained,
/// relays chained off r1. Labels s, r1.., w1...
/// predetermined: sources s1..sk chained, receivers r1..rk chained, s_i
/// joined to r_i, relays chained off r1.
///
/// Throws std::invalid_argument when the counts violate the matching
/// min_edges_* precondition.
ProtectionInstance build_minimal_witness(std::size_t n, std::size_t k,
                                         WitnessMode mode);

}  // namespace npc
