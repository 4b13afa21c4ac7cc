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

// Bulk kernels in two flavours with identical results: `serial` is the
// reference, `parallel` splits the outer loop across OpenMP threads.

#include <cstddef>
#include <span>
#include <vector>

#include "npc/codec.hpp"
#include "npc/graph.hpp"
#include "npc/simulator.hpp"

namespace npc::kernels {

namespace serial {

/// Encodes B blocks: `data` holds B * (k - t) symbols, `out` B * k.
void encode_blocks(const NpcCode& code, std::span<const Symbol> data,
                   std::span<Symbol> out);

/// Decodes B received blocks of k symbols into B * (k - t) data symbols.
/// Returns the number of blocks whose survivors were inconsistent.
std::size_t recover_blocks(const RecoveryPlan& plan, std::span<const Symbol> received,
                           std::span<Symbol> data);

/// n x n row-major matrix of edge-disjoint path counts, zero diagonal.
std::vector<std::size_t> all_pairs_edge_disjoint_counts(const Graph& g);

/// One report per scenario, in order.
std::vector<TrialReport> run_trials(std::span<const Scenario> scenarios);

}  // namespace serial

namespace parallel {

void encode_blocks(const NpcCode& code, std::span<const Symbol> data,
                   std::span<Symbol> out);
std::size_t recover_blocks(const RecoveryPlan& plan, std::span<const Symbol> received,
                           std::span<Symbol> data);
std::vector<std::size_t> all_pairs_edge_disjoint_counts(const Graph& g);
/// Provisions each distinct instance once, then runs the trials.
std::vector<TrialReport> run_trials(std::span<const Scenario> scenarios);

}  // namespace parallel

namespace detail {

/// Number of whole blocks, after checking both spans hold exactly that many.
std::size_t block_count(std::span<const Symbol> in, std::size_t in_width,
                        std::span<const Symbol> out, std::size_t out_width);

}  // namespace detail

}  // namespace npc::kernels
