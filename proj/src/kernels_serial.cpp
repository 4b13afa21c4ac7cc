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


#include <stdexcept>

#include "npc/connectivity.hpp"
#include "npc/kernels.hpp"

namespace npc::kernels {

std::size_t detail::block_count(std::span<const Symbol> in, std::size_t in_width,
                                std::span<const Symbol> out, std::size_t out_width) {
  if (in_width == 0 || in.size() % in_width != 0) {
    throw std::invalid_argument("input is not a whole number of blocks");
  }
  const std::size_t blocks = in.size() / in_width;
  if (out.size() != blocks * out_width) {
    throw std::invalid_argument("output size does not match the block count");
  }
  return blocks;
}

namespace serial {

void encode_blocks(const NpcCode& code, std::span<const Symbol> data,
                   std::span<Symbol> out) {
  const std::size_t d = code.data_width();
  const std::size_t k = code.k();
  const std::size_t blocks = detail::block_count(data, d, out, k);
  for (std::size_t b = 0; b < blocks; ++b) {
    code.encode_symbols(data.subspan(b * d, d), out.subspan(b * k, k));
  }
}

std::size_t recover_blocks(const RecoveryPlan& plan, std::span<const Symbol> received,
                           std::span<Symbol> data) {
  const std::size_t d = plan.data_width();
  const std::size_t k = plan.k();
  const std::size_t blocks = detail::block_count(received, k, data, d);
  std::size_t bad = 0;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (!plan.decode(received.subspan(b * k, k), data.subspan(b * d, d))) ++bad;
  }
  return bad;
}

std::vector<std::size_t> all_pairs_edge_disjoint_counts(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> counts(n * n, 0);
  for (NodeId s = 0; s < n; ++s) {
    for (NodeId r = s + 1; r < n; ++r) {
      const std::size_t c = max_edge_disjoint_path_count(g, s, r);
      counts[s * n + r] = counts[r * n + s] = c;
    }
  }
  return counts;
}

std::vector<TrialReport> run_trials(std::span<const Scenario> scenarios) {
  std::vector<TrialReport> reports;
  reports.reserve(scenarios.size());
  for (const auto& sc : scenarios) reports.push_back(run(sc));
  return reports;
}

}  // namespace serial

}  // namespace npc::kernels
