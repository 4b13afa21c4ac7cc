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


#include <omp.h>

#include <exception>
#include <map>
#include <mutex>
#include <utility>

#include "npc/connectivity.hpp"
#include "npc/kernels.hpp"

namespace npc::kernels::parallel {

namespace {

// Exceptions may not leave an OpenMP region; keep the first and rethrow.
class FirstError {
 public:
  template <typename F>
  void guard(F&& body) {
    try {
      body();
    } catch (...) {
      std::lock_guard lock(mutex_);
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::mutex mutex_;
  std::exception_ptr error_;
};

}  // namespace

void encode_blocks(const NpcCode& code, std::span<const Symbol> data,
                   std::span<Symbol> out) {
  const std::size_t d = code.data_width();
  const std::size_t k = code.k();
  const auto blocks = static_cast<std::ptrdiff_t>(detail::block_count(data, d, out, k));
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const auto i = static_cast<std::size_t>(b);
    code.encode_symbols(data.subspan(i * d, d), out.subspan(i * k, k));
  }
}

std::size_t recover_blocks(const RecoveryPlan& plan, std::span<const Symbol> received,
                           std::span<Symbol> data) {
  const std::size_t d = plan.data_width();
  const std::size_t k = plan.k();
  const auto blocks = static_cast<std::ptrdiff_t>(detail::block_count(received, k, data, d));
  std::size_t bad = 0;
#pragma omp parallel for schedule(static) reduction(+ : bad)
  for (std::ptrdiff_t b = 0; b < blocks; ++b) {
    const auto i = static_cast<std::size_t>(b);
    if (!plan.decode(received.subspan(i * k, k), data.subspan(i * d, d))) ++bad;
  }
  return bad;
}

std::vector<std::size_t> all_pairs_edge_disjoint_counts(const Graph& g) {
  const std::size_t n = g.node_count();
  std::vector<std::size_t> counts(n * n, 0);
  const auto rows = static_cast<std::ptrdiff_t>(n);
  // Each (s, r) cell is written by exactly one iteration.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t s = 0; s < rows; ++s) {
    const auto u = static_cast<NodeId>(s);
    for (NodeId r = u + 1; r < n; ++r) {
      const std::size_t c = max_edge_disjoint_path_count(g, u, r);
      counts[u * n + r] = counts[r * n + u] = c;
    }
  }
  return counts;
}

std::vector<TrialReport> run_trials(std::span<const Scenario> scenarios) {
  std::map<std::pair<const ProtectionInstance*, TreeMode>, DisjointPathSet> provisioned;
  for (const auto& sc : scenarios) {
    if (!sc.instance) continue;
    const auto key = std::pair{sc.instance.get(), sc.mode};
    if (!provisioned.contains(key)) provisioned.emplace(key, provision(*sc.instance, sc.mode));
  }

  std::vector<TrialReport> reports(scenarios.size());
  FirstError error;
  const auto trials = static_cast<std::ptrdiff_t>(scenarios.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < trials; ++i) {
    error.guard([&] {
      const Scenario& sc = scenarios[static_cast<std::size_t>(i)];
      if (!sc.instance) {
        reports[static_cast<std::size_t>(i)] = run(sc);  // throws the usual error
        return;
      }
      reports[static_cast<std::size_t>(i)] =
          run_provisioned(sc, provisioned.at({sc.instance.get(), sc.mode}));
    });
  }
  error.rethrow();
  return reports;
}

}  // namespace npc::kernels::parallel
