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


#include "npc/simulator.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "npc/errors.hpp"
#include "npc/kernels.hpp"

namespace npc {

DisjointPathSet provision(const ProtectionInstance& inst, TreeMode mode) {
  FeasibilityOptions options;
  options.mode = mode;
  FeasibilityReport report = check_feasibility(inst, options);
  if (!report.feasible) {
    throw InfeasibleInstanceError(
        "instance is not feasible (" +
        std::string(to_string(report.failure_reason.value_or(FailureReason::paths))) +
        ")");
  }
  return std::move(report.paths);
}

std::vector<std::size_t> select_failures(const FailureModel& model, std::size_t k) {
  std::vector<std::size_t> out;
  if (const auto* chosen = std::get_if<ExplicitFailures>(&model)) {
    out = chosen->paths;
    for (std::size_t id : out) {
      if (id >= k) {
        throw std::invalid_argument("path id " + std::to_string(id) +
                                    " out of range for k=" + std::to_string(k));
      }
    }
  } else {
    const auto& random = std::get<RandomFailures>(model);
    if (random.count > k) {
      throw std::invalid_argument("cannot fail " + std::to_string(random.count) +
                                  " of " + std::to_string(k) + " paths");
    }
    std::vector<std::size_t> ids(k);
    std::iota(ids.begin(), ids.end(), 0);
    std::mt19937_64 rng(random.seed);
    // Partial Fisher-Yates keeps the draw independent of library internals.
    for (std::size_t i = 0; i < random.count; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, k - 1);
      std::swap(ids[i], ids[pick(rng)]);
    }
    out.assign(ids.begin(), ids.begin() + static_cast<std::ptrdiff_t>(random.count));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void check_scenario(const Scenario& sc) {
  if (!sc.instance) throw std::invalid_argument("scenario has no instance");
  if (sc.payload.empty()) throw std::invalid_argument("scenario payload is empty");
  if (sc.code.k() != sc.instance->k) {
    throw std::invalid_argument("code length " + std::to_string(sc.code.k()) +
                                " differs from the instance's k=" +
                                std::to_string(sc.instance->k));
  }
  for (const auto& block : sc.payload) {
    if (block.symbols.size() != sc.code.data_width()) {
      throw std::invalid_argument("payload block has the wrong width");
    }
  }
}

TrialReport drill(const Scenario& sc, const DisjointPathSet& paths,
                  std::vector<std::size_t> failed) {
  TrialReport report;
  report.provisioned = paths;
  report.failed_paths = std::move(failed);
  report.blocks = sc.payload.size();
  if (report.failed_paths.size() > sc.code.t()) {
    report.capacity_exceeded = true;
    return report;
  }

  const std::size_t width = sc.code.data_width();
  const std::size_t k = sc.code.k();
  std::vector<Symbol> data(report.blocks * width);
  for (std::size_t b = 0; b < report.blocks; ++b) {
    std::copy(sc.payload[b].symbols.begin(), sc.payload[b].symbols.end(),
              data.begin() + static_cast<std::ptrdiff_t>(b * width));
  }
  std::vector<Symbol> wire(report.blocks * k);
  kernels::serial::encode_blocks(sc.code, data, wire);
  for (std::size_t b = 0; b < report.blocks; ++b) {
    for (std::size_t id : report.failed_paths) wire[b * k + id] = 0;
  }

  // A non-MDS code can lose data even within t failures.
  std::optional<RecoveryPlan> plan;
  try {
    plan.emplace(sc.code, report.failed_paths);
  } catch (const CapacityExceededError&) {
    report.mismatches = report.blocks;
    return report;
  }
  std::vector<Symbol> decoded(data.size());
  kernels::serial::recover_blocks(*plan, wire, decoded);
  for (std::size_t b = 0; b < report.blocks; ++b) {
    const auto first = static_cast<std::ptrdiff_t>(b * width);
    if (!std::equal(data.begin() + first, data.begin() + first + static_cast<std::ptrdiff_t>(width),
                    decoded.begin() + first)) {
      ++report.mismatches;
    }
  }
  report.recovered = report.mismatches == 0;
  return report;
}

}  // namespace

TrialReport run_provisioned(const Scenario& sc, const DisjointPathSet& paths) {
  check_scenario(sc);
  return drill(sc, paths, select_failures(sc.failures, sc.code.k()));
}

TrialReport run(const Scenario& sc) {
  check_scenario(sc);
  return run_provisioned(sc, provision(*sc.instance, sc.mode));
}

TrialReport run_node_failure(const Scenario& sc, NodeId node) {
  check_scenario(sc);
  const Graph& g = sc.instance->graph;
  if (!g.has_node(node)) throw std::invalid_argument("unknown node");
  for (const auto* list : {&sc.instance->sources, &sc.instance->receivers}) {
    if (std::find(list->begin(), list->end(), node) != list->end()) {
      throw std::invalid_argument("node '" + g.label(node) +
                                  "' is a source or receiver, not a relay");
    }
  }
  const DisjointPathSet paths = provision(*sc.instance, sc.mode);
  std::vector<std::size_t> failed;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto nodes = path_nodes(g, paths.paths[i]);
    if (std::find(nodes.begin(), nodes.end(), node) != nodes.end()) failed.push_back(i);
  }
  return drill(sc, paths, std::move(failed));
}

std::vector<DataBlock> random_payload(const NpcCode& code, std::size_t blocks,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> symbol(0, code.field().order() - 1);
  std::vector<DataBlock> out(blocks);
  for (auto& block : out) {
    block.symbols.resize(code.data_width());
    for (auto& s : block.symbols) s = static_cast<Symbol>(symbol(rng));
  }
  return out;
}

BatchStats summarize(std::span<const TrialReport> reports) {
  BatchStats stats;
  stats.trials = reports.size();
  for (const auto& r : reports) {
    if (r.recovered) ++stats.recovered;
    if (r.capacity_exceeded) {
      ++stats.exceeded_capacity;
    } else {
      ++stats.within_capacity;
    }
  }
  if (stats.trials > 0) {
    stats.rate = static_cast<double>(stats.recovered) / static_cast<double>(stats.trials);
  }
  return stats;
}

BatchStats batch(std::span<const Scenario> scenarios) {
  const auto reports = kernels::parallel::run_trials(scenarios);
  return summarize(reports);
}

}  // namespace npc
