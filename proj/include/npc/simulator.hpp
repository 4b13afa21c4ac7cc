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
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "npc/codec.hpp"
#include "npc/feasibility.hpp"
#include "npc/graph.hpp"

namespace npc {

/// Fail exactly these working paths (0-based path ids).
struct ExplicitFailures {
  std::vector<std::size_t> paths;
};

/// Fail `count` distinct working paths drawn with a seeded generator.
struct RandomFailures {
  std::size_t count = 0;
  std::uint64_t seed = 0;
};

using FailureModel = std::variant<ExplicitFailures, RandomFailures>;

struct Scenario {
  std::shared_ptr<const ProtectionInstance> instance;
  NpcCode code;
  std::vector<DataBlock> payload;
  FailureModel failures;
  TreeMode mode = TreeMode::strict;
};

struct TrialReport {
  DisjointPathSet provisioned;
  /// Sorted path ids whose symbols were erased.
  std::vector<std::size_t> failed_paths;
  bool recovered = false;
  /// Blocks that did not round-trip exactly.
  std::size_t mismatches = 0;
  /// More than t paths failed; nothing was decoded.
  bool capacity_exceeded = false;
  std::size_t blocks = 0;

  bool operator==(const TrialReport&) const = default;
};

/// Working paths for the instance, taken from its feasibility witness.
/// Throws InfeasibleInstanceError if there is none.
DisjointPathSet provision(const ProtectionInstance& inst,
                          TreeMode mode = TreeMode::strict);

/// The path ids a failure model selects for a k-path code, sorted.
/// Throws std::invalid_argument for ids >= k or a count above k.
std::vector<std::size_t> select_failures(const FailureModel& model, std::size_t k);

/// Encodes every payload block across the working paths, erases the failed
/// paths' symbols and decodes.
///
/// Throws std::invalid_argument if the payload is empty or the code length
/// differs from the instance's k, and InfeasibleInstanceError if the
/// instance cannot be provisioned. More than t failures give a report with
/// capacity_exceeded set.
TrialReport run(const Scenario& sc);

/// As run, with the working paths already provisioned.
TrialReport run_provisioned(const Scenario& sc, const DisjointPathSet& paths);

/// Fails `node` by erasing every working path through it; sc.failures is
/// ignored. Throws std::invalid_argument if node is a source or receiver.
TrialReport run_node_failure(const Scenario& sc, NodeId node);

/// `blocks` uniformly random data blocks for the code.
std::vector<DataBlock> random_payload(const NpcCode& code, std::size_t blocks,
                                      std::uint64_t seed);

struct BatchStats {
  std::size_t trials = 0;
  std::size_t recovered = 0;
  std::size_t within_capacity = 0;
  std::size_t exceeded_capacity = 0;
  /// recovered / trials, unset for an empty batch.
  std::optional<double> rate;

  bool operator==(const BatchStats&) const = default;
};

BatchStats summarize(std::span<const TrialReport> reports);

/// Runs all scenarios (in parallel) and aggregates them.
BatchStats batch(std::span<const Scenario> scenarios);

}  // namespace npc
