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


#include <doctest.h>

#include <memory>
#include <stdexcept>
#include <vector>

#include "npc/codec.hpp"
#include "npc/errors.hpp"
#include "npc/simulator.hpp"
#include "support/fixtures.hpp"

using npc::ExplicitFailures;
using npc::RandomFailures;
using npc::Scenario;

namespace {

std::shared_ptr<const npc::FieldContext> gf256() {
  static const auto field = std::make_shared<const npc::FieldContext>();
  return field;
}

Scenario scenario(std::shared_ptr<const npc::ProtectionInstance> inst, std::size_t t,
                  npc::FailureModel failures, std::uint64_t seed = 1, std::size_t blocks = 8) {
  auto code = npc::build_code(inst->k, t, gf256());
  auto payload = npc::random_payload(code, blocks, seed);
  return Scenario{std::move(inst), std::move(code), std::move(payload), std::move(failures)};
}

// k = 4 instance: one sender on K6.
std::shared_ptr<const npc::ProtectionInstance> k6_instance() {
  npc::Graph g;
  for (int i = 0; i < 6; ++i) g.add_node();
  for (npc::NodeId u = 0; u < 6; ++u) {
    for (npc::NodeId v = u + 1; v < 6; ++v) g.add_edge(u, v);
  }
  return std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(std::move(g), {0}, {1, 2, 3, 4}));
}

}  // namespace

TEST_CASE("no failures") {
  const auto report = npc::run(scenario(fixture::harary_instance(), 1, ExplicitFailures{}));
  CHECK(report.recovered);
  CHECK(report.mismatches == 0);
  CHECK(report.provisioned.size() == 3);
  CHECK(report.blocks == 8);
}

TEST_CASE("k=4, t=2, both parity paths fail") {
  const auto report = npc::run(scenario(k6_instance(), 2, ExplicitFailures{{2, 3}}));
  CHECK(report.recovered);
  CHECK(report.failed_paths == std::vector<std::size_t>{2, 3});
}

TEST_CASE("k=6, t=2 on doubled H(3,10): every failure pair, 50 blocks") {
  const auto inst = fixture::doubled_harary_instance();
  const auto paths = npc::provision(*inst);
  CHECK(paths.size() == 6);
  std::size_t trials = 0;
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = a + 1; b < 6; ++b) {
      const auto sc = scenario(inst, 2, ExplicitFailures{{a, b}}, 100 + a * 6 + b, 50);
      const auto report = npc::run_provisioned(sc, paths);
      CHECK(report.recovered);
      CHECK(report.mismatches == 0);
      ++trials;
    }
  }
  CHECK(trials == 15);
}

TEST_CASE("more than t failures is reported, not thrown") {
  const auto report = npc::run(scenario(k6_instance(), 1, ExplicitFailures{{0, 1}}));
  CHECK(report.capacity_exceeded);
  CHECK_FALSE(report.recovered);
}

TEST_CASE("scenario errors") {
  npc::Graph g;
  for (int i = 0; i < 3; ++i) g.add_node();
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  auto line = std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(std::move(g), {0}, {1, 2}));
  CHECK_THROWS_AS(npc::run(scenario(line, 1, ExplicitFailures{})), npc::InfeasibleInstanceError);

  auto sc = scenario(fixture::harary_instance(), 1, ExplicitFailures{});
  sc.payload.clear();
  CHECK_THROWS_AS(npc::run(sc), std::invalid_argument);

  auto wrong = scenario(fixture::harary_instance(), 1, ExplicitFailures{{5}});
  CHECK_THROWS_AS(npc::run(wrong), std::invalid_argument);

  auto mismatched = scenario(fixture::harary_instance(), 1, ExplicitFailures{});
  mismatched.code = npc::build_code(4, 1, gf256());
  CHECK_THROWS_AS(npc::run(mismatched), std::invalid_argument);
}

TEST_CASE("random failures are deterministic") {
  const auto inst = k6_instance();
  const auto a = npc::run(scenario(inst, 2, RandomFailures{2, 77}, 5));
  const auto b = npc::run(scenario(inst, 2, RandomFailures{2, 77}, 5));
  CHECK(a == b);
  CHECK(a.failed_paths.size() == 2);
  CHECK(a.recovered);
  CHECK(npc::select_failures(RandomFailures{3, 1}, 4).size() == 3);
  CHECK_THROWS_AS(npc::select_failures(RandomFailures{5, 1}, 4), std::invalid_argument);
}

TEST_CASE("node failures") {
  const auto inst = fixture::harary_instance();
  const auto paths = npc::provision(*inst);
  std::vector<std::size_t> load(inst->graph.node_count(), 0);
  for (const auto& p : paths.paths) {
    const auto nodes = npc::path_nodes(inst->graph, p);
    for (auto v : nodes) ++load[v];
  }
  bool hit_one = false;
  bool hit_more = false;
  for (npc::NodeId v = 0; v < inst->graph.node_count(); ++v) {
    if (v == 0 || v == 3 || v == 5 || v == 8) continue;
    for (std::size_t t : {1U, 2U}) {
      const auto report = npc::run_node_failure(scenario(inst, t, ExplicitFailures{}), v);
      CHECK(report.failed_paths.size() == load[v]);
      if (load[v] <= t) {
        CHECK(report.recovered);
      } else {
        CHECK(report.capacity_exceeded);
      }
    }
    if (load[v] == 1) hit_one = true;
    if (load[v] > 1) hit_more = true;
  }
  CHECK(hit_one);
  MESSAGE("relay carrying several paths present: " << hit_more);
  CHECK_THROWS_AS(npc::run_node_failure(scenario(inst, 1, ExplicitFailures{}), 0),
                  std::invalid_argument);
  CHECK_THROWS_AS(npc::run_node_failure(scenario(inst, 1, ExplicitFailures{}), 3),
                  std::invalid_argument);
}

TEST_CASE("node on exactly t paths is recovered") {
  // Sender 0, receivers 1-3; relay 4 carries the paths to 1 and 2.
  npc::Graph g;
  for (int i = 0; i < 5; ++i) g.add_node();
  g.add_edge(0, 4);
  g.add_edge(0, 4);
  g.add_edge(4, 1);
  g.add_edge(4, 2);
  g.add_edge(0, 3);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  auto inst = std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(std::move(g), {0}, {1, 2, 3}));
  const auto two = npc::run_node_failure(scenario(inst, 2, ExplicitFailures{}), 4);
  CHECK(two.failed_paths.size() == 2);
  CHECK(two.recovered);
  const auto one = npc::run_node_failure(scenario(inst, 1, ExplicitFailures{}), 4);
  CHECK(one.capacity_exceeded);
}

TEST_CASE("node on t + 1 paths is flagged") {
  // Sender 0, receivers 1 and 2, both paths forced through relay 3.
  npc::Graph g;
  for (int i = 0; i < 4; ++i) g.add_node();
  g.add_edge(0, 3);
  g.add_edge(0, 3);
  g.add_edge(3, 1);
  g.add_edge(3, 2);
  g.add_edge(1, 2);
  auto inst = std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(std::move(g), {0}, {1, 2}));
  const auto report = npc::run_node_failure(scenario(inst, 1, ExplicitFailures{}), 3);
  CHECK(report.failed_paths.size() == 2);
  CHECK(report.capacity_exceeded);
  CHECK_FALSE(report.recovered);
}

TEST_CASE("batches") {
  SUBCASE("empty") {
    const auto stats = npc::batch({});
    CHECK(stats.trials == 0);
    CHECK_FALSE(stats.rate);
  }
  SUBCASE("1000 random trials within capacity") {
    const auto inst = k6_instance();
    std::vector<Scenario> trials;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      trials.push_back(scenario(inst, 2, RandomFailures{seed % 3, seed}, seed, 4));
    }
    const auto stats = npc::batch(trials);
    CHECK(stats.trials == 1000);
    CHECK(stats.within_capacity == 1000);
    REQUIRE(stats.rate);
    CHECK(*stats.rate == 1.0);
    CHECK(npc::batch(trials) == stats);
  }
  SUBCASE("mixed batch: rate is the within-capacity fraction") {
    const auto inst = k6_instance();
    std::vector<Scenario> trials;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      trials.push_back(scenario(inst, 1, RandomFailures{seed % 4 == 0 ? 2U : 1U, seed}, seed, 4));
    }
    const auto stats = npc::batch(trials);
    CHECK(stats.exceeded_capacity == 50);
    REQUIRE(stats.rate);
    CHECK(*stats.rate == doctest::Approx(150.0 / 200.0));
  }
  SUBCASE("a non-MDS code loses within-capacity trials") {
    const auto inst = k6_instance();
    npc::FieldMatrix parity(2, 2);  // second parity column is zero
    parity(0, 0) = 1;
    parity(1, 0) = 1;
    auto code = npc::code_from_parity(4, 2, gf256(), parity);
    REQUIRE_FALSE(npc::verify_mds(code));
    std::vector<Scenario> trials;
    for (std::size_t a = 0; a < 4; ++a) {
      for (std::size_t b = a + 1; b < 4; ++b) {
        trials.push_back(Scenario{inst, code, npc::random_payload(code, 4, a * 4 + b),
                                  ExplicitFailures{{a, b}}});
      }
    }
    const auto stats = npc::batch(trials);
    CHECK(stats.within_capacity == 6);
    REQUIRE(stats.rate);
    CHECK(*stats.rate < 1.0);
    CHECK(stats.recovered == 3);  // survivors span the data only for {0,3}, {1,3}, {2,3}
  }
}
