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

#include <stdexcept>
#include <string>

#include "npc/errors.hpp"
#include "npc/feasibility.hpp"
#include "npc/graph.hpp"
#include "npc/graph_io.hpp"

using npc::Graph;
using npc::Role;

namespace {

std::size_t degree_sum(const Graph& g) {
  std::size_t sum = 0;
  for (npc::NodeId v = 0; v < g.node_count(); ++v) sum += g.degree(v);
  return sum;
}

}  // namespace

TEST_CASE("mutation and queries") {
  Graph g;
  const auto a = g.add_node();
  const auto b = g.add_node(Role::source, "b");
  const auto e = g.add_edge(a, b);
  CHECK(g.degree(a) == 1);
  CHECK(g.degree(b) == 1);
  CHECK(g.label(a) == "v0");
  CHECK(g.edge(e).label == "e0");
  CHECK(g.role(b) == Role::source);
  CHECK(g.find_node("b") == b);
  CHECK(g.adjacent(a, b));
  CHECK(degree_sum(g) == 2 * g.edge_count());
}

TEST_CASE("triangle and parallel edges") {
  Graph g;
  for (int i = 0; i < 3; ++i) g.add_node();
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 0);
  for (npc::NodeId v = 0; v < 3; ++v) CHECK(g.degree(v) == 2);
  g.add_edge(0, 1);
  CHECK(g.degree(0) == 3);
  CHECK(g.neighbors(0).size() == 2);
  CHECK(degree_sum(g) == 2 * g.edge_count());
}

TEST_CASE("invalid mutations") {
  Graph g;
  g.add_node(Role::relay, "x");
  CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(g.add_edge(0, 7), std::invalid_argument);
  CHECK_THROWS_AS(g.add_node(Role::relay, "x"), std::invalid_argument);
  CHECK_THROWS_AS(g.remove_edge(3), std::invalid_argument);
}

TEST_CASE("remove_edge retires the id") {
  Graph g;
  for (int i = 0; i < 3; ++i) g.add_node();
  const auto e0 = g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.remove_edge(e0);
  CHECK_FALSE(g.has_edge(e0));
  CHECK(g.edge_count() == 1);
  CHECK(g.degree(0) == 0);
  const auto e2 = g.add_edge(0, 1);
  CHECK(e2 == 2);
  CHECK(degree_sum(g) == 2 * g.edge_count());
  CHECK_THROWS_AS(g.remove_edge(e0), std::invalid_argument);
}

TEST_CASE("paths") {
  Graph g;
  for (int i = 0; i < 4; ++i) g.add_node();
  const auto a = g.add_edge(0, 1);
  const auto b = g.add_edge(1, 2);
  const auto c = g.add_edge(2, 3);
  const auto d = g.add_edge(3, 1);
  npc::Path p{0, 3, {a, b, c}};
  CHECK(npc::is_simple_path(g, p));
  CHECK(npc::path_nodes(g, p) == std::vector<npc::NodeId>{0, 1, 2, 3});
  CHECK_FALSE(npc::is_simple_path(g, npc::Path{0, 1, {a, b, c, d}}));  // revisits node 1
  CHECK_FALSE(npc::is_simple_path(g, npc::Path{0, 3, {a, c}}));
  npc::DisjointPathSet set{{npc::Path{0, 3, {a, d}}, npc::Path{1, 3, {b, c}}}};
  CHECK(npc::pairwise_edge_disjoint(set));
  set.paths.push_back(npc::Path{0, 2, {a, b}});
  CHECK_FALSE(npc::pairwise_edge_disjoint(set));
}

TEST_CASE("JSON round trip") {
  const auto fixture = npc::bridged_cubic_fixture();
  const std::string text = npc::save_graph(fixture.graph);
  const Graph back = npc::load_graph(text);
  CHECK(back.node_count() == 10);
  CHECK(back.edge_count() == 15);
  CHECK(npc::save_graph(back) == text);
  CHECK(back.role(*back.find_node("a1")) == Role::source);
  CHECK(back.nodes_with_role(Role::receiver).size() == 3);
}

TEST_CASE("JSON errors") {
  auto bad = [](const std::string& text) {
    CHECK_THROWS_AS(npc::load_graph(text), npc::GraphFormatError);
  };
  bad("not json");
  bad("{}");
  bad(R"({"nodes": [{"id": "a", "role": "relay"}], "edges": [{"id": "e", "u": "a", "v": "b"}]})");
  bad(R"({"nodes": [{"id": "a", "role": "relay"}, {"id": "a", "role": "relay"}], "edges": []})");
  bad(R"({"nodes": [{"id": "a", "role": "boss"}], "edges": []})");
  bad(R"({"nodes": [{"id": "a", "role": "relay"}], "edges": [{"id": "e", "u": "a", "v": "a"}]})");
  bad(R"({"nodes": [{"id": "a", "role": "relay"}, {"id": "b", "role": "relay"}],
          "edges": [{"id": "e", "u": "a", "v": "b"}, {"id": "e", "u": "a", "v": "b"}]})");
}

TEST_CASE("JSON ignores key and array order") {
  const Graph g = npc::load_graph(
      R"({"edges": [{"v": "b", "u": "a", "id": "x"}, {"id": "y", "u": "b", "v": "a"}],
          "nodes": [{"role": "receiver", "id": "b"}, {"id": "a", "role": "source"}]})");
  CHECK(g.node_count() == 2);
  CHECK(g.edge_count() == 2);
  CHECK(g.degree(*g.find_node("a")) == 2);
}
