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

#include "npc/graph_io.hpp"

#include <stdexcept>

#include "npc/errors.hpp"

namespace npc {

using nlohmann::json;

namespace {

const json& member(const json& obj, const char* key, const char* where) {
  if (!obj.is_object()) {
    throw GraphFormatError(std::string(where) + " must be an object");
  }
  auto it = obj.find(key);
  if (it == obj.end()) {
    throw GraphFormatError(std::string(where) + " is missing \"" + key + "\"");
  }
  return *it;
}

std::string string_member(const json& obj, const char* key, const char* where) {
  const json& v = member(obj, key, where);
  if (!v.is_string()) {
    throw GraphFormatError(std::string(where) + "." + key + " must be a string");
  }
  auto s = v.get<std::string>();
  if (s.empty()) {
    throw GraphFormatError(std::string(where) + "." + key + " must be non-empty");
  }
  return s;
}

}  // namespace

Graph graph_from_json(const json& doc) {
  const json& nodes = member(doc, "nodes", "graph");
  const json& edges = member(doc, "edges", "graph");
  if (!nodes.is_array() || !edges.is_array()) {
    throw GraphFormatError("graph.nodes and graph.edges must be arrays");
  }

  Graph g;
  for (const json& n : nodes) {
    auto id = string_member(n, "id", "node");
    auto role_text = string_member(n, "role", "node");
    Role role;
    try {
      role = parse_role(role_text);
    } catch (const std::invalid_argument& e) {
      throw GraphFormatError(e.what());
    }
    if (g.find_node(id)) throw GraphFormatError("duplicate node id '" + id + "'");
    g.add_node(role, id);
  }
  for (const json& e : edges) {
    auto id = string_member(e, "id", "edge");
    auto u = string_member(e, "u", "edge");
    auto v = string_member(e, "v", "edge");
    auto nu = g.find_node(u);
    auto nv = g.find_node(v);
    if (!nu || !nv) {
      throw GraphFormatError("edge '" + id + "' references unknown node '" +
                             (nu ? v : u) + "'");
    }
    if (g.find_edge(id)) throw GraphFormatError("duplicate edge id '" + id + "'");
    if (*nu == *nv) throw GraphFormatError("edge '" + id + "' is a self-loop");
    g.add_edge(*nu, *nv, id);
  }
  return g;
}

Graph load_graph(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw GraphFormatError(std::string("invalid JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

json graph_to_json(const Graph& g) {
  json nodes = json::array();
  for (NodeId v = 0; v < g.node_count(); ++v) {
    nodes.push_back({{"id", g.label(v)}, {"role", to_string(g.role(v))}});
  }
  json edges = json::array();
  for (EdgeId e : g.edge_ids()) {
    const Edge& ed = g.edge(e);
    edges.push_back(
        {{"id", ed.label}, {"u", g.label(ed.u)}, {"v", g.label(ed.v)}});
  }
  return {{"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

std::string save_graph(const Graph& g) { return graph_to_json(g).dump(2); }

json path_to_json(const Graph& g, const Path& p) {
  json nodes = json::array();
  for (NodeId v : path_nodes(g, p)) nodes.push_back(g.label(v));
  json edges = json::array();
  for (EdgeId e : p.edges) edges.push_back(g.edge(e).label);
  return {{"source", g.label(p.source)},
          {"target", g.label(p.target)},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

}  // namespace npc
