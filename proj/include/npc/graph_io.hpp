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

#include <string>
#include <string_view>

#include <json.hpp>

#include "npc/graph.hpp"

namespace npc {

// Graph documents look like
//
//   { "nodes": [{"id": "s", "role": "source"}, ...],
//     "edges": [{"id": "e0", "u": "s", "v": "a"}, ...] }
//
// Ids are unique strings; array order carries no meaning beyond assigning
// dense indices on load.

/// Throws GraphFormatError on malformed JSON, schema violations, duplicate
/// ids, dangling endpoints, or self-loops.
Graph load_graph(std::string_view text);
Graph graph_from_json(const nlohmann::json& doc);

nlohmann::json graph_to_json(const Graph& g);
/// Pretty-printed UTF-8 JSON, nodes and live edges in id order.
std::string save_graph(const Graph& g);

/// {"source", "target", "nodes": [...], "edges": [...]} using labels.
nlohmann::json path_to_json(const Graph& g, const Path& p);

}  // namespace npc
