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

#include <memory>
#include <vector>

#include "npc/construction.hpp"
#include "npc/feasibility.hpp"

namespace fixture {

/// H(3,10) with every edge doubled (each link split into two unit
/// connections): 6-edge-connected, one sender v0 and six receivers.
inline std::shared_ptr<const npc::ProtectionInstance> doubled_harary_instance() {
  const npc::Graph base = npc::harary(10, 3);
  npc::Graph g;
  for (npc::NodeId v = 0; v < base.node_count(); ++v) g.add_node();
  for (auto e : base.edge_ids()) {
    g.add_edge(base.edge(e).u, base.edge(e).v);
    g.add_edge(base.edge(e).u, base.edge(e).v);
  }
  return std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(std::move(g), {0}, {1, 3, 4, 6, 7, 9}));
}

/// H(3,10), sender v0, receivers v3, v5, v8.
inline std::shared_ptr<const npc::ProtectionInstance> harary_instance() {
  return std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(npc::harary(10, 3), {0}, {3, 5, 8}));
}

}  // namespace fixture
