// Copyright 2026 The holant-toolkit Authors
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

#include <utility>
#include <vector>

#include "holant/embedding.hpp"
#include "holant/scalar.hpp"

namespace holant {

// Edge-weighted multigraph. Parallel edges and self-loops are kept distinct.
struct WeightedGraph {
  struct Edge {
    VertexId u, v;
    Scalar w;
  };
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  EdgeId add_edge(VertexId u, VertexId v, Scalar w = 1) {
    edges.push_back({u, v, std::move(w)});
    return static_cast<EdgeId>(edges.size() - 1);
  }
  std::vector<std::pair<VertexId, VertexId>> ends() const {
    std::vector<std::pair<VertexId, VertexId>> out;
    out.reserve(edges.size());
    for (const auto& e : edges) out.emplace_back(e.u, e.v);
    return out;
  }
};

// A weighted graph together with a clockwise rotation system.
struct EmbeddedGraph {
  WeightedGraph graph;
  Rotation rotation;
};

}  // namespace holant
