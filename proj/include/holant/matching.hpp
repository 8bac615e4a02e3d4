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

#include <vector>

#include "holant/signature_graph.hpp"
#include "holant/weighted_graph.hpp"

namespace holant {

// Weighted perfect-matching sum by memoised search over the lowest unmatched
// vertex. Self-loops never take part in a matching. At most 64 vertices.
Scalar perfmatch_bruteforce(const WeightedGraph& g);

// forward[e] = 1: edge e points from its first endpoint u to v.
struct Orientation {
  std::vector<char> forward;
};

// Kasteleyn orientation from a spanning forest and the dual tree. In every
// component the largest face (ties: lowest face index) is the outer face;
// every other face has an odd number of edges oriented clockwise. Self-loops
// are ignored. Throws EmbeddingError if the Euler check fails.
Orientation pfaffian_orientation(const EmbeddedGraph& g);

struct FaceParity {
  std::vector<std::vector<Dart>> faces;
  std::vector<std::size_t> clockwise;  // per face
  std::vector<char> outer;             // per face
  bool ok = false;                     // every non-outer face odd
};
FaceParity check_pfaffian_orientation(const EmbeddedGraph& g, const Orientation& o);

// PerfMatch through a Pfaffian (bipartite graphs: the signed biadjacency
// determinant). The global sign comes from one structural perfect matching
// (bipartite) or from the unit-weight Pfaffian (otherwise).
Scalar perfmatch_fkt(const EmbeddedGraph& g);

// Apex-aware evaluation: every way of matching the apices (to each other or
// into the rest), times PerfMatch of the planar residual. `rotation` embeds
// g minus the apices: same vertex and edge ids as g, apex lists empty, darts
// of edges at apices absent.
Scalar perfmatch_apex(const WeightedGraph& g, const std::vector<VertexId>& apices, const Rotation& rotation);

struct FktStats {
  std::size_t fkt_calls = 0;
  std::size_t residual_vertices = 0;  // largest residual seen
};
Scalar perfmatch_apex(const WeightedGraph& g, const std::vector<VertexId>& apices, const Rotation& rotation,
                      FktStats* stats);

// The HW=1 graph behind a witnessed signature graph: weighted graph, apex set
// (the witness's excluded vertices) and the rotation of the rest.
struct ApexInstance {
  WeightedGraph graph;
  std::vector<VertexId> apices;
  Rotation rotation;
};
ApexInstance apex_instance(const SignatureGraph& g);

bool is_bipartite(const WeightedGraph& g);

}  // namespace holant
