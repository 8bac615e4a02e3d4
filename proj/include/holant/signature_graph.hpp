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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holant/embedding.hpp"
#include "holant/signature.hpp"
#include "holant/weighted_graph.hpp"

namespace holant {

// Witness of planarity for the "in-plane" part of a graph: the clockwise
// rotation restricted to in-plane darts. Excluded vertices (apices) and edges
// whose darts are absent from the rotation are off-plane. Dangling edges are
// in-plane iff their dart is listed.
struct PlanarWitness {
  Rotation rotation;
  std::vector<char> excluded;
};

class SignatureGraph {
 public:
  struct Edge {
    VertexId u;
    std::optional<VertexId> v;  // empty: dangling
    Scalar weight;
  };
  struct Vertex {
    Signature signature;
    std::vector<Dart> incidence;
    std::string label;
  };

  VertexId add_vertex(Signature sig, std::string label = "");
  // Appends the new darts to the incidence lists of u (then v).
  EdgeId add_edge(VertexId u, VertexId v, Scalar weight = 1);
  EdgeId add_dangling(VertexId u, Scalar weight = 1);

  void set_incidence(VertexId v, std::vector<Dart> order);
  void set_signature(VertexId v, Signature s);
  void set_weight(EdgeId e, Scalar w) { edges_[e].weight = std::move(w); }
  void set_label(VertexId v, std::string label) { vertices_[v].label = std::move(label); }

  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const Vertex& vertex(VertexId v) const { return vertices_[v]; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool is_dangling(EdgeId e) const { return !edges_[e].v.has_value(); }
  bool closed() const;
  std::vector<EdgeId> dangling_edges() const;
  // Endpoint at which dart d sits.
  VertexId dart_vertex(Dart d) const;

  // Arity/incidence consistency. Throws ValidationError.
  void validate() const;

  std::optional<PlanarWitness> witness;

  // Euler test of the witness. In-plane dangling edges are joined to a hub
  // vertex standing for the outer face; `outer_dangling_clockwise` lists them
  // in clockwise order around the drawing (empty for closed graphs).
  EulerReport check_witness(const std::vector<EdgeId>& outer_dangling_clockwise = {}) const;

 private:
  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

// Builds a witness from a drawing: `direction(d)` gives the direction in which
// dart d leaves its vertex, or nothing for an off-plane dart. Excluded vertices
// list no darts.
PlanarWitness witness_from_directions(const SignatureGraph& g, const std::vector<char>& excluded,
                                      const std::function<std::optional<Point>(Dart)>& direction);

// Straight-line variant: pos[v] for every in-plane vertex (nullopt = excluded),
// tip[e] for in-plane dangling edges.
PlanarWitness witness_from_positions(const SignatureGraph& g, const std::vector<std::optional<Point>>& pos,
                                     const std::vector<std::optional<Point>>& tip);

// HW=1 at every vertex, one edge per graph edge.
SignatureGraph matching_signature_graph(const WeightedGraph& g);

// Inverse of matching_signature_graph for closed all-HW=1 graphs; vertex and
// edge ids are preserved. Throws ValidationError otherwise.
WeightedGraph to_weighted_graph(const SignatureGraph& g);

}  // namespace holant
