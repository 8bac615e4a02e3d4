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

#include <optional>
#include <variant>
#include <vector>

#include "holant/holant.hpp"
#include "holant/signature_graph.hpp"

namespace holant {

// A signature graph with labelled dangling edges. Label i (1-based) is
// dangling[i-1]; the gate's input bit i is the state of that edge.
struct Gate {
  SignatureGraph graph;
  std::vector<EdgeId> dangling;
  // Clockwise labels of the in-plane dangling edges around the drawing; only
  // meaningful when graph.witness is set.
  std::vector<std::size_t> outer_order;

  std::size_t arity() const { return dangling.size(); }
  bool has_witness() const { return graph.witness.has_value(); }
  void validate() const;
  EulerReport check_planar() const;
};

// Gate consisting of one vertex carrying s, with s.arity() dangling edges in
// incidence order and outer order 1..d.
Gate single_vertex_gate(const Signature& s);

Scalar gate_signature_value(const Gate& g, Bits x, const EnumerationOptions& opt = {});
Signature gate_signature(const Gate& g, const EnumerationOptions& opt = {});

struct Insertion {
  SignatureGraph graph;
  std::vector<VertexId> host_vertex;  // old host id -> new id (UINT32_MAX for the replaced vertex)
  std::vector<VertexId> gate_vertex;  // gate vertex id -> new id
  std::vector<EdgeId> gate_edge;      // gate edge id -> new id (UINT32_MAX for dangling edges)
  bool planar = false;                // witness carried over
};

// Replaces v by a copy of g; the i-th incident edge of v takes the place of
// dangling edge i and keeps its weight. Host edge ids are unchanged. When both
// sides carry witnesses and the clockwise order at v matches the gate's outer
// order, the rotations are spliced; otherwise the result has no witness.
Insertion insert_gate_mapped(const SignatureGraph& omega, VertexId v, const Gate& g);
SignatureGraph insert_gate(const SignatureGraph& omega, VertexId v, const Gate& g);
// Insertion into a gate host; its dangling labels and outer order survive.
Gate insert_gate(const Gate& host, VertexId v, const Gate& g);

struct CombinationTerm {
  Scalar coefficient;
  std::variant<Signature, Gate> constituent;
};

struct LinearCombination {
  std::vector<CombinationTerm> terms;
  std::size_t target_arity = 0;
  std::optional<Signature> target;

  std::size_t size() const { return terms.size(); }
  // sum_j c_j * f_j(x); gate constituents are evaluated by enumeration.
  Scalar evaluate(Bits x, const EnumerationOptions& opt = {}) const;
  void validate() const;
};

struct Branch {
  Scalar coefficient;
  SignatureGraph graph;
  std::vector<std::size_t> theta;                 // chosen term per site
  std::vector<std::vector<VertexId>> gate_vertices;  // per site, ids of inserted gate vertices
};

// One branch per theta in [t_1] x ... x [t_k]; sum coefficient * Holant(branch)
// equals Holant(omega).
std::vector<Branch> expand_combination(const SignatureGraph& omega,
                                       const std::vector<std::pair<VertexId, LinearCombination>>& sites);

}  // namespace holant
