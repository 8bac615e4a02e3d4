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

#include "holant/gate.hpp"

#include <algorithm>
#include <string>

#include "holant/error.hpp"

namespace holant {

namespace {
constexpr std::uint32_t kNone = UINT32_MAX;

bool cyclic_equal(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a[0]);
  if (it == b.end()) return false;
  std::size_t off = static_cast<std::size_t>(it - b.begin());
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[(off + i) % b.size()]) return false;
  return true;
}
}  // namespace

void Gate::validate() const {
  graph.validate();
  auto d = graph.dangling_edges();
  auto sorted = dangling;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != d) throw ValidationError("gate dangling list is not a permutation of the dangling edges");
  for (EdgeId e : dangling)
    if (!graph.edge(e).weight.is_one()) throw ValidationError("gate dangling edge with weight other than 1");
  if (has_witness()) {
    std::vector<char> seen(dangling.size() + 1, 0);
    for (std::size_t l : outer_order) {
      if (l < 1 || l > dangling.size() || seen[l]) throw ValidationError("gate outer order is not a set of labels");
      seen[l] = 1;
    }
  }
}

EulerReport Gate::check_planar() const {
  std::vector<EdgeId> outer;
  for (std::size_t l : outer_order) outer.push_back(dangling.at(l - 1));
  return graph.check_witness(outer);
}

Gate single_vertex_gate(const Signature& s) {
  Gate g;
  VertexId v = g.graph.add_vertex(s);
  for (std::size_t i = 0; i < s.arity(); ++i) {
    g.dangling.push_back(g.graph.add_dangling(v));
    g.outer_order.push_back(i + 1);
  }
  g.graph.witness = PlanarWitness{{g.graph.vertex(v).incidence}, {0}};
  return g;
}

Scalar gate_signature_value(const Gate& g, Bits x, const EnumerationOptions& opt) {
  const std::size_t d = g.arity();
  std::vector<std::int8_t> fixed(g.graph.edge_count(), -1);
  for (std::size_t i = 0; i < d; ++i) fixed[g.dangling[i]] = bit_at(x, d, i) ? 1 : 0;
  return holant_fixed(g.graph, fixed, opt);
}

Signature gate_signature(const Gate& g, const EnumerationOptions& opt) {
  g.validate();
  const std::size_t d = g.arity();
  if (d > kMaxDenseArity) throw DimensionError("gate arity too large for a dense signature");
  std::vector<Scalar> table(std::size_t{1} << d);
  for (Bits x = 0; x < table.size(); ++x) table[x] = gate_signature_value(g, x, opt);
  return Signature::dense(std::move(table));
}

Insertion insert_gate_mapped(const SignatureGraph& omega, VertexId v, const Gate& g) {
  if (v >= omega.vertex_count()) throw ValidationError("insert_gate: unknown vertex");
  const auto& host_inc = omega.vertex(v).incidence;
  if (host_inc.size() != g.arity())
    throw DimensionError("insert_gate: vertex degree " + std::to_string(host_inc.size()) + " but gate arity " +
                         std::to_string(g.arity()));
  Insertion out;
  const SignatureGraph& gg = g.graph;

  out.host_vertex.assign(omega.vertex_count(), kNone);
  for (VertexId w = 0; w < omega.vertex_count(); ++w) {
    if (w == v) continue;
    out.host_vertex[w] = out.graph.add_vertex(omega.vertex(w).signature, omega.vertex(w).label);
  }
  out.gate_vertex.assign(gg.vertex_count(), kNone);
  for (VertexId w = 0; w < gg.vertex_count(); ++w)
    out.gate_vertex[w] = out.graph.add_vertex(gg.vertex(w).signature, gg.vertex(w).label);

  // label (0-based) of each dangling gate edge
  std::vector<std::uint32_t> label_of(gg.edge_count(), kNone);
  for (std::size_t i = 0; i < g.dangling.size(); ++i) label_of[g.dangling[i]] = static_cast<std::uint32_t>(i);
  // host dart at v -> position
  std::vector<std::uint32_t> host_pos(2 * omega.edge_count(), kNone);
  for (std::size_t i = 0; i < host_inc.size(); ++i) host_pos[host_inc[i]] = static_cast<std::uint32_t>(i);

  auto endpoint_for = [&](Dart d) -> VertexId {
    // New endpoint of host dart d.
    VertexId w = omega.dart_vertex(d);
    if (w != v) return out.host_vertex[w];
    EdgeId ge = g.dangling[host_pos[d]];
    return out.gate_vertex[gg.edge(ge).u];
  };

  // Host edges keep their ids. Build them without touching incidences, then
  // assign incidences explicitly.
  std::vector<SignatureGraph::Edge> new_edges;
  for (EdgeId e = 0; e < omega.edge_count(); ++e) {
    const auto& he = omega.edge(e);
    Scalar w = he.weight;
    for (unsigned side = 0; side < (he.v ? 2u : 1u); ++side) {
      Dart d = make_dart(e, side);
      if (omega.dart_vertex(d) == v) w *= gg.edge(g.dangling[host_pos[d]]).weight;
    }
    SignatureGraph::Edge ne{endpoint_for(make_dart(e, 0)),
                            he.v ? std::optional<VertexId>(endpoint_for(make_dart(e, 1))) : std::nullopt, w};
    new_edges.push_back(ne);
  }
  out.gate_edge.assign(gg.edge_count(), kNone);
  for (EdgeId e = 0; e < gg.edge_count(); ++e) {
    if (label_of[e] != kNone) continue;
    const auto& ge = gg.edge(e);
    out.gate_edge[e] = static_cast<EdgeId>(new_edges.size());
    new_edges.push_back({out.gate_vertex[ge.u], out.gate_vertex[*ge.v], ge.weight});
  }
  // Materialize edges. add_edge appends incidence darts, so we rebuild the
  // incidence lists afterwards.
  for (const auto& ne : new_edges) {
    if (ne.v) out.graph.add_edge(ne.u, *ne.v, ne.weight);
    else out.graph.add_dangling(ne.u, ne.weight);
  }

  auto map_gate_dart = [&](Dart d) -> Dart {
    EdgeId e = dart_edge(d);
    if (label_of[e] == kNone) return make_dart(out.gate_edge[e], dart_side(d));
    return host_inc[label_of[e]];  // host edge ids unchanged
  };
  for (VertexId w = 0; w < omega.vertex_count(); ++w)
    if (w != v) out.graph.set_incidence(out.host_vertex[w], omega.vertex(w).incidence);
  for (VertexId w = 0; w < gg.vertex_count(); ++w) {
    std::vector<Dart> inc;
    for (Dart d : gg.vertex(w).incidence) inc.push_back(map_gate_dart(d));
    out.graph.set_incidence(out.gate_vertex[w], inc);
  }

  // Witness splice.
  if (omega.witness && gg.witness && !omega.witness->excluded[v]) {
    std::vector<std::size_t> host_labels;
    for (Dart d : omega.witness->rotation[v]) host_labels.push_back(host_pos[d] + 1);
    if (cyclic_equal(host_labels, g.outer_order)) {
      PlanarWitness w;
      w.rotation.resize(out.graph.vertex_count());
      w.excluded.assign(out.graph.vertex_count(), 0);
      for (VertexId x = 0; x < omega.vertex_count(); ++x) {
        if (x == v) continue;
        w.rotation[out.host_vertex[x]] = omega.witness->rotation[x];
        w.excluded[out.host_vertex[x]] = omega.witness->excluded[x];
      }
      for (VertexId x = 0; x < gg.vertex_count(); ++x) {
        for (Dart d : gg.witness->rotation[x]) w.rotation[out.gate_vertex[x]].push_back(map_gate_dart(d));
        w.excluded[out.gate_vertex[x]] = gg.witness->excluded[x];
      }
      out.graph.witness = std::move(w);
      out.planar = true;
    }
  }
  return out;
}

SignatureGraph insert_gate(const SignatureGraph& omega, VertexId v, const Gate& g) {
  return insert_gate_mapped(omega, v, g).graph;
}

Gate insert_gate(const Gate& host, VertexId v, const Gate& g) {
  Gate out;
  auto ins = insert_gate_mapped(host.graph, v, g);
  out.graph = std::move(ins.graph);
  out.dangling = host.dangling;
  out.outer_order = host.outer_order;
  return out;
}

Scalar LinearCombination::evaluate(Bits x, const EnumerationOptions& opt) const {
  Scalar total = 0;
  for (const auto& t : terms) {
    if (t.coefficient.is_zero()) continue;
    Scalar v = std::holds_alternative<Signature>(t.constituent)
                   ? std::get<Signature>(t.constituent).eval(x)
                   : gate_signature_value(std::get<Gate>(t.constituent), x, opt);
    total += t.coefficient * v;
  }
  return total;
}

void LinearCombination::validate() const {
  for (const auto& t : terms) {
    std::size_t a = std::holds_alternative<Signature>(t.constituent) ? std::get<Signature>(t.constituent).arity()
                                                                       : std::get<Gate>(t.constituent).arity();
    if (a != target_arity) throw DimensionError("combination constituent arity differs from target arity");
  }
  if (target && target->arity() != target_arity) throw DimensionError("combination target arity mismatch");
}

std::vector<Branch> expand_combination(const SignatureGraph& omega,
                                       const std::vector<std::pair<VertexId, LinearCombination>>& sites) {
  for (const auto& [v, comb] : sites) {
    comb.validate();
    if (v >= omega.vertex_count()) throw ValidationError("expand_combination: unknown site vertex");
    const Signature& s = omega.vertex(v).signature;
    if (s.arity() != comb.target_arity)
      throw DimensionError("expand_combination: site arity " + std::to_string(s.arity()) + " but combination arity " +
                           std::to_string(comb.target_arity));
    if (comb.target && s.arity() <= 16 && !same_values(s, *comb.target))
      throw ValidationError("expand_combination: site vertex does not carry the combination's target");
    if (comb.terms.empty()) throw ValidationError("expand_combination: empty combination");
  }
  const std::size_t k = sites.size();
  std::vector<Branch> out;
  std::vector<std::size_t> theta(k, 0);
  while (true) {
    Branch b;
    b.coefficient = 1;
    b.theta = theta;
    b.gate_vertices.resize(k);
    SignatureGraph g = omega;
    // cur[v] = current id of original vertex v
    std::vector<VertexId> cur(omega.vertex_count());
    for (VertexId v = 0; v < cur.size(); ++v) cur[v] = v;
    for (std::size_t s = 0; s < k; ++s) {
      const auto& term = sites[s].second.terms[theta[s]];
      b.coefficient *= term.coefficient;
      const VertexId site = cur[sites[s].first];
      if (std::holds_alternative<Signature>(term.constituent)) {
        g.set_signature(site, std::get<Signature>(term.constituent));
        continue;
      }
      auto ins = insert_gate_mapped(g, site, std::get<Gate>(term.constituent));
      for (auto& c : cur) c = c == kNone ? kNone : ins.host_vertex[c];
      for (std::size_t t = 0; t < s; ++t)
        for (auto& gv : b.gate_vertices[t]) gv = ins.host_vertex[gv];
      b.gate_vertices[s] = ins.gate_vertex;
      g = std::move(ins.graph);
    }
    b.graph = std::move(g);
    out.push_back(std::move(b));
    std::size_t i = 0;
    while (i < k && ++theta[i] == sites[i].second.terms.size()) theta[i++] = 0;
    if (i == k) break;
  }
  return out;
}

}  // namespace holant
