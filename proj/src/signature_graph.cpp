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

#include "holant/signature_graph.hpp"

#include <algorithm>
#include <string>

#include "holant/error.hpp"

namespace holant {

VertexId SignatureGraph::add_vertex(Signature sig, std::string label) {
  vertices_.push_back({std::move(sig), {}, std::move(label)});
  return static_cast<VertexId>(vertices_.size() - 1);
}

EdgeId SignatureGraph::add_edge(VertexId u, VertexId v, Scalar weight) {
  if (u >= vertices_.size() || v >= vertices_.size()) throw ValidationError("add_edge: unknown vertex");
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, v, std::move(weight)});
  vertices_[u].incidence.push_back(make_dart(e, 0));
  vertices_[v].incidence.push_back(make_dart(e, 1));
  return e;
}

EdgeId SignatureGraph::add_dangling(VertexId u, Scalar weight) {
  if (u >= vertices_.size()) throw ValidationError("add_dangling: unknown vertex");
  EdgeId e = static_cast<EdgeId>(edges_.size());
  edges_.push_back({u, std::nullopt, std::move(weight)});
  vertices_[u].incidence.push_back(make_dart(e, 0));
  return e;
}

void SignatureGraph::set_incidence(VertexId v, std::vector<Dart> order) {
  auto a = order, b = vertices_[v].incidence;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw ValidationError("set_incidence: order is not a permutation of the incident darts");
  vertices_[v].incidence = std::move(order);
}

void SignatureGraph::set_signature(VertexId v, Signature s) { vertices_[v].signature = std::move(s); }

bool SignatureGraph::closed() const {
  return std::none_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.v.has_value(); });
}

std::vector<EdgeId> SignatureGraph::dangling_edges() const {
  std::vector<EdgeId> out;
  for (EdgeId e = 0; e < edges_.size(); ++e)
    if (!edges_[e].v) out.push_back(e);
  return out;
}

VertexId SignatureGraph::dart_vertex(Dart d) const {
  const Edge& e = edges_[dart_edge(d)];
  if (dart_side(d) == 0) return e.u;
  if (!e.v) throw ValidationError("dangling edge has no second dart");
  return *e.v;
}

void SignatureGraph::validate() const {
  std::vector<int> seen(2 * edges_.size(), 0);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const Vertex& x = vertices_[v];
    if (x.signature.arity() != x.incidence.size())
      throw ValidationError("vertex " + std::to_string(v) + " has signature arity " +
                            std::to_string(x.signature.arity()) + " but degree " +
                            std::to_string(x.incidence.size()));
    for (Dart d : x.incidence) {
      if (dart_edge(d) >= edges_.size()) throw ValidationError("incidence names unknown edge");
      if (dart_vertex(d) != v) throw ValidationError("incidence dart at wrong vertex");
      if (seen[d]++) throw ValidationError("dart appears twice in incidence lists");
    }
  }
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    if (!seen[make_dart(e, 0)] || (edges_[e].v && !seen[make_dart(e, 1)]))
      throw ValidationError("edge " + std::to_string(e) + " missing from an incidence list");
  }
}

EulerReport SignatureGraph::check_witness(const std::vector<EdgeId>& outer_dangling_clockwise) const {
  EulerReport bad;
  if (!witness) {
    bad.message = "no planar witness";
    return bad;
  }
  const PlanarWitness& w = *witness;
  if (w.rotation.size() != vertices_.size() || w.excluded.size() != vertices_.size()) {
    bad.message = "witness size mismatch";
    return bad;
  }
  std::vector<int> listed(2 * edges_.size(), 0);
  for (VertexId v = 0; v < vertices_.size(); ++v)
    for (Dart d : w.rotation[v]) {
      if (dart_edge(d) >= edges_.size() || dart_vertex(d) != v || w.excluded[v]) {
        bad.message = "witness lists a foreign dart at vertex " + std::to_string(v);
        return bad;
      }
      listed[d]++;
    }
  // Compact the in-plane part.
  std::vector<VertexId> vmap(vertices_.size(), UINT32_MAX);
  std::size_t nv = 0;
  for (VertexId v = 0; v < vertices_.size(); ++v)
    if (!w.excluded[v]) vmap[v] = static_cast<VertexId>(nv++);
  const bool has_hub = !outer_dangling_clockwise.empty();
  const VertexId hub = static_cast<VertexId>(nv);
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<EdgeId> emap(edges_.size(), UINT32_MAX);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    const Edge& x = edges_[e];
    int c0 = listed[make_dart(e, 0)], c1 = x.v ? listed[make_dart(e, 1)] : 0;
    if (x.v) {
      if (c0 != c1) {
        bad.message = "edge " + std::to_string(e) + " only half in the witness";
        return bad;
      }
      if (c0) {
        emap[e] = static_cast<EdgeId>(ends.size());
        ends.emplace_back(vmap[x.u], vmap[*x.v]);
      }
    } else if (c0) {
      if (!has_hub) {
        bad.message = "in-plane dangling edge without an outer order";
        return bad;
      }
      emap[e] = static_cast<EdgeId>(ends.size());
      ends.emplace_back(vmap[x.u], hub);
    }
  }
  Rotation rot(nv + (has_hub ? 1 : 0));
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    if (w.excluded[v]) continue;
    for (Dart d : w.rotation[v]) rot[vmap[v]].push_back(make_dart(emap[dart_edge(d)], dart_side(d)));
  }
  if (has_hub) {
    for (auto it = outer_dangling_clockwise.rbegin(); it != outer_dangling_clockwise.rend(); ++it) {
      EdgeId e = *it;
      if (e >= edges_.size() || edges_[e].v || emap[e] == UINT32_MAX) {
        bad.message = "outer order names an edge that is not an in-plane dangling edge";
        return bad;
      }
      rot[hub].push_back(make_dart(emap[e], 1));
    }
  }
  return euler_check(rot.size(), ends, rot);
}

PlanarWitness witness_from_directions(const SignatureGraph& g, const std::vector<char>& excluded,
                                      const std::function<std::optional<Point>(Dart)>& direction) {
  PlanarWitness w;
  w.rotation.resize(g.vertex_count());
  w.excluded = excluded;
  w.excluded.resize(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (w.excluded[v]) continue;
    std::vector<std::pair<Dart, Point>> ds;
    for (Dart d : g.vertex(v).incidence)
      if (auto p = direction(d)) ds.emplace_back(d, *p);
    w.rotation[v] = clockwise_order(std::move(ds));
  }
  return w;
}

PlanarWitness witness_from_positions(const SignatureGraph& g, const std::vector<std::optional<Point>>& pos,
                                     const std::vector<std::optional<Point>>& tip) {
  std::vector<char> excluded(g.vertex_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) excluded[v] = !pos[v].has_value();
  return witness_from_directions(g, excluded, [&](Dart d) -> std::optional<Point> {
    const auto& e = g.edge(dart_edge(d));
    const Point& here = *pos[g.dart_vertex(d)];
    if (!e.v) {
      if (dart_edge(d) >= tip.size() || !tip[dart_edge(d)]) return std::nullopt;
      return Point{tip[dart_edge(d)]->x - here.x, tip[dart_edge(d)]->y - here.y};
    }
    VertexId other = dart_side(d) == 0 ? *e.v : e.u;
    if (!pos[other]) return std::nullopt;
    return Point{pos[other]->x - here.x, pos[other]->y - here.y};
  });
}

SignatureGraph matching_signature_graph(const WeightedGraph& g) {
  SignatureGraph s;
  std::vector<std::size_t> deg(g.vertex_count, 0);
  for (const auto& e : g.edges) {
    deg[e.u]++;
    deg[e.v]++;
  }
  for (VertexId v = 0; v < g.vertex_count; ++v) s.add_vertex(Signature::hw1(deg[v]));
  for (const auto& e : g.edges) s.add_edge(e.u, e.v, e.w);
  return s;
}

WeightedGraph to_weighted_graph(const SignatureGraph& g) {
  WeightedGraph out;
  out.vertex_count = g.vertex_count();
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    if (g.vertex(v).signature.builtin_kind() != Builtin::kHw1)
      throw ValidationError("vertex " + std::to_string(v) + " is not HW=1");
  for (const auto& e : g.edges()) {
    if (!e.v) throw ValidationError("graph has dangling edges");
    out.add_edge(e.u, *e.v, e.weight);
  }
  return out;
}

}  // namespace holant
