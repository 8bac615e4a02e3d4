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


#include "holant/genus.hpp"

#include <algorithm>
#include <map>

#include "holant/error.hpp"
#include "holant/matchgates.hpp"
#include "holant/matching.hpp"
#include "holant/parallel.hpp"

namespace holant {

namespace {

struct Chord {
  std::size_t a, b;  // exit slot, entry slot
};

struct Crossing {
  std::size_t c1, c2;
  Point p;
};

struct Arrangement {
  std::vector<Point> slot;
  std::vector<Crossing> crossings;
  std::vector<std::vector<std::size_t>> along;  // per chord, crossings from a to b
};

Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }

bool interleaved(const Chord& p, const Chord& q) {
  std::size_t lo = std::min(p.a, p.b), hi = std::max(p.a, p.b);
  bool in1 = lo < q.a && q.a < hi, in2 = lo < q.b && q.b < hi;
  return in1 != in2;
}

// Slots on a convex curve in clockwise order, chords straight. Spacings are
// varied until no three chords meet in a point.
Arrangement arrange(std::size_t n, const std::vector<Chord>& chords) {
  for (long s = 1; s < 64; ++s) {
    Arrangement A;
    for (std::size_t k = 0; k < n; ++k) {
      long t = static_cast<long>(k) * s + static_cast<long>(k * k);
      A.slot.push_back({Rational(-t), Rational(t * t)});
    }
    A.along.assign(chords.size(), {});
    std::vector<std::vector<std::pair<Rational, std::size_t>>> at(chords.size());
    for (std::size_t i = 0; i < chords.size(); ++i)
      for (std::size_t j = i + 1; j < chords.size(); ++j) {
        if (!interleaved(chords[i], chords[j])) continue;
        const Point &p1 = A.slot[chords[i].a], &p2 = A.slot[chords[i].b];
        const Point &p3 = A.slot[chords[j].a], &p4 = A.slot[chords[j].b];
        Point d1 = sub(p2, p1), d2 = sub(p4, p3);
        Rational den = cross(d1, d2);
        Rational lam = cross(sub(p3, p1), d2) / den;
        Rational mu = cross(sub(p3, p1), d1) / den;
        std::size_t id = A.crossings.size();
        A.crossings.push_back({i, j, Point{p1.x + lam * d1.x, p1.y + lam * d1.y}});
        at[i].emplace_back(lam, id);
        at[j].emplace_back(mu, id);
      }
    bool ok = true;
    for (std::size_t c = 0; c < chords.size() && ok; ++c) {
      auto& v = at[c];
      std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
      for (std::size_t k = 0; k + 1 < v.size(); ++k)
        if (v[k].first == v[k + 1].first) ok = false;
      for (auto& [l, id] : v) A.along[c].push_back(id);
    }
    if (ok) return A;
  }
  throw Error("chord arrangement: could not avoid concurrent chords");
}

// Adds the arrangement to g. slot_vertex[k]: the vertex the chord reaches at
// slot k, or nothing for a dangling end. first_weight[c]: weight of the
// segment leaving the exit end. slot_dart[k] receives the dart at the slot
// vertex (or the dangling edge's dart). Crossing and relay vertices get
// their incidence set; their ids are appended to `added`.
void add_arrangement(SignatureGraph& g, const Arrangement& A, const std::vector<Chord>& chords,
                     const std::vector<std::optional<VertexId>>& slot_vertex, const std::vector<Scalar>& first_weight,
                     std::vector<Dart>& slot_dart, std::vector<VertexId>& added) {
  slot_dart.assign(A.slot.size(), 0);
  std::vector<VertexId> xv(A.crossings.size());
  for (std::size_t i = 0; i < A.crossings.size(); ++i) {
    xv[i] = g.add_vertex(Signature::pass());
    added.push_back(xv[i]);
  }
  std::vector<std::vector<std::pair<Dart, Point>>> darts(A.crossings.size());
  for (std::size_t c = 0; c < chords.size(); ++c) {
    const auto& path = A.along[c];
    const std::size_t a = chords[c].a, b = chords[c].b;
    if (path.empty()) {
      if (slot_vertex[a] && slot_vertex[b]) {
        EdgeId e = g.add_edge(*slot_vertex[a], *slot_vertex[b], first_weight[c]);
        slot_dart[a] = make_dart(e, 0);
        slot_dart[b] = make_dart(e, 1);
        continue;
      }
      // Relay vertex carrying the identity on two edges.
      VertexId r = g.add_vertex(Signature::dense({1, 0, 0, 1}), "relay");
      added.push_back(r);
      EdgeId e1 = slot_vertex[a] ? g.add_edge(*slot_vertex[a], r, first_weight[c]) : g.add_dangling(r);
      EdgeId e2 = slot_vertex[b] ? g.add_edge(r, *slot_vertex[b]) : g.add_dangling(r);
      if (!slot_vertex[a] && !first_weight[c].is_one()) throw ValidationError("weighted dangling chord end");
      slot_dart[a] = make_dart(e1, 0);
      slot_dart[b] = slot_vertex[b] ? make_dart(e2, 1) : make_dart(e2, 0);
      Dart ra = slot_vertex[a] ? make_dart(e1, 1) : make_dart(e1, 0);
      Dart rb = slot_vertex[b] ? make_dart(e2, 0) : make_dart(e2, 0);
      g.set_incidence(r, {ra, rb});
      continue;
    }
    auto point_of = [&](std::size_t k) { return A.crossings[path[k]].p; };
    // Segment 0: exit end to first crossing.
    {
      VertexId x = xv[path[0]];
      Dart at_x;
      if (slot_vertex[a]) {
        EdgeId e = g.add_edge(*slot_vertex[a], x, first_weight[c]);
        slot_dart[a] = make_dart(e, 0);
        at_x = make_dart(e, 1);
      } else {
        if (!first_weight[c].is_one()) throw ValidationError("weighted dangling chord end");
        EdgeId e = g.add_dangling(x);
        slot_dart[a] = make_dart(e, 0);
        at_x = make_dart(e, 0);
      }
      darts[path[0]].push_back({at_x, sub(A.slot[a], point_of(0))});
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      EdgeId e = g.add_edge(xv[path[k]], xv[path[k + 1]]);
      darts[path[k]].push_back({make_dart(e, 0), sub(point_of(k + 1), point_of(k))});
      darts[path[k + 1]].push_back({make_dart(e, 1), sub(point_of(k), point_of(k + 1))});
    }
    {
      std::size_t k = path.size() - 1;
      VertexId x = xv[path[k]];
      Dart at_x;
      if (slot_vertex[b]) {
        EdgeId e = g.add_edge(x, *slot_vertex[b]);
        slot_dart[b] = make_dart(e, 1);
        at_x = make_dart(e, 0);
      } else {
        EdgeId e = g.add_dangling(x);
        slot_dart[b] = make_dart(e, 0);
        at_x = make_dart(e, 0);
      }
      darts[path[k]].push_back({at_x, sub(A.slot[b], point_of(k))});
    }
  }
  for (std::size_t i = 0; i < A.crossings.size(); ++i) g.set_incidence(xv[i], clockwise_order(darts[i]));
}

// Cap gate from slot chords; dangling edges in slot order.
Gate chord_gate(std::size_t n, const std::vector<Chord>& chords) {
  Arrangement A = arrange(n, chords);
  Gate gate;
  std::vector<Dart> slot_dart;
  std::vector<VertexId> added;
  add_arrangement(gate.graph, A, chords, std::vector<std::optional<VertexId>>(n),
                  std::vector<Scalar>(chords.size(), Scalar(1)), slot_dart, added);
  for (std::size_t k = 0; k < n; ++k) {
    gate.dangling.push_back(dart_edge(slot_dart[k]));
    gate.outer_order.push_back(k + 1);
  }
  PlanarWitness w;
  for (VertexId v = 0; v < gate.graph.vertex_count(); ++v) w.rotation.push_back(gate.graph.vertex(v).incidence);
  w.excluded.assign(gate.graph.vertex_count(), 0);
  gate.graph.witness = std::move(w);
  return gate;
}

// Exit/entry slots of a grated cross cap; bunches reversed at the entry side.
std::vector<Chord> grated_chords(const std::vector<std::size_t>& sizes) {
  std::size_t half = 0;
  for (auto d : sizes) half += d;
  std::vector<Chord> out;
  std::size_t off = 0;
  for (auto d : sizes) {
    for (std::size_t t = 0; t < d; ++t) out.push_back({off + t, half + off + (d - 1 - t)});
    off += d;
  }
  return out;
}

Signature table_of(std::size_t arity, const std::function<bool(const std::vector<int>&)>& pred) {
  if (arity > kMaxDenseArity) throw DimensionError("cap target arity too large");
  std::vector<Scalar> t(std::size_t{1} << arity);
  std::vector<int> bits(arity);
  for (Bits x = 0; x < t.size(); ++x) {
    for (std::size_t i = 0; i < arity; ++i) bits[i] = bit_at(x, arity, i);
    t[x] = pred(bits) ? Scalar(1) : Scalar(0);
  }
  return Signature::dense(std::move(t));
}

struct Cap {
  std::vector<std::size_t> bunches;
  const CapExpansion* expansion;
};

std::vector<Cap> caps_of(const PlaneModel& pm, const CapExpansion& grid, const CapExpansion& cross) {
  std::vector<Cap> caps;
  for (std::size_t h = 0; h < pm.handles(); ++h) caps.push_back({{2 * h, 2 * h + 1}, &grid});
  for (std::size_t c = 0; c < pm.cross_caps(); ++c) caps.push_back({{2 * pm.handles() + c}, &cross});
  return caps;
}

}  // namespace

std::string side_pattern_name(SidePattern p) {
  switch (p) {
    case SidePattern::kOrientable: return "ORIENTABLE";
    case SidePattern::kPlusProjective: return "PLUS_PROJECTIVE";
    case SidePattern::kPlusKlein: return "PLUS_KLEIN";
  }
  return "?";
}

std::optional<SidePattern> side_pattern_from_name(const std::string& s) {
  for (auto p : {SidePattern::kOrientable, SidePattern::kPlusProjective, SidePattern::kPlusKlein})
    if (side_pattern_name(p) == s) return p;
  return std::nullopt;
}

std::size_t PlaneModel::cross_caps() const {
  return pattern == SidePattern::kOrientable ? 0 : pattern == SidePattern::kPlusProjective ? 1 : 2;
}

std::size_t PlaneModel::handles() const {
  if (bunches.size() < cross_caps() || (bunches.size() - cross_caps()) % 2)
    throw ValidationError("plane model: bunch count does not fit the side pattern");
  return (bunches.size() - cross_caps()) / 2;
}

void PlaneModel::validate() const {
  const auto& g = graph.graph;
  if (graph.rotation.size() != g.vertex_count) throw ValidationError("plane model: rotation size mismatch");
  handles();
  std::vector<int> seen(2 * g.edges.size(), 0);
  for (VertexId v = 0; v < g.vertex_count; ++v)
    for (Dart d : graph.rotation[v]) {
      if (dart_edge(d) >= g.edges.size()) throw ValidationError("plane model: unknown dart in rotation");
      const auto& e = g.edges[dart_edge(d)];
      if ((dart_side(d) ? e.v : e.u) != v) throw ValidationError("plane model: dart listed at the wrong vertex");
      if (seen[d]++) throw ValidationError("plane model: dart listed twice");
    }
  for (Dart d = 0; d < seen.size(); ++d)
    if (!seen[d]) throw ValidationError("plane model: dart missing from rotation");
  std::vector<char> used(g.edges.size(), 0);
  for (const auto& b : bunches)
    for (Dart d : b) {
      if (dart_edge(d) >= g.edges.size()) throw ValidationError("plane model: unknown bunch dart");
      if (used[dart_edge(d)]++) throw ValidationError("plane model: edge in two bunch positions");
      const auto& e = g.edges[dart_edge(d)];
      if (e.u == e.v) throw ValidationError("plane model: self-loop in a bunch");
    }
}

std::vector<Dart> boundary_slots(const PlaneModel& pm) {
  std::vector<Dart> out;
  auto exits = [&](std::size_t b) { out.insert(out.end(), pm.bunches[b].begin(), pm.bunches[b].end()); };
  auto entries_reversed = [&](std::size_t b) {
    for (auto it = pm.bunches[b].rbegin(); it != pm.bunches[b].rend(); ++it) out.push_back(dart_rev(*it));
  };
  auto entries = [&](std::size_t b) {
    for (Dart d : pm.bunches[b]) out.push_back(dart_rev(d));
  };
  const std::size_t g = pm.handles();
  for (std::size_t h = 0; h < g; ++h) {
    exits(2 * h);
    exits(2 * h + 1);
    entries_reversed(2 * h);
    entries_reversed(2 * h + 1);
  }
  for (std::size_t c = 0; c < pm.cross_caps(); ++c) {
    exits(2 * g + c);
    entries(2 * g + c);
  }
  return out;
}

Gate build_grid_cap_gate(std::size_t d1, std::size_t d2) {
  if (d1 == 0 || d2 == 0) throw ValidationError("grid cap: bunch sizes must be positive");
  const std::size_t n = 2 * (d1 + d2);
  std::vector<Chord> chords;
  for (std::size_t t = 0; t < d1; ++t) chords.push_back({t, d1 + d2 + (d1 - 1 - t)});
  for (std::size_t t = 0; t < d2; ++t) chords.push_back({d1 + t, 2 * d1 + d2 + (d2 - 1 - t)});
  return chord_gate(n, chords);
}

Gate build_cross_cap_gate(std::size_t d) {
  if (d == 0) throw ValidationError("cross cap: bunch size must be positive");
  std::vector<Chord> chords;
  for (std::size_t t = 0; t < d; ++t) chords.push_back({t, d + t});
  return chord_gate(2 * d, chords);
}

Gate build_grated_cross_cap_gate(const std::vector<std::size_t>& sizes) {
  if (sizes.empty()) throw ValidationError("grated cross cap: no bunches");
  std::size_t half = 0;
  for (auto d : sizes) {
    if (d == 0) throw ValidationError("grated cross cap: empty bunch");
    half += d;
  }
  return chord_gate(2 * half, grated_chords(sizes));
}

Signature grid_cap_target(std::size_t d1, std::size_t d2) {
  const std::size_t h = d1 + d2;
  return table_of(2 * h, [&](const std::vector<int>& x) {
    for (std::size_t t = 0; t < d1; ++t)
      if (x[h + t] != x[d1 - 1 - t]) return false;
    for (std::size_t t = 0; t < d2; ++t)
      if (x[h + d1 + t] != x[d1 + d2 - 1 - t]) return false;
    return true;
  });
}

Signature cross_cap_target(std::size_t d) {
  return table_of(2 * d, [&](const std::vector<int>& x) {
    for (std::size_t t = 0; t < d; ++t)
      if (x[d + t] != x[t]) return false;
    return true;
  });
}

Signature grated_cross_cap_target(const std::vector<std::size_t>& sizes) {
  auto chords = grated_chords(sizes);
  std::size_t n = 2 * chords.size();
  return table_of(n, [&](const std::vector<int>& x) {
    for (const auto& c : chords)
      if (x[c.a] != x[c.b]) return false;
    return true;
  });
}

CapExpansion grid_cap_expansion() {
  const Scalar h = Scalar(Rational(1, 2));
  return {{{h, {Scalar(1), Scalar(1)}},
           {h, {Scalar(-1), Scalar(1)}},
           {h, {Scalar(1), Scalar(-1)}},
           {-h, {Scalar(-1), Scalar(-1)}}}};
}

CapExpansion cross_cap_expansion() {
  const Scalar h = Scalar(Rational(1, 2));
  const Scalar i = Scalar::i();
  return {{{h * (Scalar(1) - i), {i}}, {h * (Scalar(1) + i), {-i}}}};
}

Signature contract(const CapExpansion& e, const Signature& c, const std::vector<int>& bunch_of) {
  const std::size_t n = c.arity();
  if (bunch_of.size() != n) throw DimensionError("contract: position map size differs from arity");
  std::vector<Scalar> t(std::size_t{1} << n);
  for (Bits x = 0; x < t.size(); ++x) {
    Scalar cx = c.eval(x);
    if (cx.is_zero()) continue;
    Scalar sum(0);
    for (const auto& term : e.terms) {
      Scalar f = term.coefficient;
      for (std::size_t p = 0; p < n; ++p)
        if (bunch_of[p] >= 0 && bit_at(x, n, p)) f *= term.bunch_weight.at(static_cast<std::size_t>(bunch_of[p]));
      sum += f;
    }
    t[x] = sum * cx;
  }
  return Signature::dense(std::move(t));
}

CapExpansion grated_cross_cap_expansion(const std::vector<std::size_t>& sizes) {
  const std::size_t m = sizes.size();
  if (m == 0 || m > 4) throw DimensionError("grated cross cap: 1 to 4 bunches");
  // The crossing gate multiplies by (-1)^(sum_{i<j} p_i p_j) where p is the
  // vector of bunch parities; undo it in the +-1 character basis.
  auto f = [&](std::size_t p) {
    int s = 0;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i + 1; j < m; ++j) s += ((p >> i) & 1) & ((p >> j) & 1);
    return s % 2 ? -1 : 1;
  };
  CapExpansion e;
  for (std::size_t b = 0; b < (std::size_t{1} << m); ++b) {
    long acc = 0;
    for (std::size_t p = 0; p < (std::size_t{1} << m); ++p)
      acc += f(p) * (__builtin_popcountll(b & p) % 2 ? -1 : 1);
    CapTerm t{Scalar(Rational(acc, 1L << m)), {}};
    for (std::size_t i = 0; i < m; ++i) t.bunch_weight.push_back(Scalar((b >> i) & 1 ? -1 : 1));
    e.terms.push_back(std::move(t));
  }
  Gate gate = build_grated_cross_cap_gate(sizes);
  std::vector<int> bunch_of(gate.arity(), -1);
  std::size_t off = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t t = 0; t < sizes[i]; ++t) bunch_of[off++] = static_cast<int>(i);
  Signature got = contract(e, gate_signature(gate, {64, Strategy::kSupportFirst}), bunch_of);
  if (!same_values(got, grated_cross_cap_target(sizes)))
    throw VerificationError("grated cross cap: no combination over the +-1 bunch weightings");
  return e;
}

SignatureGraph genus_constituent(const PlaneModel& pm, const std::vector<std::size_t>& theta) {
  pm.validate();
  const auto grid = grid_cap_expansion();
  const auto cross = cross_cap_expansion();
  auto caps = caps_of(pm, grid, cross);
  if (theta.size() != caps.size()) throw DimensionError("genus_constituent: one term index per cap");
  const auto& G = pm.graph.graph;
  std::vector<Scalar> bunch_factor(pm.bunches.size(), Scalar(1));
  for (std::size_t c = 0; c < caps.size(); ++c) {
    const auto& terms = caps[c].expansion->terms;
    if (theta[c] >= terms.size()) throw DimensionError("genus_constituent: term index out of range");
    for (std::size_t k = 0; k < caps[c].bunches.size(); ++k)
      bunch_factor[caps[c].bunches[k]] = terms[theta[c]].bunch_weight[k];
  }

  SignatureGraph g;
  for (VertexId v = 0; v < G.vertex_count; ++v) g.add_vertex(Signature::hw1(pm.graph.rotation[v].size()));
  std::vector<int> bunch_of_edge(G.edges.size(), -1);
  for (std::size_t b = 0; b < pm.bunches.size(); ++b)
    for (Dart d : pm.bunches[b]) bunch_of_edge[dart_edge(d)] = static_cast<int>(b);
  std::vector<Dart> new_dart(2 * G.edges.size());
  for (EdgeId e = 0; e < G.edges.size(); ++e) {
    if (bunch_of_edge[e] >= 0) continue;
    EdgeId ne = g.add_edge(G.edges[e].u, G.edges[e].v, G.edges[e].w);
    new_dart[2 * e] = make_dart(ne, 0);
    new_dart[2 * e + 1] = make_dart(ne, 1);
  }
  // Chords between boundary slots.
  auto slots = boundary_slots(pm);
  std::vector<std::size_t> slot_of(2 * G.edges.size(), SIZE_MAX);
  for (std::size_t k = 0; k < slots.size(); ++k) slot_of[slots[k]] = k;
  std::vector<Chord> chords;
  std::vector<Scalar> first_weight;
  std::vector<std::optional<VertexId>> slot_vertex(slots.size());
  for (std::size_t k = 0; k < slots.size(); ++k) {
    const auto& e = G.edges[dart_edge(slots[k])];
    slot_vertex[k] = dart_side(slots[k]) ? e.v : e.u;
  }
  for (const auto& b : pm.bunches)
    for (Dart d : b) {
      chords.push_back({slot_of[d], slot_of[dart_rev(d)]});
      EdgeId e = dart_edge(d);
      first_weight.push_back(G.edges[e].w * bunch_factor[static_cast<std::size_t>(bunch_of_edge[e])]);
    }
  Arrangement A = arrange(slots.size(), chords);
  std::vector<Dart> slot_dart;
  std::vector<VertexId> added;
  add_arrangement(g, A, chords, slot_vertex, first_weight, slot_dart, added);
  for (std::size_t k = 0; k < slots.size(); ++k) new_dart[slots[k]] = slot_dart[k];
  PlanarWitness w;
  w.rotation.resize(g.vertex_count());
  w.excluded.assign(g.vertex_count(), 0);
  for (VertexId v = 0; v < G.vertex_count; ++v) {
    std::vector<Dart> inc;
    for (Dart d : pm.graph.rotation[v]) inc.push_back(new_dart[d]);
    g.set_incidence(v, inc);
    w.rotation[v] = inc;
  }
  for (VertexId v : added) w.rotation[v] = g.vertex(v).incidence;
  g.witness = std::move(w);
  auto rep = g.check_witness();
  if (!rep.ok) throw ValidationError("plane model: drawing inconsistent with the side pattern (" + rep.message + ")");
  return g;
}

GenusResult genus_perfmatch(const PlaneModel& pm, unsigned jobs) {
  pm.validate();
  const auto grid = grid_cap_expansion();
  const auto cross = cross_cap_expansion();
  auto caps = caps_of(pm, grid, cross);
  std::vector<std::vector<std::size_t>> thetas;
  std::vector<std::size_t> theta(caps.size(), 0);
  while (true) {
    thetas.push_back(theta);
    std::size_t i = 0;
    while (i < caps.size() && ++theta[i] == caps[i].expansion->terms.size()) theta[i++] = 0;
    if (i == caps.size()) break;
  }
  std::vector<Scalar> values(thetas.size());
  std::vector<std::size_t> sizes(thetas.size()), crossings(thetas.size());
  parallel_for(thetas.size(), jobs, [&](std::size_t t) {
    SignatureGraph c = genus_constituent(pm, thetas[t]);
    crossings[t] = c.vertex_count() - pm.graph.graph.vertex_count;
    SignatureGraph flat = flatten(c);
    auto inst = apex_instance(flat);
    sizes[t] = flat.vertex_count();
    Scalar coef(1);
    for (std::size_t k = 0; k < caps.size(); ++k) coef *= caps[k].expansion->terms[thetas[t][k]].coefficient;
    values[t] = coef * perfmatch_fkt({std::move(inst.graph), std::move(inst.rotation)});
  });
  GenusResult r;
  r.value = Scalar(0);
  for (const auto& v : values) r.value += v;
  r.constituents = thetas.size();
  r.crossings = crossings.empty() ? 0 : crossings[0];
  r.flat_vertices = sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
  bool real_weights = true;
  for (const auto& e : pm.graph.graph.edges) real_weights = real_weights && e.w.is_real();
  if (real_weights && !r.value.is_real()) throw VerificationError("genus_perfmatch: imaginary parts did not cancel");
  return r;
}

namespace {

// Model from integer positions: stub directions for bunch darts.
struct ModelBuilder {
  PlaneModel pm;
  std::vector<Point> pos;
  std::map<Dart, Point> stub;

  VertexId vertex(long x, long y) {
    pos.push_back({Rational(x), Rational(y)});
    return static_cast<VertexId>(pm.graph.graph.vertex_count++);
  }
  EdgeId edge(VertexId u, VertexId v) { return pm.graph.graph.add_edge(u, v); }
  // Bunch edge u -> v leaving u in direction (ux, uy), entering v from (vx, vy).
  Dart bunch_edge(VertexId u, VertexId v, long ux, long uy, long vx, long vy) {
    EdgeId e = edge(u, v);
    stub[make_dart(e, 0)] = {Rational(ux), Rational(uy)};
    stub[make_dart(e, 1)] = {Rational(vx), Rational(vy)};
    return make_dart(e, 0);
  }
  PlaneModel finish() {
    const auto& g = pm.graph.graph;
    std::vector<std::vector<std::pair<Dart, Point>>> darts(g.vertex_count);
    for (EdgeId e = 0; e < g.edges.size(); ++e)
      for (unsigned s = 0; s < 2; ++s) {
        Dart d = make_dart(e, s);
        VertexId a = s ? g.edges[e].v : g.edges[e].u, b = s ? g.edges[e].u : g.edges[e].v;
        auto it = stub.find(d);
        darts[a].push_back({d, it != stub.end() ? it->second : sub(pos[b], pos[a])});
      }
    pm.graph.rotation.resize(g.vertex_count);
    for (VertexId v = 0; v < g.vertex_count; ++v) pm.graph.rotation[v] = clockwise_order(darts[v]);
    pm.validate();
    return pm;
  }
};

ModelBuilder grid_interior(std::size_t rows, std::size_t cols, std::vector<VertexId>& id) {
  ModelBuilder mb;
  id.clear();
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) id.push_back(mb.vertex(static_cast<long>(c), -static_cast<long>(r)));
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) mb.edge(id[r * cols + c], id[r * cols + c + 1]);
      if (r + 1 < rows) mb.edge(id[r * cols + c], id[(r + 1) * cols + c]);
    }
  return mb;
}

}  // namespace

PlaneModel toroidal_grid_model(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw ValidationError("toroidal grid: at least 2 x 2");
  std::vector<VertexId> id;
  auto mb = grid_interior(rows, cols, id);
  auto at = [&](std::size_t r, std::size_t c) { return id[r * cols + c]; };
  std::vector<Dart> a1, a2;
  for (std::size_t r = rows; r-- > 0;) a1.push_back(mb.bunch_edge(at(r, cols - 1), at(r, 0), 1, 0, -1, 0));
  for (std::size_t c = cols; c-- > 0;) a2.push_back(mb.bunch_edge(at(0, c), at(rows - 1, c), 0, 1, 0, -1));
  mb.pm.bunches = {a1, a2};
  mb.pm.pattern = SidePattern::kOrientable;
  return mb.finish();
}

PlaneModel projective_grid_model(std::size_t rows, std::size_t cols) {
  if (rows < 2 || cols < 2) throw ValidationError("projective grid: at least 2 x 2");
  std::vector<VertexId> id;
  auto mb = grid_interior(rows, cols, id);
  auto at = [&](std::size_t r, std::size_t c) { return id[r * cols + c]; };
  std::vector<Dart> a;
  // Exits up the right side then leftwards along the top; entries down the
  // left side then rightwards along the bottom: antipodal gluing.
  for (std::size_t k = 0; k < rows; ++k) a.push_back(mb.bunch_edge(at(rows - 1 - k, cols - 1), at(k, 0), 1, 0, -1, 0));
  for (std::size_t k = 0; k < cols; ++k) a.push_back(mb.bunch_edge(at(0, cols - 1 - k), at(rows - 1, k), 0, 1, 0, -1));
  mb.pm.bunches = {a};
  mb.pm.pattern = SidePattern::kPlusProjective;
  return mb.finish();
}

PlaneModel klein_grid_model(std::size_t n) {
  if (n < 2) throw ValidationError("klein grid: at least 2 x 2");
  std::vector<VertexId> id;
  auto mb = grid_interior(n, n, id);
  auto at = [&](std::size_t r, std::size_t c) { return id[r * n + c]; };
  std::vector<Dart> a1, a2;
  for (std::size_t k = 0; k < n; ++k) a1.push_back(mb.bunch_edge(at(n - 1 - k, n - 1), at(0, n - 1 - k), 1, 0, 0, 1));
  for (std::size_t k = 0; k < n; ++k) a2.push_back(mb.bunch_edge(at(k, 0), at(n - 1, k), -1, 0, 0, -1));
  mb.pm.bunches = {a1, a2};
  mb.pm.pattern = SidePattern::kPlusKlein;
  return mb.finish();
}

namespace {
// Hexagon a 1 b 2 c 3 counterclockwise with the chord a-2 inside; b-3 and
// c-1 leave the polygon.
ModelBuilder k33_base(Dart& b3, Dart& c1) {
  ModelBuilder mb;
  VertexId a = mb.vertex(2, 0), v1 = mb.vertex(1, 2), b = mb.vertex(-1, 2);
  VertexId v2 = mb.vertex(-2, 0), c = mb.vertex(-1, -2), v3 = mb.vertex(1, -2);
  mb.edge(a, v1);
  mb.edge(v1, b);
  mb.edge(b, v2);
  mb.edge(v2, c);
  mb.edge(c, v3);
  mb.edge(v3, a);
  mb.edge(a, v2);
  b3 = mb.bunch_edge(b, v3, -1, 2, 1, -2);
  c1 = mb.bunch_edge(c, v1, -1, -2, 1, 2);
  return mb;
}
}  // namespace

PlaneModel k33_torus_model() {
  Dart b3, c1;
  auto mb = k33_base(b3, c1);
  mb.pm.bunches = {{b3}, {c1}};
  mb.pm.pattern = SidePattern::kOrientable;
  return mb.finish();
}

PlaneModel k33_projective_model() {
  Dart b3, c1;
  auto mb = k33_base(b3, c1);
  mb.pm.bunches = {{b3, c1}};
  mb.pm.pattern = SidePattern::kPlusProjective;
  return mb.finish();
}

}  // namespace holant
