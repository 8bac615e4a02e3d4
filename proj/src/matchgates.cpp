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

#include "holant/matchgates.hpp"

#include <algorithm>
#include <mutex>

#include "holant/error.hpp"

namespace holant {

namespace {

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Dart dart_at(const SignatureGraph& g, EdgeId e, VertexId v) {
  return g.edge(e).u == v ? make_dart(e, 0) : make_dart(e, 1);
}

}  // namespace

std::string matchgate_name(MatchgateName n) {
  switch (n) {
    case MatchgateName::kGammaPass: return "GAMMA_PASS";
    case MatchgateName::kGammaPre: return "GAMMA_PRE";
    case MatchgateName::kGammaAct: return "GAMMA_ACT";
    case MatchgateName::kDummy: return "DUMMY";
  }
  return "?";
}

std::optional<MatchgateName> matchgate_from_name(const std::string& s) {
  for (auto n : {MatchgateName::kGammaPass, MatchgateName::kGammaPre, MatchgateName::kGammaAct, MatchgateName::kDummy})
    if (matchgate_name(n) == s) return n;
  return std::nullopt;
}

// Six vertices b1..b4 (ports N, E, S, W), c, d. The -1 edge c-d separates
// the two halves; b2-b3 and b4-b1 close the outer cycle.
NamedMatchgate build_pass_matchgate() {
  NamedMatchgate m{MatchgateName::kGammaPass, {}, Signature::pass(), {}};
  SignatureGraph& g = m.gate.graph;
  auto h3 = Signature::hw1(3);
  VertexId b1 = g.add_vertex(h3, "b1"), b2 = g.add_vertex(h3, "b2"), b3 = g.add_vertex(h3, "b3"),
           b4 = g.add_vertex(h3, "b4"), c = g.add_vertex(h3, "c"), d = g.add_vertex(h3, "d");
  g.add_edge(c, b1);
  g.add_edge(c, b2);
  g.add_edge(c, d, -1);
  g.add_edge(d, b3);
  g.add_edge(d, b4);
  g.add_edge(b2, b3);
  g.add_edge(b4, b1);
  for (VertexId b : {b1, b2, b3, b4}) m.gate.dangling.push_back(g.add_dangling(b));
  m.gate.outer_order = {1, 2, 3, 4};
  std::vector<std::optional<Point>> pos = {pt(0, 3), pt(3, 0), pt(0, -3), pt(-3, 0), pt(2, 2), pt(-2, -2)};
  std::vector<std::optional<Point>> tip(g.edge_count());
  tip[m.gate.dangling[0]] = pt(0, 6);
  tip[m.gate.dangling[1]] = pt(6, 0);
  tip[m.gate.dangling[2]] = pt(0, -6);
  tip[m.gate.dangling[3]] = pt(-6, 0);
  g.witness = witness_from_positions(g, pos, tip);
  return m;
}

// PASS core with the N port fed through u1 - u2 and the S port through
// v1 - v2. Switch 6 hangs off u2, switch 5 off v2: an active switch matches
// its chain vertex, which forces the outer port active and hides it from the
// core.
NamedMatchgate build_pre_matchgate() {
  NamedMatchgate m{MatchgateName::kGammaPre, {}, Signature::pre(), {5, 6}};
  SignatureGraph& g = m.gate.graph;
  auto h3 = Signature::hw1(3);
  VertexId b1 = g.add_vertex(h3, "b1"), b2 = g.add_vertex(h3, "b2"), b3 = g.add_vertex(h3, "b3"),
           b4 = g.add_vertex(h3, "b4"), c = g.add_vertex(h3, "c"), d = g.add_vertex(h3, "d");
  VertexId u1 = g.add_vertex(Signature::hw1(2), "u1"), u2 = g.add_vertex(h3, "u2");
  VertexId v1 = g.add_vertex(Signature::hw1(2), "v1"), v2 = g.add_vertex(h3, "v2");
  g.add_edge(c, b1);
  g.add_edge(c, b2);
  g.add_edge(c, d, -1);
  g.add_edge(d, b3);
  g.add_edge(d, b4);
  g.add_edge(b2, b3);
  g.add_edge(b4, b1);
  g.add_edge(u1, u2);
  g.add_edge(u2, b1);
  g.add_edge(v1, v2);
  g.add_edge(v2, b3);
  EdgeId dn = g.add_dangling(u1), de = g.add_dangling(b2), ds = g.add_dangling(v1), dw = g.add_dangling(b4);
  EdgeId d5 = g.add_dangling(v2), d6 = g.add_dangling(u2);
  m.gate.dangling = {dn, de, ds, dw, d5, d6};
  m.gate.outer_order = {1, 2, 3, 4};
  std::vector<std::optional<Point>> pos = {pt(0, 3),  pt(3, 0), pt(0, -3), pt(-3, 0), pt(2, 2),
                                           pt(-2, -2), pt(0, 7), pt(0, 5),  pt(0, -7), pt(0, -5)};
  std::vector<std::optional<Point>> tip(g.edge_count());
  tip[dn] = pt(0, 10);
  tip[de] = pt(6, 0);
  tip[ds] = pt(0, -10);
  tip[dw] = pt(-6, 0);
  g.witness = witness_from_positions(g, pos, tip);
  return m;
}

// Centre P carries PRE; ring vertices R_N, R_E, R_S, R_W carry PASS with
// incidence (outer, ring to the next clockwise, inner to P, ring to the
// previous) up to rotation, so opposite positions pair outer/inner and the two
// ring edges.
// h1 - h2 is the weight-1/2 edge.
NamedMatchgate build_act_gate() {
  NamedMatchgate m{MatchgateName::kGammaAct, {}, Signature::act(), {5, 6}};
  SignatureGraph& g = m.gate.graph;
  VertexId p = g.add_vertex(Signature::pre(), "P");
  VertexId r[4];
  const char* names[4] = {"R_N", "R_E", "R_S", "R_W"};
  for (int i = 0; i < 4; ++i) r[i] = g.add_vertex(Signature::pass(), names[i]);
  VertexId h1 = g.add_vertex(Signature::hw1(1), "h1"), h2 = g.add_vertex(Signature::hw1(1), "h2");
  EdgeId inner[4], ring[4], outer[4];
  for (int i = 0; i < 4; ++i) inner[i] = g.add_edge(p, r[i]);
  for (int i = 0; i < 4; ++i) ring[i] = g.add_edge(r[i], r[(i + 1) % 4]);  // ring[i]: r[i] -> r[i+1]
  for (int i = 0; i < 4; ++i) outer[i] = g.add_dangling(r[i]);
  EdgeId d5 = g.add_dangling(p), d6 = g.add_dangling(p);
  g.add_edge(h1, h2, Scalar::frac(1, 2));
  for (int i = 0; i < 4; ++i) {
    std::vector<Dart> inc = {make_dart(outer[i], 0), dart_at(g, ring[i], r[i]), dart_at(g, inner[i], r[i]),
                             dart_at(g, ring[(i + 3) % 4], r[i])};
    // PASS is invariant under rotation; R_S and R_W start one step later so
    // the flattened gate stays 2-colourable with the same port colours as PRE.
    if (i >= 2) std::rotate(inc.begin(), inc.begin() + 1, inc.end());
    g.set_incidence(r[i], inc);
  }
  g.set_incidence(p, {make_dart(inner[0], 0), make_dart(inner[1], 0), make_dart(inner[2], 0),
                      make_dart(inner[3], 0), make_dart(d5, 0), make_dart(d6, 0)});
  m.gate.dangling = {outer[0], outer[1], outer[2], outer[3], d5, d6};
  m.gate.outer_order = {1, 2, 3, 4};
  std::vector<std::optional<Point>> pos = {pt(0, 0), pt(0, 2), pt(2, 0), pt(0, -2), pt(-2, 0), pt(10, 10), pt(12, 10)};
  std::vector<std::optional<Point>> tip(g.edge_count());
  tip[outer[0]] = pt(0, 5);
  tip[outer[1]] = pt(5, 0);
  tip[outer[2]] = pt(0, -5);
  tip[outer[3]] = pt(-5, 0);
  g.witness = witness_from_positions(g, pos, tip);
  return m;
}

NamedMatchgate build_dummy_gate() {
  std::vector<Scalar> table(16);
  const Signature pre = Signature::pre();
  for (Bits x = 0; x < 16; ++x) {
    // x = (N, S, 5, 6) -> PRE input N 0 S 0 5 6
    Bits y = ((x >> 3 & 1) << 5) | ((x >> 2 & 1) << 3) | (x & 3);
    table[x] = pre.eval(y);
  }
  NamedMatchgate m{MatchgateName::kDummy, {}, Signature::dense(table), {3, 4}};
  SignatureGraph& g = m.gate.graph;
  VertexId q = g.add_vertex(Signature::pre(), "pre");
  VertexId e1 = g.add_vertex(Signature::hw1(2), "g1e"), e2 = g.add_vertex(Signature::hw1(1), "g2e");
  VertexId w1 = g.add_vertex(Signature::hw1(2), "g1w"), w2 = g.add_vertex(Signature::hw1(1), "g2w");
  EdgeId dn = g.add_dangling(q);
  EdgeId ee = g.add_edge(q, e1);
  EdgeId ds = g.add_dangling(q);
  EdgeId ew = g.add_edge(q, w1);
  EdgeId d5 = g.add_dangling(q), d6 = g.add_dangling(q);
  g.add_edge(e1, e2);
  g.add_edge(w1, w2);
  (void)ee;
  (void)ew;
  m.gate.dangling = {dn, ds, d5, d6};
  m.gate.outer_order = {1, 2};
  std::vector<std::optional<Point>> pos = {pt(0, 0), pt(2, 0), pt(4, 0), pt(-2, 0), pt(-4, 0)};
  std::vector<std::optional<Point>> tip(g.edge_count());
  tip[dn] = pt(0, 2);
  tip[ds] = pt(0, -2);
  g.witness = witness_from_positions(g, pos, tip);
  return m;
}

NamedMatchgate build_matchgate(MatchgateName n) {
  switch (n) {
    case MatchgateName::kGammaPass: return build_pass_matchgate();
    case MatchgateName::kGammaPre: return build_pre_matchgate();
    case MatchgateName::kGammaAct: return build_act_gate();
    case MatchgateName::kDummy: return build_dummy_gate();
  }
  throw ValidationError("unknown matchgate");
}

namespace {

struct FlatGates {
  Gate pass, pre, act;
};

SignatureGraph flatten_with(const SignatureGraph& g, const FlatGates* f);

const FlatGates& flat_gates() {
  static std::once_flag once;
  static FlatGates f;
  std::call_once(once, [] {
    f.pass = build_pass_matchgate().gate;
    f.pre = build_pre_matchgate().gate;
    Gate act = build_act_gate().gate;
    FlatGates partial{f.pass, f.pre, {}};
    act.graph = flatten_with(act.graph, &partial);
    f.act = std::move(act);
  });
  return f;
}

SignatureGraph flatten_with(const SignatureGraph& g, const FlatGates* f) {
  SignatureGraph out = g;
  // Descending ids: insertion only renumbers vertices above the replaced one.
  for (VertexId v = static_cast<VertexId>(g.vertex_count()); v-- > 0;) {
    auto kind = g.vertex(v).signature.builtin_kind();
    if (!kind) continue;
    const Gate* gate = nullptr;
    if (*kind == Builtin::kPass) gate = &f->pass;
    else if (*kind == Builtin::kPre) gate = &f->pre;
    else if (*kind == Builtin::kAct) gate = &f->act;
    if (!gate) continue;
    if (*kind == Builtin::kAct && gate->graph.vertex_count() == 0) throw Error("flatten: ACT gate unavailable");
    out = insert_gate(out, v, *gate);
  }
  return out;
}

}  // namespace

SignatureGraph flatten(const SignatureGraph& g) { return flatten_with(g, &flat_gates()); }

Gate flatten(const Gate& g) {
  Gate out = g;
  out.graph = flatten(g.graph);
  return out;
}

MatchgateReport verify_matchgate(const NamedMatchgate& m, const EnumerationOptions& opt) {
  MatchgateReport r;
  r.name = matchgate_name(m.name);
  r.arity = m.target.arity();
  if (r.arity > 8) throw DimensionError("verify_matchgate: target arity above 8");
  if (m.gate.arity() != r.arity) throw DimensionError("verify_matchgate: gate and target arity differ");
  for (Bits x = 0; x < (Bits{1} << r.arity); ++x) {
    MatchgateReport::Row row{x, gate_signature_value(m.gate, x, opt), m.target.eval(x)};
    ++r.checked;
    if (row.got != row.want) r.mismatches.push_back(row);
    r.rows.push_back(std::move(row));
  }
  return r;
}

}  // namespace holant
