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


#include "holant/io.hpp"

#include <fstream>
#include <sstream>

#include "holant/error.hpp"

namespace holant::io {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw FormatError((where.empty() ? std::string("/") : where) + ": " + what);
}

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& need(const Json& j, const std::string& key, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(where, "missing field \"" + key + "\"");
  return *it;
}

const Json& need_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array");
  return j;
}

std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) fail(where, "expected a non-negative integer");
  return j.get<std::size_t>();
}

std::size_t as_index_below(const Json& j, std::size_t bound, const std::string& where) {
  std::size_t v = as_index(j, where);
  if (v >= bound) fail(where, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return v;
}

// 1-based value in [1, bound], returned 0-based.
std::size_t as_one_based(const Json& j, std::size_t bound, const std::string& where) {
  std::size_t v = as_index(j, where);
  if (v < 1 || v > bound) fail(where, "value " + std::to_string(v) + " outside 1.." + std::to_string(bound));
  return v - 1;
}

std::string as_string(const Json& j, const std::string& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

void check_version(const Json& j, const std::string& where) {
  auto it = j.find("version");
  if (it != j.end() && (!it->is_number_integer() || it->get<int>() != 1)) fail(at(where, "version"), "unsupported version");
}

void check_ids(const Json& arr, const std::string& where) {
  for (std::size_t i = 0; i < arr.size(); ++i) {
    auto it = arr[i].find("id");
    if (it != arr[i].end() && (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(i)))
      fail(at(at(where, i), "id"), "ids must be 0, 1, 2, ... in order");
  }
}

Json dart_to_json(Dart d) { return Json::array({dart_edge(d), dart_side(d)}); }

// An edge id (when it meets `owner` exactly once) or [edge, side].
Dart dart_from_json(const Json& j, const SignatureGraph& g, std::optional<VertexId> owner, const std::string& where) {
  if (j.is_array()) {
    if (j.size() != 2) fail(where, "dart must be [edge, side]");
    std::size_t e = as_index_below(j[0], g.edge_count(), at(where, 0));
    std::size_t s = as_index_below(j[1], g.is_dangling(e) ? 1 : 2, at(where, 1));
    return make_dart(static_cast<EdgeId>(e), static_cast<unsigned>(s));
  }
  std::size_t e = as_index_below(j, g.edge_count(), where);
  const auto& ed = g.edge(e);
  if (!owner) return make_dart(static_cast<EdgeId>(e), 0);
  if (ed.v && ed.u == *owner && *ed.v == *owner) fail(where, "self-loop: write the dart as [edge, side]");
  if (ed.u == *owner) return make_dart(static_cast<EdgeId>(e), 0);
  if (ed.v && *ed.v == *owner) return make_dart(static_cast<EdgeId>(e), 1);
  fail(where, "edge " + std::to_string(e) + " is not incident to vertex " + std::to_string(*owner));
}

Json cells_pairs(const std::set<Pair>& A) {
  Json out = Json::array();
  for (auto [u, v] : A) out.push_back(Json::array({u + 1, v + 1}));
  return out;
}

ColoredGraph colored_graph_at(const Json& j, const std::string& where, std::size_t colours) {
  ColoredGraph g;
  const Json& verts = need(j, "vertices", where);
  if (verts.is_number_integer()) {
    g.n = as_index(verts, at(where, "vertices"));
    g.colour.assign(g.n, 0);
  } else {
    need_array(verts, at(where, "vertices"));
    check_ids(verts, at(where, "vertices"));
    g.n = verts.size();
    for (std::size_t i = 0; i < verts.size(); ++i) {
      std::string w = at(at(where, "vertices"), i);
      auto it = verts[i].find("colour");
      if (it == verts[i].end()) it = verts[i].find("color");
      if (it == verts[i].end()) {
        if (colours) fail(w, "missing field \"colour\"");
        g.colour.push_back(0);
      } else {
        g.colour.push_back(as_one_based(*it, colours ? colours : SIZE_MAX, at(w, "colour")));
      }
    }
  }
  const Json& edges = need_array(need(j, "edges", where), at(where, "edges"));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string w = at(at(where, "edges"), i);
    if (!edges[i].is_array() || edges[i].size() != 2) fail(w, "edge must be [a, b]");
    g.edges.emplace_back(as_index_below(edges[i][0], g.n, at(w, 0)), as_index_below(edges[i][1], g.n, at(w, 1)));
  }
  return g;
}

}  // namespace

Json parse_json(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string msg = e.what();
    auto p = msg.find("syntax error");
    if (p != std::string::npos) msg = msg.substr(p);
    throw FormatError(source + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + msg);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError(path + ": cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str(), path);
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError(path + ": cannot write file");
  out << j.dump(2) << "\n";
}

// ---- scalars ----

Scalar scalar_from_json(const Json& j, const std::string& where) {
  auto rational = [&](const Json& r, const std::string& w) -> Rational {
    if (r.is_number_integer()) return Rational(mpz_class(r.dump()));
    if (r.is_string()) {
      try {
        return Rational::parse(r.get<std::string>());
      } catch (const Error&) {
        fail(w, "malformed rational \"" + r.get<std::string>() + "\"");
      }
    }
    fail(w, "expected an integer or a \"p/q\" string");
  };
  if (j.is_object()) {
    Rational re = j.contains("re") ? rational(j["re"], at(where, "re")) : Rational(0);
    Rational im = j.contains("im") ? rational(j["im"], at(where, "im")) : Rational(0);
    for (auto it = j.begin(); it != j.end(); ++it)
      if (it.key() != "re" && it.key() != "im") fail(at(where, it.key()), "unknown field");
    return Scalar(re, im);
  }
  return Scalar(rational(j, where));
}

Json scalar_to_json(const Scalar& s) {
  if (s.is_real()) return s.re().str();
  return Json{{"re", s.re().str()}, {"im", s.im().str()}};
}

// ---- signatures ----

Signature signature_from_json(const Json& j, const std::string& where, std::size_t arity_hint) {
  if (j.is_string()) return signature_from_json(Json{{"kind", j}}, where, arity_hint);
  std::string kind = as_string(need(j, "kind", where), at(where, "kind"));
  if (auto b = builtin_from_name(kind)) {
    std::size_t arity = arity_hint;
    if (j.contains("arity")) arity = as_index(j["arity"], at(where, "arity"));
    else if (*b == Builtin::kPass) arity = 4;
    else if (*b == Builtin::kPre || *b == Builtin::kAct) arity = 6;
    try {
      return Signature::builtin(*b, arity);
    } catch (const Error& e) {
      fail(where, e.what());
    }
  }
  if (kind == "DENSE") {
    const Json& t = need_array(need(j, "table", where), at(where, "table"));
    std::vector<Scalar> table;
    for (std::size_t i = 0; i < t.size(); ++i) table.push_back(scalar_from_json(t[i], at(at(where, "table"), i)));
    try {
      return Signature::dense(std::move(table));
    } catch (const Error& e) {
      fail(at(where, "table"), e.what());
    }
  }
  if (kind == "PROPAGATE" || kind == "PROPAGATE_CHECK") {
    LazyRule r;
    r.n = as_index(need(j, "n", where), at(where, "n"));
    if (r.n < 1 || 4 * r.n > kMaxArity) fail(at(where, "n"), "n must be in 1..16");
    if (kind == "PROPAGATE_CHECK") {
      r.kind = LazyRule::Kind::kPropagateCheck;
      const Json& a = need_array(need(j, "allowed", where), at(where, "allowed"));
      for (std::size_t i = 0; i < a.size(); ++i) {
        std::string w = at(at(where, "allowed"), i);
        if (!a[i].is_array() || a[i].size() != 2) fail(w, "pair must be [u, v]");
        r.allowed.insert({static_cast<int>(as_one_based(a[i][0], r.n, at(w, 0)) + 1),
                          static_cast<int>(as_one_based(a[i][1], r.n, at(w, 1)) + 1)});
      }
    }
    return Signature::lazy(std::move(r));
  }
  fail(at(where, "kind"), "unknown signature kind \"" + kind + "\"");
}

Json signature_to_json(const Signature& s) {
  switch (s.form()) {
    case Signature::Form::kBuiltin:
      return Json{{"kind", builtin_name(*s.builtin_kind())}, {"arity", s.arity()}};
    case Signature::Form::kDense: {
      Json t = Json::array();
      for (const auto& v : s.table()) t.push_back(scalar_to_json(v));
      return Json{{"kind", "DENSE"}, {"table", t}};
    }
    case Signature::Form::kLazy: {
      const auto& r = s.rule();
      if (r.kind == LazyRule::Kind::kPropagate) return Json{{"kind", "PROPAGATE"}, {"n", r.n}};
      Json a = Json::array();
      for (auto [u, v] : r.allowed) a.push_back(Json::array({u, v}));
      return Json{{"kind", "PROPAGATE_CHECK"}, {"n", r.n}, {"allowed", a}};
    }
  }
  return Json();
}

// ---- signature graphs ----

namespace {

SignatureGraph graph_at(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(where, "expected an object");
  check_version(j, where);
  SignatureGraph g;
  const Json& verts = need_array(need(j, "vertices", where), at(where, "vertices"));
  const Json& edges = need_array(need(j, "edges", where), at(where, "edges"));
  check_ids(verts, at(where, "vertices"));
  check_ids(edges, at(where, "edges"));
  const std::size_t nv = verts.size();

  // Degrees first, so builtin signatures may omit their arity.
  std::vector<std::size_t> degree(nv, 0);
  struct EdgeIn {
    std::size_t u;
    std::optional<std::size_t> v;
    Scalar w;
  };
  std::vector<EdgeIn> ein;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string w = at(at(where, "edges"), i);
    EdgeIn e{as_index_below(need(edges[i], "u", w), nv, at(w, "u")), std::nullopt, Scalar(1)};
    auto vit = edges[i].find("v");
    if (vit != edges[i].end() && !vit->is_null()) e.v = as_index_below(*vit, nv, at(w, "v"));
    if (edges[i].contains("weight")) e.w = scalar_from_json(edges[i]["weight"], at(w, "weight"));
    ++degree[e.u];
    if (e.v) ++degree[*e.v];
    ein.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < nv; ++i) {
    std::string w = at(at(where, "vertices"), i);
    const Json& vj = verts[i];
    if (!vj.is_object()) fail(w, "expected an object");
    std::string label = vj.contains("label") ? as_string(vj["label"], at(w, "label")) : "";
    Signature s = vj.contains("signature") ? signature_from_json(vj["signature"], at(w, "signature"), degree[i])
                                           : Signature::hw1(degree[i]);
    g.add_vertex(std::move(s), std::move(label));
  }
  for (const auto& e : ein) {
    if (e.v) g.add_edge(static_cast<VertexId>(e.u), static_cast<VertexId>(*e.v), e.w);
    else g.add_dangling(static_cast<VertexId>(e.u), e.w);
  }
  for (std::size_t i = 0; i < nv; ++i) {
    auto it = verts[i].find("incidence");
    if (it == verts[i].end()) continue;
    std::string w = at(at(at(where, "vertices"), i), "incidence");
    need_array(*it, w);
    std::vector<Dart> inc;
    for (std::size_t k = 0; k < it->size(); ++k)
      inc.push_back(dart_from_json((*it)[k], g, static_cast<VertexId>(i), at(w, k)));
    try {
      g.set_incidence(static_cast<VertexId>(i), inc);
    } catch (const Error& e) {
      fail(w, e.what());
    }
  }
  try {
    g.validate();
  } catch (const Error& e) {
    fail(where, e.what());
  }
  auto emb = j.find("embedding");
  if (emb != j.end() && !emb->is_null()) {
    std::string w = at(where, "embedding");
    const Json& rot = need_array(need(*emb, "rotation", w), at(w, "rotation"));
    if (rot.size() != nv) fail(at(w, "rotation"), "one list per vertex expected");
    PlanarWitness pw;
    pw.rotation.resize(nv);
    pw.excluded.assign(nv, 0);
    for (std::size_t v = 0; v < nv; ++v) {
      std::string wv = at(at(w, "rotation"), v);
      need_array(rot[v], wv);
      for (std::size_t k = 0; k < rot[v].size(); ++k) {
        Dart d = dart_from_json(rot[v][k], g, static_cast<VertexId>(v), at(wv, k));
        if (g.dart_vertex(d) != v) fail(at(wv, k), "dart does not sit at this vertex");
        pw.rotation[v].push_back(d);
      }
    }
    if (emb->contains("excluded")) {
      const Json& ex = need_array((*emb)["excluded"], at(w, "excluded"));
      for (std::size_t k = 0; k < ex.size(); ++k) {
        std::size_t v = as_index_below(ex[k], nv, at(at(w, "excluded"), k));
        if (!pw.rotation[v].empty()) fail(at(at(w, "excluded"), k), "an excluded vertex lists no darts");
        pw.excluded[v] = 1;
      }
    }
    g.witness = std::move(pw);
  }
  return g;
}

}  // namespace

SignatureGraph graph_from_json(const Json& j) { return graph_at(j, ""); }

Json graph_to_json(const SignatureGraph& g) {
  Json out;
  out["version"] = 1;
  Json verts = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto& vx = g.vertex(v);
    Json vj;
    vj["id"] = v;
    if (!vx.label.empty()) vj["label"] = vx.label;
    vj["signature"] = signature_to_json(vx.signature);
    Json inc = Json::array();
    for (Dart d : vx.incidence) inc.push_back(dart_to_json(d));
    vj["incidence"] = inc;
    verts.push_back(vj);
  }
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    Json ej;
    ej["id"] = e;
    ej["u"] = ed.u;
    ej["v"] = ed.v ? Json(*ed.v) : Json(nullptr);
    if (!ed.weight.is_one()) ej["weight"] = scalar_to_json(ed.weight);
    edges.push_back(ej);
  }
  out["vertices"] = verts;
  out["edges"] = edges;
  if (g.witness) {
    Json rot = Json::array();
    for (const auto& r : g.witness->rotation) {
      Json l = Json::array();
      for (Dart d : r) l.push_back(dart_to_json(d));
      rot.push_back(l);
    }
    Json ex = Json::array();
    for (VertexId v = 0; v < g.witness->excluded.size(); ++v)
      if (g.witness->excluded[v]) ex.push_back(v);
    out["embedding"] = Json{{"rotation", rot}, {"excluded", ex}};
  }
  return out;
}

// ---- gates ----

GateFile gate_from_json(const Json& j) {
  GateFile out;
  out.gate.graph = graph_at(j, "");
  const Json& dl = need_array(need(j, "dangling", ""), "/dangling");
  for (std::size_t i = 0; i < dl.size(); ++i) {
    std::size_t e = as_index_below(dl[i], out.gate.graph.edge_count(), at("/dangling", i));
    out.gate.dangling.push_back(static_cast<EdgeId>(e));
  }
  if (j.contains("outer_order")) {
    const Json& oo = need_array(j["outer_order"], "/outer_order");
    for (std::size_t i = 0; i < oo.size(); ++i) out.gate.outer_order.push_back(as_index(oo[i], at("/outer_order", i)));
  } else {
    for (std::size_t i = 0; i < out.gate.dangling.size(); ++i) out.gate.outer_order.push_back(i + 1);
  }
  try {
    out.gate.validate();
  } catch (const Error& e) {
    fail("", e.what());
  }
  if (j.contains("target") && !j["target"].is_null())
    out.target = signature_from_json(j["target"], "/target", out.gate.arity());
  return out;
}

Json gate_to_json(const Gate& g, const std::optional<Signature>& target) {
  Json out = graph_to_json(g.graph);
  out["dangling"] = g.dangling;
  out["outer_order"] = g.outer_order;
  if (target) out["target"] = signature_to_json(*target);
  return out;
}

// ---- matrices ----

Matrix matrix_from_json(const Json& j) {
  const Json& rows = need_array(need(j, "rows", ""), "/rows");
  std::size_t cols = rows.empty() ? 0 : need_array(rows[0], "/rows/0").size();
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string w = at("/rows", i);
    need_array(rows[i], w);
    if (rows[i].size() != cols) fail(w, "rows have different lengths");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = scalar_from_json(rows[i][c], at(w, c));
  }
  return m;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(scalar_to_json(m(i, c)));
    rows.push_back(r);
  }
  return Json{{"rows", rows}};
}

// ---- plane models ----

PlaneModel plane_model_from_json(const Json& j) {
  check_version(j, "");
  PlaneModel pm;
  if (j.contains("pattern")) {
    auto p = side_pattern_from_name(as_string(j["pattern"], "/pattern"));
    if (!p) fail("/pattern", "unknown pattern (ORIENTABLE, PLUS_PROJECTIVE, PLUS_KLEIN)");
    pm.pattern = *p;
  }
  std::size_t nv = as_index(need(j, "vertex_count", ""), "/vertex_count");
  pm.graph.graph.vertex_count = nv;
  const Json& edges = need_array(need(j, "edges", ""), "/edges");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string w = at("/edges", i);
    VertexId u = static_cast<VertexId>(as_index_below(need(edges[i], "u", w), nv, at(w, "u")));
    VertexId v = static_cast<VertexId>(as_index_below(need(edges[i], "v", w), nv, at(w, "v")));
    Scalar wt = edges[i].contains("weight") ? scalar_from_json(edges[i]["weight"], at(w, "weight")) : Scalar(1);
    pm.graph.graph.add_edge(u, v, wt);
  }
  auto dart = [&](const Json& d, const std::string& w) -> Dart {
    if (!d.is_array() || d.size() != 2) fail(w, "dart must be [edge, side]");
    std::size_t e = as_index_below(d[0], pm.graph.graph.edges.size(), at(w, 0));
    return make_dart(static_cast<EdgeId>(e), static_cast<unsigned>(as_index_below(d[1], 2, at(w, 1))));
  };
  const Json& rot = need_array(need(j, "rotation", ""), "/rotation");
  if (rot.size() != nv) fail("/rotation", "one list per vertex expected");
  pm.graph.rotation.resize(nv);
  for (std::size_t v = 0; v < nv; ++v) {
    need_array(rot[v], at("/rotation", v));
    for (std::size_t k = 0; k < rot[v].size(); ++k)
      pm.graph.rotation[v].push_back(dart(rot[v][k], at(at("/rotation", v), k)));
  }
  const Json& bunches = need_array(need(j, "bunches", ""), "/bunches");
  for (std::size_t b = 0; b < bunches.size(); ++b) {
    need_array(bunches[b], at("/bunches", b));
    std::vector<Dart> bunch;
    for (std::size_t k = 0; k < bunches[b].size(); ++k) bunch.push_back(dart(bunches[b][k], at(at("/bunches", b), k)));
    pm.bunches.push_back(std::move(bunch));
  }
  try {
    pm.validate();
  } catch (const Error& e) {
    fail("", e.what());
  }
  return pm;
}

Json plane_model_to_json(const PlaneModel& pm) {
  Json out;
  out["version"] = 1;
  out["pattern"] = side_pattern_name(pm.pattern);
  out["vertex_count"] = pm.graph.graph.vertex_count;
  Json edges = Json::array();
  for (const auto& e : pm.graph.graph.edges) {
    Json ej{{"u", e.u}, {"v", e.v}};
    if (!e.w.is_one()) ej["weight"] = scalar_to_json(e.w);
    edges.push_back(ej);
  }
  out["edges"] = edges;
  Json rot = Json::array();
  for (const auto& r : pm.graph.rotation) {
    Json l = Json::array();
    for (Dart d : r) l.push_back(dart_to_json(d));
    rot.push_back(l);
  }
  out["rotation"] = rot;
  Json bunches = Json::array();
  for (const auto& b : pm.bunches) {
    Json l = Json::array();
    for (Dart d : b) l.push_back(dart_to_json(d));
    bunches.push_back(l);
  }
  out["bunches"] = bunches;
  return out;
}

// ---- grid tilings and reductions ----

GridTilingInstance gridtiling_from_json(const Json& j) {
  check_version(j, "");
  GridTilingInstance t;
  t.n = as_index(need(j, "n", ""), "/n");
  t.k = as_index(need(j, "k", ""), "/k");
  if (t.n < 1) fail("/n", "n must be at least 1");
  if (t.k < 1) fail("/k", "k must be at least 1");
  const Json& cells = need_array(need(j, "cells", ""), "/cells");
  for (std::size_t c = 0; c < cells.size(); ++c) {
    std::string w = at("/cells", c);
    const Json& cell = need(cells[c], "cell", w);
    if (!cell.is_array() || cell.size() != 2) fail(at(w, "cell"), "cell must be [i, j]");
    Cell key{as_one_based(cell[0], t.k, at(at(w, "cell"), 0)), as_one_based(cell[1], t.k, at(at(w, "cell"), 1))};
    if (t.T.count(key)) fail(at(w, "cell"), "cell listed twice");
    auto& A = t.T[key];
    const Json& pairs = need_array(need(cells[c], "pairs", w), at(w, "pairs"));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      std::string wp = at(at(w, "pairs"), p);
      if (!pairs[p].is_array() || pairs[p].size() != 2) fail(wp, "pair must be [u, v]");
      A.insert({as_one_based(pairs[p][0], t.n, at(wp, 0)), as_one_based(pairs[p][1], t.n, at(wp, 1))});
    }
  }
  try {
    t.validate();
  } catch (const Error& e) {
    fail("", e.what());
  }
  return t;
}

Json gridtiling_to_json(const GridTilingInstance& t) {
  Json cells = Json::array();
  for (const auto& [cell, A] : t.T)
    cells.push_back(Json{{"cell", Json::array({cell.first + 1, cell.second + 1})}, {"pairs", cells_pairs(A)}});
  return Json{{"version", 1}, {"n", t.n}, {"k", t.k}, {"cells", cells}};
}

ColoredGraph colored_graph_from_json(const Json& j) { return colored_graph_at(j, "", 0); }

Json colored_graph_to_json(const ColoredGraph& g) {
  Json verts = Json::array();
  for (std::size_t v = 0; v < g.n; ++v) verts.push_back(Json{{"id", v}, {"colour", g.colour.at(v) + 1}});
  Json edges = Json::array();
  for (auto [a, b] : g.edges) edges.push_back(Json::array({a, b}));
  return Json{{"vertices", verts}, {"edges", edges}};
}

PartitionedSubInstance psub_from_json(const Json& j) {
  check_version(j, "");
  PartitionedSubInstance p;
  p.k = as_index(need(j, "k", ""), "/k");
  if (p.k < 1) fail("/k", "k must be at least 1");
  p.H = colored_graph_at(need(j, "H", ""), "/H", p.k);
  p.G = colored_graph_at(need(j, "G", ""), "/G", p.k);
  try {
    p.validate();
  } catch (const Error& e) {
    fail("", e.what());
  }
  return p;
}

Json psub_to_json(const PartitionedSubInstance& p) {
  return Json{{"version", 1}, {"k", p.k}, {"H", colored_graph_to_json(p.H)}, {"G", colored_graph_to_json(p.G)}};
}

}  // namespace holant::io
