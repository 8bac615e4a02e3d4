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


#include "holant/apex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <sstream>

#include "holant/error.hpp"
#include "holant/matchgates.hpp"
#include "holant/parallel.hpp"

namespace holant {

namespace {

constexpr Dart kNoDart = UINT32_MAX;
enum Slot { kN = 0, kE = 1, kS = 2, kW = 3, k5 = 4, k6 = 5 };

Point pt(long x, long y) { return Point{Rational(x), Rational(y)}; }

Bits block(Bits x, std::size_t n, int index) {
  return (x >> (n * static_cast<std::size_t>(3 - index))) & ((Bits{1} << n) - 1);
}

std::string pair_str(const Pair& p) {
  return "(" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) + ")";
}

void check_pairs(const std::set<Pair>& A, std::size_t n) {
  for (const auto& p : A)
    if (p.first >= n || p.second >= n) throw ValidationError("cell set: pair " + pair_str(p) + " outside [n]^2");
}

std::optional<std::size_t> line_balance(const std::set<Pair>& A, std::size_t n, bool by_column) {
  check_pairs(A, n);
  std::vector<std::size_t> c(n, 0);
  for (const auto& [u, v] : A) ++c[by_column ? v : u];
  for (auto x : c)
    if (x != c[0]) return std::nullopt;
  return n ? c[0] : 0;
}

}  // namespace

bool phi_one(Bits x, std::size_t n) {
  return std::popcount(block(x, n, 0)) == 1 && std::popcount(block(x, n, 3)) == 1;
}

bool phi_prop(Bits x, std::size_t n) { return block(x, n, 0) == block(x, n, 2) && block(x, n, 1) == block(x, n, 3); }

Bits cell_input(std::size_t n, Bits xn, Bits xe, Bits xs, Bits xw) {
  return (xn << 3 * n) | (xe << 2 * n) | (xs << n) | xw;
}

Bits one_hot(std::size_t n, std::size_t index0) { return Bits{1} << (n - 1 - index0); }

std::vector<Bits> phi_one_inputs(std::size_t n) {
  if (4 * n > kMaxArity) throw DimensionError("phi_one_inputs: n too large");
  std::vector<Bits> out;
  for (std::size_t v = 0; v < n; ++v)
    for (Bits xe = 0; xe < (Bits{1} << n); ++xe)
      for (Bits xs = 0; xs < (Bits{1} << n); ++xs)
        for (std::size_t u = 0; u < n; ++u) out.push_back(cell_input(n, one_hot(n, v), xe, xs, one_hot(n, u)));
  std::sort(out.begin(), out.end());
  return out;
}

Signature cell_signature(std::size_t n, const std::set<Pair>* A) {
  LazyRule r;
  r.n = n;
  if (A) {
    check_pairs(*A, n);
    r.kind = LazyRule::Kind::kPropagateCheck;
    for (const auto& [u, v] : *A) r.allowed.emplace(static_cast<int>(u + 1), static_cast<int>(v + 1));
  }
  return Signature::lazy(std::move(r));
}

CellGraph build_cell_graph(const GridTilingInstance& t) {
  t.validate();
  const std::size_t n = t.n, k = t.k;
  if (n == 0 || k == 0) throw ValidationError("cell graph: n and k must be positive");
  CellGraph cg;
  cg.n = n;
  cg.k = k;
  SignatureGraph& g = cg.graph;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto it = t.T.find({i, j});
      cg.cells.push_back(g.add_vertex(cell_signature(n, it == t.T.end() ? nullptr : &it->second),
                                      "c(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"));
    }
  const char* dir = "NESW";
  for (int d = 0; d < 4; ++d)
    for (std::size_t i = 0; i < k; ++i)
      cg.border.push_back(g.add_vertex(Signature::hw1(n), std::string(1, dir[d]) + std::to_string(i + 1)));

  // slot[cell][block * n + t]
  std::vector<std::vector<Dart>> slot(k * k, std::vector<Dart>(4 * n, kNoDart));
  std::vector<std::vector<Dart>> bslot(4 * k);
  // Per-dart drawing direction; a bundle's t-th edge is offset by o(t).
  std::vector<std::optional<Point>> dir_of;
  const long big = 4 * static_cast<long>(n);
  auto off = [&](std::size_t s) { return 2 * static_cast<long>(s) - (static_cast<long>(n) - 1); };
  auto cell_dir = [&](int b, std::size_t s) {
    long o = off(s);
    switch (b) {
      case kN: return pt(o, big);
      case kE: return pt(big, -o);
      case kS: return pt(o, -big);
      default: return pt(-big, -o);
    }
  };
  auto put = [&](Dart d, Point p) {
    if (dir_of.size() <= d) dir_of.resize(d + 1);
    dir_of[d] = p;
  };
  auto cid = [&](std::size_t i, std::size_t j) { return i * k + j; };
  // Vertical bundles and the N/S border bundles.
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t s = 0; s < n; ++s) {
        VertexId upper = i == 0 ? cg.border[0 * k + j] : cg.cells[cid(i - 1, j)];
        VertexId lower = i == k ? cg.border[2 * k + j] : cg.cells[cid(i, j)];
        EdgeId e = g.add_edge(upper, lower);
        Dart du = make_dart(e, 0), dl = make_dart(e, 1);
        if (i == 0) bslot[0 * k + j].push_back(du);
        else slot[cid(i - 1, j)][kS * n + s] = du;
        if (i == k) bslot[2 * k + j].push_back(dl);
        else slot[cid(i, j)][kN * n + s] = dl;
        put(du, cell_dir(kS, s));
        put(dl, cell_dir(kN, s));
      }
  // Horizontal bundles and the W/E border bundles.
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j <= k; ++j)
      for (std::size_t s = 0; s < n; ++s) {
        VertexId left = j == 0 ? cg.border[3 * k + i] : cg.cells[cid(i, j - 1)];
        VertexId right = j == k ? cg.border[1 * k + i] : cg.cells[cid(i, j)];
        EdgeId e = g.add_edge(left, right);
        Dart dl = make_dart(e, 0), dr = make_dart(e, 1);
        if (j == 0) bslot[3 * k + i].push_back(dl);
        else slot[cid(i, j - 1)][kE * n + s] = dl;
        if (j == k) bslot[1 * k + i].push_back(dr);
        else slot[cid(i, j)][kW * n + s] = dr;
        put(dl, cell_dir(kE, s));
        put(dr, cell_dir(kW, s));
      }
  for (std::size_t c = 0; c < k * k; ++c) g.set_incidence(cg.cells[c], slot[c]);
  for (std::size_t b = 0; b < 4 * k; ++b) g.set_incidence(cg.border[b], bslot[b]);
  g.validate();
  g.witness = witness_from_directions(g, {}, [&](Dart d) { return dir_of[d]; });
  auto rep = g.check_witness();
  if (!rep.ok) throw EmbeddingError("cell graph drawing is not planar: " + rep.message);
  return cg;
}

Gate build_grid_gate(const GridGateSpec& spec) {
  const std::size_t n = spec.n;
  if (n == 0) throw ValidationError("grid gate: n must be positive");
  check_pairs(spec.special, n);
  if (spec.special_sig != Builtin::kAct && spec.special_sig != Builtin::kPre)
    throw ValidationError("grid gate: special cells carry ACT or PRE");
  if (!spec.special.empty() && !spec.apices) throw ValidationError("grid gate: special cells need apices");
  if (spec.lifted && !spec.apices) throw ValidationError("grid gate: dummy rows need apices");
  const std::size_t lift = spec.lifted ? 1 : 0, R = n + 2 * lift;
  auto dummy_row = [&](std::size_t r) { return lift && (r == 0 || r == R - 1); };

  Gate gate;
  SignatureGraph& g = gate.graph;
  std::vector<std::optional<Point>> pos;
  std::vector<char> wired;
  for (std::size_t r = 0; r < R; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (dummy_row(r)) {
        g.add_vertex(Signature::pre(), "dummy(" + std::to_string(r) + "," + std::to_string(c + 1) + ")");
        wired.push_back(1);
      } else {
        bool sp = spec.special.count({r - lift, c}) > 0;
        g.add_vertex(sp ? Signature::builtin(spec.special_sig, 6) : Signature::pass(),
                     "b(" + std::to_string(r - lift + 1) + "," + std::to_string(c + 1) + ")");
        wired.push_back(sp);
      }
      pos.push_back(pt(6 * static_cast<long>(c), -6 * static_cast<long>(r)));
    }
  auto at = [&](std::size_t r, std::size_t c) { return static_cast<VertexId>(r * n + c); };
  std::vector<std::array<Dart, 6>> slot(R * n);
  for (auto& s : slot) s.fill(kNoDart);

  for (std::size_t r = 0; r + 1 < R; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      EdgeId e = g.add_edge(at(r, c), at(r + 1, c));
      slot[at(r, c)][kS] = make_dart(e, 0);
      slot[at(r + 1, c)][kN] = make_dart(e, 1);
    }
  for (std::size_t r = 0; r < R; ++r) {
    if (dummy_row(r)) {
      // West and east forced inactive by a pendant HW=1 pair.
      for (std::size_t c = 0; c < n; ++c)
        for (int side : {kE, kW}) {
          long sx = side == kE ? 1 : -1, x = 6 * static_cast<long>(c), y = -6 * static_cast<long>(r);
          VertexId p1 = g.add_vertex(Signature::hw1(2), "force"), p2 = g.add_vertex(Signature::hw1(1), "force");
          pos.push_back(pt(x + 2 * sx, y));
          pos.push_back(pt(x + 3 * sx, y + 1));
          EdgeId e = g.add_edge(at(r, c), p1);
          g.add_edge(p1, p2);
          slot[at(r, c)][side] = make_dart(e, 0);
        }
      continue;
    }
    for (std::size_t c = 0; c + 1 < n; ++c) {
      EdgeId e = g.add_edge(at(r, c), at(r, c + 1));
      slot[at(r, c)][kE] = make_dart(e, 0);
      slot[at(r, c + 1)][kW] = make_dart(e, 1);
    }
  }
  std::vector<EdgeId> dn(n), de(n), ds(n), dw(n);
  std::vector<std::pair<EdgeId, Point>> tips;
  const long span = 6 * static_cast<long>(n), depth = 6 * static_cast<long>(R);
  for (std::size_t c = 0; c < n; ++c) {
    dn[c] = g.add_dangling(at(0, c));
    slot[at(0, c)][kN] = make_dart(dn[c], 0);
    tips.emplace_back(dn[c], pt(6 * static_cast<long>(c), 6));
    ds[c] = g.add_dangling(at(R - 1, c));
    slot[at(R - 1, c)][kS] = make_dart(ds[c], 0);
    tips.emplace_back(ds[c], pt(6 * static_cast<long>(c), -depth));
  }
  for (std::size_t u = 0; u < n; ++u) {
    const long y = -6 * static_cast<long>(u + lift);
    dw[u] = g.add_dangling(at(u + lift, 0));
    slot[at(u + lift, 0)][kW] = make_dart(dw[u], 0);
    tips.emplace_back(dw[u], pt(-6, y));
    de[u] = g.add_dangling(at(u + lift, n - 1));
    slot[at(u + lift, n - 1)][kE] = make_dart(de[u], 0);
    tips.emplace_back(de[u], pt(span, y));
  }
  if (spec.apices) {
    std::size_t m = 0;
    for (char w : wired) m += w;
    VertexId a1 = g.add_vertex(Signature::hw1(m), "a1"), a2 = g.add_vertex(Signature::hw1(m), "a2");
    pos.emplace_back();
    pos.emplace_back();
    for (VertexId v = 0; v < R * n; ++v) {
      if (!wired[v]) continue;
      slot[v][k5] = make_dart(g.add_edge(v, a1), 0);
      slot[v][k6] = make_dart(g.add_edge(v, a2), 0);
    }
  }
  if (spec.minus_edge) {
    VertexId m1 = g.add_vertex(Signature::hw1(1), "m1"), m2 = g.add_vertex(Signature::hw1(1), "m2");
    pos.push_back(pt(-20, 20));
    pos.push_back(pt(-22, 20));
    g.add_edge(m1, m2, -1);
  }
  for (VertexId v = 0; v < R * n; ++v) {
    std::size_t a = g.vertex(v).signature.arity();
    g.set_incidence(v, std::vector<Dart>(slot[v].begin(), slot[v].begin() + static_cast<long>(a)));
  }
  for (auto* list : {&dn, &de, &ds, &dw}) gate.dangling.insert(gate.dangling.end(), list->begin(), list->end());
  for (std::size_t l = 1; l <= 2 * n; ++l) gate.outer_order.push_back(l);
  for (std::size_t l = 3 * n; l > 2 * n; --l) gate.outer_order.push_back(l);
  for (std::size_t l = 4 * n; l > 3 * n; --l) gate.outer_order.push_back(l);
  std::vector<std::optional<Point>> tip(g.edge_count());
  for (auto& [e, p] : tips) tip[e] = p;
  g.witness = witness_from_positions(g, pos, tip);
  gate.validate();
  auto rep = gate.check_planar();
  if (!rep.ok) throw EmbeddingError("grid gate drawing is not planar: " + rep.message);
  return gate;
}

std::optional<std::size_t> column_balance(const std::set<Pair>& A, std::size_t n) { return line_balance(A, n, true); }
std::optional<std::size_t> row_balance(const std::set<Pair>& A, std::size_t n) { return line_balance(A, n, false); }

Gate build_phi(std::size_t n) {
  GridGateSpec s;
  s.n = n;
  s.minus_edge = true;
  return build_grid_gate(s);
}

Gate build_phi_prime(const std::set<Pair>& A, std::size_t n, std::size_t T) {
  auto b = column_balance(A, n);
  if (!b || *b != T)
    throw ValidationError("phi': every column of A must hold exactly T = " + std::to_string(T) + " elements");
  GridGateSpec s;
  s.n = n;
  s.special = A;
  s.special_sig = Builtin::kAct;
  s.apices = true;
  return build_grid_gate(s);
}

LinearCombination g_combination(const std::set<Pair>& A, std::size_t n, std::size_t T) {
  LinearCombination lc;
  lc.target_arity = 4 * n;
  lc.target = cell_signature(n, &A);
  lc.terms.push_back({Scalar::frac(static_cast<long>(T), 2), build_phi(n)});
  lc.terms.push_back({Scalar::frac(1, 2), build_phi_prime(A, n, T)});
  return lc;
}

std::vector<std::size_t> vertical_constants(const GridTilingInstance& t) {
  std::vector<std::size_t> out;
  for (const auto& [cell, set] : t.T) {
    auto b = column_balance(set, t.n);
    if (!b) throw ValidationError("cell " + pair_str(cell) + " is not vertically balanced");
    out.push_back(*b);
  }
  return out;
}

std::size_t count_apices(const SignatureGraph& g) {
  std::size_t a = 0;
  for (char x : g.witness->excluded) a += x != 0;
  return a;
}

// Highest cell id first, so lower ids stay put.
SignatureGraph assemble_cells(const CellGraph& cg, const std::vector<const Gate*>& gates) {
  SignatureGraph g = cg.graph;
  for (std::size_t c = cg.cells.size(); c-- > 0;) {
    auto ins = insert_gate_mapped(g, cg.cells[c], *gates[c]);
    if (!ins.planar) throw EmbeddingError("cell gate rotation does not match the cell drawing");
    g = std::move(ins.graph);
  }
  return g;
}

std::vector<ApexBranch> apex_branch_graphs(const GridTilingInstance& t, bool flat) {
  const auto Ts = vertical_constants(t);
  const CellGraph cg = build_cell_graph(t);
  const std::size_t c = t.T.size();
  if (c > 20) throw BudgetExceeded("apex branches: |C| above 20");
  auto prep = [&](Gate g) { return flat ? flatten(g) : g; };
  const Gate phi = prep(build_phi(t.n));
  std::vector<Gate> primes;
  std::vector<std::size_t> cell_of;
  for (const auto& [cell, set] : t.T) {
    primes.push_back(prep(build_phi_prime(set, t.n, Ts[primes.size()])));
    cell_of.push_back(cell.first * t.k + cell.second);
  }
  std::vector<ApexBranch> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
    ApexBranch b;
    b.coefficient = Scalar(Rational(mpz_class(1), mpz_class(1) << static_cast<mp_bitcnt_t>(c)));
    std::vector<const Gate*> gates(cg.cells.size(), &phi);
    for (std::size_t i = 0; i < c; ++i) {
      std::size_t w = (mask >> i & 1) + 1;
      b.omega.push_back(w);
      if (w == 1) b.coefficient *= Scalar(static_cast<long>(Ts[i]));
      else gates[cell_of[i]] = &primes[i];
    }
    b.graph = assemble_cells(cg, gates);
    b.apices = count_apices(b.graph);
    out.push_back(std::move(b));
  }
  return out;
}

BranchShape branch_shape(const SignatureGraph& flat, bool allow_half) {
  BranchShape s;
  if (!flat.witness) throw EmbeddingError("branch_shape: graph has no planarity witness");
  const auto& ex = flat.witness->excluded;
  WeightedGraph w = to_weighted_graph(flat);
  s.bipartite = is_bipartite(w);
  s.apices_independent = s.weights_in_set = s.nonunit_off_apex = true;
  std::vector<std::set<VertexId>> apex_nb(w.vertex_count);
  const Scalar half = Scalar::frac(1, 2);
  for (const auto& e : w.edges) {
    bool au = ex[e.u], av = ex[e.v];
    if (au && av) s.apices_independent = false;
    if (au) apex_nb[e.v].insert(e.u);
    if (av) apex_nb[e.u].insert(e.v);
    bool unit = e.w.is_one();
    if (!(unit || e.w == Scalar(-1) || (allow_half && e.w == half))) s.weights_in_set = false;
    if (!unit && (au || av)) s.nonunit_off_apex = false;
  }
  s.one_apex_per_vertex = true;
  for (VertexId v = 0; v < w.vertex_count; ++v)
    if (!ex[v] && apex_nb[v].size() > 1) s.one_apex_per_vertex = false;
  return s;
}

bool CombinedReport::ok() const {
  Scalar lhs{Rational(tilings)};
  if (rhs != lhs) return false;
  if (holant && *holant != lhs) return false;
  if (!abstract)
    for (const auto& r : rows)
      if (!r.shape.ok()) return false;
  return true;
}

std::string CombinedReport::dump() const {
  std::ostringstream os;
  os << "tilings=" << tilings.get_str() << "\n";
  os << "holant(G)=" << (holant ? holant->pretty() : std::string("skipped")) << "\n";
  os << "rhs=" << rhs.pretty() << (abstract ? " (abstract)" : "") << "\n";
  for (const auto& r : rows) {
    os << "omega=";
    for (std::size_t i = 0; i < r.omega.size(); ++i) os << (i ? "," : "") << r.omega[i];
    os << " coefficient=" << r.coefficient.pretty() << " value=" << r.value.pretty() << " vertices=" << r.vertices
       << " edges=" << r.edges << " apices=" << r.apices;
    if (!abstract)
      os << " bipartite=" << r.shape.bipartite << " apex_independent=" << r.shape.apices_independent
         << " one_apex=" << r.shape.one_apex_per_vertex << " weights=" << r.shape.weights_in_set
         << " nonunit_off_apex=" << r.shape.nonunit_off_apex << " fkt_calls=" << r.fkt_calls;
    os << "\n";
  }
  os << (ok() ? "OK" : "MISMATCH") << "\n";
  return os.str();
}

CombinedReport verify_combined_gridtiling(const GridTilingInstance& t, const ApexVerifyOptions& opt) {
  CombinedReport rep;
  rep.abstract = opt.abstract;
  rep.tilings = count_tilings(t);
  try {
    rep.holant = holant(build_cell_graph(t).graph, opt.enumeration);
  } catch (const BudgetExceeded&) {
    rep.holant.reset();
  }
  auto branches = apex_branch_graphs(t, !opt.abstract);
  rep.rows.resize(branches.size());
  parallel_for(branches.size(), opt.jobs, [&](std::size_t i) {
    const ApexBranch& b = branches[i];
    auto& row = rep.rows[i];
    row.omega = b.omega;
    row.coefficient = b.coefficient;
    row.vertices = b.graph.vertex_count();
    row.edges = b.graph.edge_count();
    row.apices = b.apices;
    if (opt.abstract) {
      row.value = holant(b.graph, opt.enumeration);
      return;
    }
    row.shape = branch_shape(b.graph, true);
    auto inst = apex_instance(b.graph);
    FktStats st;
    row.value = perfmatch_apex(inst.graph, inst.apices, inst.rotation, &st);
    row.fkt_calls = st.fkt_calls;
  });
  rep.rhs = Scalar(0);
  for (const auto& r : rep.rows) rep.rhs += r.coefficient * r.value;
  return rep;
}

}  // namespace holant
