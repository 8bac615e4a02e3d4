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


#include <random>

#include "doctest.h"
#include "holant/error.hpp"
#include "holant/holant.hpp"
#include "holant/matrix.hpp"
#include "oracles.hpp"
#include "random_graphs.hpp"

namespace holant {

namespace {

WeightedGraph complete(std::size_t n) {
  WeightedGraph g;
  g.vertex_count = n;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

WeightedGraph cycle(std::size_t n) {
  WeightedGraph g;
  g.vertex_count = n;
  for (VertexId a = 0; a < n; ++a) g.add_edge(a, (a + 1) % n);
  return g;
}

SignatureGraph disjoint_union(const SignatureGraph& a, const SignatureGraph& b) {
  SignatureGraph g = a;
  const VertexId off = static_cast<VertexId>(a.vertex_count());
  const EdgeId eoff = static_cast<EdgeId>(a.edge_count());
  for (const auto& v : b.vertices()) g.add_vertex(v.signature);
  for (const auto& e : b.edges()) {
    if (e.v) g.add_edge(e.u + off, *e.v + off, e.weight);
    else g.add_dangling(e.u + off, e.weight);
  }
  for (VertexId v = 0; v < b.vertex_count(); ++v) {
    std::vector<Dart> inc;
    for (Dart d : b.vertex(v).incidence) inc.push_back(d + 2 * eoff);
    g.set_incidence(v + off, inc);
  }
  return g;
}

}  // namespace

TEST_CASE("builtin signature values") {
  CHECK(Signature::pass().eval("1111") == Scalar(-1));
  CHECK(Signature::pass().eval("1010") == Scalar(1));
  CHECK(Signature::pass().eval("0101") == Scalar(1));
  CHECK(Signature::pass().eval("0000") == Scalar(1));
  CHECK(Signature::pass().eval("1000") == Scalar(0));
  CHECK(Signature::act().eval("101011") == Scalar(1));
  CHECK(Signature::act().eval("101001") == Scalar(0));
  CHECK(Signature::pre().eval("100001") == Scalar(1));
  CHECK(Signature::pre().eval("110101") == Scalar(1));
  CHECK(Signature::pre().eval("001010") == Scalar(1));
  CHECK(Signature::pre().eval("011110") == Scalar(1));
  CHECK(Signature::pre().eval("111111") == Scalar(1));
  CHECK(Signature::pre().eval("100010") == Scalar(0));
  CHECK_THROWS_AS(Signature::pass().eval("101"), DimensionError);
  // PRE and ACT agree with PASS when both switches are off.
  for (Bits x = 0; x < 16; ++x) {
    CHECK(Signature::pre().eval(x << 2) == Signature::pass().eval(x));
    CHECK(Signature::act().eval(x << 2) == Signature::pass().eval(x));
  }
  CHECK(Signature::hw1(3).eval("010") == Scalar(1));
  CHECK(Signature::hw1(3).eval("011") == Scalar(0));
}

TEST_CASE("val") {
  SignatureGraph tri = matching_signature_graph(cycle(3));
  CHECK(val(tri, {1, 0, 0}).is_zero());
  SignatureGraph z;
  CHECK(val(z, {}) == Scalar(1));
  SignatureGraph h0;
  VertexId a = h0.add_vertex(Signature::builtin(Builtin::kHw0, 1)), b = h0.add_vertex(Signature::builtin(Builtin::kHw0, 1));
  h0.add_edge(a, b);
  CHECK(val(h0, {0}) == Scalar(1));
  CHECK(val(h0, {1}) == Scalar(0));
}

TEST_CASE("PASS star with forced pendant paths") {
  // PASS centre, each port on a pendant HW=1 path of length 2: port edge,
  // middle vertex, end vertex. The end vertices force the path edges.
  SignatureGraph g;
  VertexId c = g.add_vertex(Signature::pass());
  for (int i = 0; i < 4; ++i) {
    VertexId m = g.add_vertex(Signature::hw1(1));
    g.add_edge(c, m);
  }
  // all four ports forced active -> PASS(1111) = -1
  CHECK(holant(g) == Scalar(-1));
  // oracle: the plain enumeration
  CHECK(holant(g, {28, Strategy::kPlain}) == Scalar(-1));
}

TEST_CASE("holant spec examples") {
  CHECK(perfmatch_via_holant(cycle(3)).is_zero());
  CHECK(perfmatch_via_holant(cycle(4)) == Scalar(2));
  WeightedGraph e;
  e.vertex_count = 2;
  e.add_edge(0, 1, 5);
  CHECK(perfmatch_via_holant(e) == Scalar(5));
  CHECK(perfmatch_via_holant(complete(4)) == Scalar(3));
  CHECK(perfmatch_via_holant(cycle(6)) == Scalar(2));
  WeightedGraph k33;
  k33.vertex_count = 6;
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 3; b < 6; ++b) k33.add_edge(a, b);
  CHECK(perfmatch_via_holant(k33) == Scalar(6));
}

TEST_CASE("budget refusal") {
  SignatureGraph g = matching_signature_graph(complete(9));  // 36 edges
  CHECK_THROWS_AS(holant(g), BudgetExceeded);
  CHECK_THROWS_AS(holant(g, {20, Strategy::kSupportFirst}), BudgetExceeded);
  CHECK_NOTHROW(holant(g, {40, Strategy::kSupportFirst}));
  SignatureGraph open;
  open.add_dangling(open.add_vertex(Signature::hw1(1)));
  CHECK_THROWS_AS(holant(open), ValidationError);
}

TEST_CASE("plain and support-first enumeration agree") {
  std::mt19937_64 rng(21);
  for (int t = 0; t < 60; ++t) {
    SignatureGraph g = testgen::random_graph(rng, 2 + t % 5, 3 + t % 8, 0, t % 2);
    CHECK(holant(g, {28, Strategy::kPlain}) == holant(g, {28, Strategy::kSupportFirst}));
  }
}

TEST_CASE("disjoint union multiplies") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 30; ++t) {
    SignatureGraph a = testgen::random_graph(rng, 3, 4), b = testgen::random_graph(rng, 3, 5);
    CHECK(holant(disjoint_union(a, b)) == holant(a) * holant(b));
  }
}

TEST_CASE("scaling one edge weight") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 30; ++t) {
    SignatureGraph g = testgen::random_graph(rng, 4, 6);
    const EdgeId e = static_cast<EdgeId>(rng() % g.edge_count());
    std::vector<std::int8_t> on(g.edge_count(), -1), off(g.edge_count(), -1);
    on[e] = 1;
    off[e] = 0;
    const Scalar h_on = holant_fixed(g, on), h_off = holant_fixed(g, off);
    CHECK(holant(g) == h_on + h_off);
    SignatureGraph s = g;
    s.set_weight(e, g.edge(e).weight * Scalar(3));
    CHECK(holant(s) == Scalar(3) * h_on + h_off);
  }
}

TEST_CASE("perfect matchings of bipartite graphs are permanents") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + t % 5;
    Matrix a(n, n);
    WeightedGraph g;
    g.vertex_count = 2 * n;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rng() % 3) {
          Scalar w = oracle::random_small(rng, t % 2);
          a(i, j) = w;
          g.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(n + j), w);
        }
    if (g.edges.size() > 28) continue;
    CHECK(perfmatch_via_holant(g) == permanent(a));
  }
}

TEST_CASE("lazy and dense cell signatures give the same holant") {
  for (auto kind : {LazyRule::Kind::kPropagate, LazyRule::Kind::kPropagateCheck}) {
    LazyRule r;
    r.kind = kind;
    r.n = 2;
    r.allowed = {{1, 2}, {2, 2}};
    Signature lazy = Signature::lazy(r);
    Signature dense = lazy.to_dense();
    for (Bits x = 0; x < 256; ++x) CHECK(lazy.eval(x) == dense.eval(x));
    // Torus of one cell: N_i joins S_i, W_i joins E_i.
    auto torus = [](const Signature& s) {
      SignatureGraph g;
      VertexId c = g.add_vertex(s);
      std::vector<EdgeId> ns, we;
      for (int i = 0; i < 2; ++i) ns.push_back(g.add_edge(c, c));
      for (int i = 0; i < 2; ++i) we.push_back(g.add_edge(c, c));
      // blocks N E S W
      g.set_incidence(c, {make_dart(ns[0], 0), make_dart(ns[1], 0), make_dart(we[0], 1), make_dart(we[1], 1),
                          make_dart(ns[0], 1), make_dart(ns[1], 1), make_dart(we[0], 0), make_dart(we[1], 0)});
      return g;
    };
    CHECK(holant(torus(lazy)) == holant(torus(dense)));
    CHECK(holant(torus(lazy)) == Scalar(kind == LazyRule::Kind::kPropagate ? 4 : 2));
  }
}

}  // namespace holant
