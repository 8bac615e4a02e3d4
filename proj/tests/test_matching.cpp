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


#include <cmath>
#include <random>

#include "doctest.h"
#include "holant/error.hpp"
#include "holant/holant.hpp"
#include "holant/matching.hpp"
#include "oracles.hpp"
#include "planar_gen.hpp"

namespace holant {

namespace {

EmbeddedGraph grid(std::size_t rows, std::size_t cols) {
  WeightedGraph g;
  g.vertex_count = rows * cols;
  std::vector<testgen::IPt> pos;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) pos.push_back({long(c), -long(r)});
  auto id = [&](std::size_t r, std::size_t c) { return VertexId(r * cols + c); };
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      if (c + 1 < cols) g.add_edge(id(r, c), id(r, c + 1));
      if (r + 1 < rows) g.add_edge(id(r, c), id(r + 1, c));
    }
  EmbeddedGraph out{g, testgen::rotation_from_drawing(g, pos)};
  return out;
}

WeightedGraph complete(std::size_t n) {
  WeightedGraph g;
  g.vertex_count = n;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) g.add_edge(a, b);
  return g;
}

}  // namespace

TEST_CASE("bruteforce small values") {
  CHECK(perfmatch_bruteforce(WeightedGraph{}) == Scalar(1));
  CHECK(perfmatch_bruteforce(complete(3)) == Scalar(0));
  CHECK(perfmatch_bruteforce(complete(4)) == Scalar(3));
  CHECK(perfmatch_bruteforce(complete(6)) == Scalar(15));
  WeightedGraph c4;
  c4.vertex_count = 4;
  c4.add_edge(0, 1, 2);
  c4.add_edge(1, 2, 3);
  c4.add_edge(2, 3, 5);
  c4.add_edge(3, 0, 7);
  CHECK(perfmatch_bruteforce(c4) == Scalar(2 * 5 + 3 * 7));
  c4.add_edge(0, 0, 11);  // loops never match
  CHECK(perfmatch_bruteforce(c4) == Scalar(31));
  c4.add_edge(0, 1, -2);  // parallel edges add up
  CHECK(perfmatch_bruteforce(c4) == Scalar(21));
}

TEST_CASE("bruteforce agrees with the exhaustive oracle") {
  std::mt19937_64 rng(11);
  for (int it = 0; it < 60; ++it) {
    WeightedGraph g;
    g.vertex_count = 2 + rng() % 8;
    std::size_t ne = rng() % 16;
    for (std::size_t i = 0; i < ne; ++i)
      g.add_edge(VertexId(rng() % g.vertex_count), VertexId(rng() % g.vertex_count),
                 oracle::random_small(rng, it % 2));
    CHECK(perfmatch_bruteforce(g) == oracle::naive_perfmatch(g));
  }
}

TEST_CASE("domino tilings of grids") {
  CHECK(perfmatch_fkt(grid(2, 2)) == Scalar(2));
  CHECK(perfmatch_fkt(grid(2, 3)) == Scalar(3));
  CHECK(perfmatch_fkt(grid(3, 4)) == Scalar(11));
  CHECK(perfmatch_fkt(grid(4, 4)) == Scalar(36));
  CHECK(perfmatch_fkt(grid(6, 6)) == Scalar(6728));
  CHECK(perfmatch_fkt(grid(8, 8)) == Scalar(12988816));
  CHECK(perfmatch_fkt(grid(3, 3)) == Scalar(0));
  // Product formula over the grid eigenvalues.
  for (std::size_t m = 1; m <= 10; ++m)
    for (std::size_t n = m; n <= 10; ++n) {
      long double prod = 1;
      const long double pi = 3.14159265358979323846264338327950288L;
      for (std::size_t j = 1; j <= (m + 1) / 2; ++j)
        for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
          long double a = std::cos(pi * j / (m + 1)), b = std::cos(pi * k / (n + 1));
          prod *= 4 * a * a + 4 * b * b;
        }
      long want = (m * n) % 2 ? 0 : std::lround(prod);
      CHECK(perfmatch_fkt(grid(m, n)) == Scalar(want));
    }
}

TEST_CASE("fkt agrees with bruteforce on random plane graphs") {
  std::mt19937_64 rng(2026);
  int nonzero = 0;
  for (int it = 0; it < 240; ++it) {
    std::size_t n = rng() % 15;
    double density = 0.3 + 0.7 * double(rng() % 100) / 100.0;
    auto g = testgen::random_plane_graph(rng, n, density, it % 3 == 0);
    if (it % 5 == 0 && !g.graph.edges.empty()) testgen::add_parallel(g, EdgeId(rng() % g.graph.edges.size()), Scalar(3));
    if (it % 7 == 0 && n > 0) testgen::add_loop(g, VertexId(rng() % n), Scalar(5));
    REQUIRE(euler_check(g.graph.vertex_count, g.graph.ends(), g.rotation).ok);
    Scalar want = perfmatch_bruteforce(g.graph);
    Scalar got = perfmatch_fkt(g);
    CHECK(got == want);
    if (!want.is_zero()) ++nonzero;
    auto o = pfaffian_orientation(g);
    CHECK(check_pfaffian_orientation(g, o).ok);
  }
  CHECK(nonzero > 60);
}

TEST_CASE("orientation check rejects a bad orientation") {
  auto g = grid(2, 2);
  auto o = pfaffian_orientation(g);
  auto fp = check_pfaffian_orientation(g, o);
  REQUIRE(fp.ok);
  std::size_t inner = 0;
  for (char c : fp.outer) inner += !c;
  CHECK(inner == 1);
  o.forward[0] = !o.forward[0];
  CHECK_FALSE(check_pfaffian_orientation(g, o).ok);
}

TEST_CASE("disconnected and degenerate inputs") {
  EmbeddedGraph empty;
  CHECK(perfmatch_fkt(empty) == Scalar(1));
  EmbeddedGraph one;
  one.graph.vertex_count = 1;
  one.rotation.resize(1);
  CHECK(perfmatch_fkt(one) == Scalar(0));
  // Two disjoint 4-cycles with a weighted edge.
  auto a = grid(2, 2);
  WeightedGraph g;
  g.vertex_count = 8;
  Rotation rot(8);
  for (int copy = 0; copy < 2; ++copy)
    for (EdgeId e = 0; e < a.graph.edges.size(); ++e)
      g.add_edge(a.graph.edges[e].u + 4 * copy, a.graph.edges[e].v + 4 * copy, copy ? Scalar(2) : Scalar(1));
  for (int copy = 0; copy < 2; ++copy)
    for (VertexId v = 0; v < 4; ++v)
      for (Dart d : a.rotation[v]) rot[v + 4 * copy].push_back(d + 2 * 4 * copy);
  CHECK(perfmatch_fkt({g, rot}) == Scalar(2 * 8));
}

TEST_CASE("non-planar rotation is refused") {
  WeightedGraph k33;
  k33.vertex_count = 6;
  for (VertexId a = 0; a < 3; ++a)
    for (VertexId b = 3; b < 6; ++b) k33.add_edge(a, b);
  Rotation rot(6);
  for (EdgeId e = 0; e < k33.edges.size(); ++e) {
    rot[k33.edges[e].u].push_back(make_dart(e, 0));
    rot[k33.edges[e].v].push_back(make_dart(e, 1));
  }
  CHECK_THROWS_AS(perfmatch_fkt({k33, rot}), EmbeddingError);
  CHECK_THROWS_AS(pfaffian_orientation({k33, rot}), EmbeddingError);
}

TEST_CASE("apex evaluation") {
  std::mt19937_64 rng(77);
  for (int it = 0; it < 120; ++it) {
    std::size_t n = 2 + rng() % 11;
    auto base = testgen::random_plane_graph(rng, n, 0.8, it % 2 == 1);
    std::size_t k = rng() % 4;
    WeightedGraph g = base.graph;
    Rotation rot = base.rotation;
    std::vector<VertexId> apices;
    for (std::size_t i = 0; i < k; ++i) {
      VertexId a = VertexId(g.vertex_count++);
      rot.emplace_back();
      apices.push_back(a);
      for (VertexId x = 0; x < a; ++x)
        if (rng() % 3 == 0) g.add_edge(a, x, oracle::random_small(rng, it % 2 == 1));
    }
    // Apices listed out of order on purpose.
    std::reverse(apices.begin(), apices.end());
    FktStats stats;
    CHECK(perfmatch_apex(g, apices, rot, &stats) == perfmatch_bruteforce(g));
    if (k == 0) CHECK(perfmatch_apex(g, {}, rot) == perfmatch_fkt({g, rot}));
  }
}

TEST_CASE("apex instance from a witnessed signature graph") {
  // K4 drawn with vertex 3 as an apex.
  WeightedGraph k4 = complete(4);
  SignatureGraph sg = matching_signature_graph(k4);
  std::vector<std::optional<Point>> pos{Point{0, 0}, Point{2, 0}, Point{1, 2}, std::nullopt};
  sg.witness = witness_from_positions(sg, pos, std::vector<std::optional<Point>>(sg.edge_count()));
  auto inst = apex_instance(sg);
  CHECK(inst.apices == std::vector<VertexId>{3});
  CHECK(perfmatch_apex(inst.graph, inst.apices, inst.rotation) == Scalar(3));
  CHECK(holant(sg) == Scalar(3));
}

TEST_CASE("bipartite test") {
  CHECK(is_bipartite(grid(3, 3).graph));
  CHECK_FALSE(is_bipartite(complete(3)));
}

}  // namespace holant
