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
#include "holant/gridtiling.hpp"

namespace holant {

namespace {

GridTilingInstance random_instance(std::mt19937_64& rng, std::size_t n, std::size_t k, double cell_p, double elem_p) {
  GridTilingInstance t;
  t.n = n;
  t.k = k;
  std::bernoulli_distribution cell(cell_p), elem(elem_p);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (!cell(rng)) continue;
      auto& s = t.T[{i, j}];
      for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v)
          if (elem(rng)) s.insert({u, v});
    }
  return t;
}

ColoredGraph random_graph(std::mt19937_64& rng, std::size_t n, double p, std::size_t k = 1) {
  ColoredGraph g;
  g.n = n;
  for (std::size_t v = 0; v < n; ++v) g.colour.push_back(rng() % k);
  std::bernoulli_distribution e(p);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (e(rng)) g.edges.push_back({a, b});
  return g;
}

}  // namespace

TEST_CASE("tiling counts") {
  GridTilingInstance t;
  t.n = 2;
  t.k = 1;
  t.T[{0, 0}] = {{0, 0}, {1, 1}};
  CHECK(count_tilings(t) == 2);
  CHECK(parity_tilings(t) == 0);
  GridTilingInstance free;
  free.n = 2;
  free.k = 2;
  CHECK(count_tilings(free) == 16);
  CHECK(parity_tilings(free) == 0);
  std::mt19937_64 rng(3);
  for (int it = 0; it < 80; ++it) {
    auto r = random_instance(rng, 2 + rng() % 2, 1 + rng() % 2, 0.6, 0.5);
    if (r.n == 3 && r.k == 2) r.T.erase({0, 1});
    CHECK(count_tilings(r) == count_tilings_naive(r));
    CHECK(parity_tilings(r) == (count_tilings_naive(r) % 2 == 0 ? 0 : 1));
  }
  GridTilingInstance diag;
  diag.n = 3;
  diag.k = 2;
  diag.T[{0, 0}] = {{0, 1}, {2, 2}, {1, 0}};
  diag.T[{1, 1}] = {{1, 1}, {0, 2}};
  CHECK(count_tilings(diag) == count_tilings_naive(diag));
  // Larger instance against the enumeration of tilings.
  auto big = random_instance(rng, 6, 3, 0.7, 0.4);
  mpz_class listed = 0;
  for_each_tiling(big, [&](const auto&, const auto&) { ++listed; });
  CHECK(count_tilings(big) == listed);
}

TEST_CASE("budget") {
  GridTilingInstance t;
  t.n = 6;
  t.k = 3;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t u = 0; u < 6; ++u)
      for (std::size_t v = 0; v < 6; ++v) t.T[{i, i}].insert({u, v});
  CHECK_THROWS_AS(count_tilings(t, {1000}), BudgetExceeded);
}

TEST_CASE("balance") {
  GridTilingInstance t;
  t.n = 2;
  t.k = 1;
  t.T[{0, 0}] = {{0, 0}, {1, 1}};
  auto b = balance(t, Direction::kVertical);
  CHECK(b.T == 1);
  CHECK(b.instance.n == 3);
  CHECK(b.instance.T.at({0, 0}) == t.T.at({0, 0}));
  CHECK(count_tilings(b.instance) == 2);

  std::mt19937_64 rng(8);
  int checked = 0;
  for (int it = 0; it < 40; ++it) {
    auto r = random_instance(rng, 2 + rng() % 2, 2, 1.0, 0.5);
    for (Direction d : {Direction::kVertical, Direction::kHorizontal}) {
      REQUIRE(balance_keeps_tilings(r, d));
      auto bal = balance(r, d);
      CHECK(bal.instance.n == r.n + r.k * r.k * bal.T);
      for (const auto& [cell, set] : bal.instance.T) {
        std::vector<std::size_t> c(r.n, 0);
        for (auto [u, v] : set)
          if ((d == Direction::kVertical ? v : u) < r.n) ++c[d == Direction::kVertical ? v : u];
        for (auto x : c) CHECK(x == bal.T);
      }
      CHECK(count_tilings(bal.instance) == count_tilings(r));
      for_each_tiling(bal.instance, [&](const auto& rows, const auto& cols) {
        for (auto x : rows) CHECK(x < r.n);
        for (auto x : cols) CHECK(x < r.n);
      });
      ++checked;
    }
  }
  CHECK(checked == 80);

  // A lone cell on its row can pick up a dummy: the dummy argument needs neighbours.
  GridTilingInstance lone;
  lone.n = 2;
  lone.k = 1;
  lone.T[{0, 0}] = {{0, 0}, {1, 0}};
  CHECK_FALSE(balance_keeps_tilings(lone, Direction::kVertical));
  auto lb = balance(lone, Direction::kVertical);
  CHECK(lb.T == 2);
  CHECK(count_tilings(lone) == 2);
  CHECK(count_tilings(lb.instance) == 4);
}

TEST_CASE("partitioned subgraph reduction") {
  // Colourful triangle in itself.
  PartitionedSubInstance tri;
  tri.k = 3;
  tri.H = {3, {0, 1, 2}, {{0, 1}, {1, 2}, {0, 2}}};
  tri.G = tri.H;
  CHECK(count_psub(tri) == 1);
  auto gt = psub_to_gridtiling(tri);
  CHECK(gt.T.size() == 2 * 3 + 3);
  CHECK(count_tilings(gt) == 1);

  // Path on three colours, two vertices per colour, complete between classes.
  PartitionedSubInstance path;
  path.k = 3;
  path.H = {3, {0, 1, 2}, {{0, 1}, {1, 2}}};
  path.G.n = 6;
  path.G.colour = {0, 0, 1, 1, 2, 2};
  for (std::size_t a = 0; a < 6; ++a)
    for (std::size_t b = a + 1; b < 6; ++b)
      if (path.G.colour[a] != path.G.colour[b]) path.G.edges.push_back({a, b});
  CHECK(count_psub(path) == 8);
  auto pt = psub_to_gridtiling(path);
  CHECK(pt.T.size() == 2 * 2 + 3);
  CHECK(count_tilings(pt) == 8);

  std::mt19937_64 rng(17);
  for (int it = 0; it < 60; ++it) {
    std::size_t k = 2 + rng() % 2;
    PartitionedSubInstance p;
    p.k = k;
    p.H.n = k;
    for (std::size_t i = 0; i < k; ++i) p.H.colour.push_back(i);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j)
        if (rng() % 3) p.H.edges.push_back({i, j});
    p.G = random_graph(rng, 3 + rng() % 5, 0.5, k);
    CHECK(count_psub(p) == count_tilings(psub_to_gridtiling(p)));
    CHECK(count_psub(p) == count_psub(preprocess(p)));
  }
}

TEST_CASE("clique reduction") {
  ColoredGraph k4{4, {0, 0, 0, 0}, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto r = clique_to_psub(k4, 3);
  CHECK(r.multiplier == 6);
  CHECK(count_cliques(k4, 3) == 4);
  CHECK(count_psub(r.instance) == 24);
  ColoredGraph c5{5, {0, 0, 0, 0, 0}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}};
  CHECK(count_psub(clique_to_psub(c5, 3).instance) == 0);
  ColoredGraph k3{3, {0, 0, 0}, {{0, 1}, {1, 2}, {0, 2}}};
  CHECK(count_psub(clique_to_psub(k3, 3).instance) == 6);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 30; ++it) {
    auto g = random_graph(rng, 4 + rng() % 4, 0.6);
    std::size_t k = 2 + rng() % 3;
    auto red = clique_to_psub(g, k);
    CHECK(count_psub(red.instance) == red.multiplier * count_cliques(g, k));
    CHECK(count_tilings(psub_to_gridtiling(red.instance)) == count_psub(red.instance));
  }
}

}  // namespace holant
