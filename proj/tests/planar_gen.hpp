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

#include <algorithm>
#include <random>
#include <set>

#include "holant/embedding.hpp"
#include "holant/weighted_graph.hpp"
#include "oracles.hpp"

namespace testgen {

using namespace holant;

struct IPt {
  long x, y;
};

inline long cross(IPt o, IPt a, IPt b) { return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x); }

inline bool on_segment(IPt p, IPt a, IPt b) {
  return cross(a, b, p) == 0 && std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

// Segments ab and cd meet somewhere other than a shared endpoint.
inline bool segments_clash(IPt a, IPt b, IPt c, IPt d) {
  auto same = [](IPt p, IPt q) { return p.x == q.x && p.y == q.y; };
  int shared = same(a, c) + same(a, d) + same(b, c) + same(b, d);
  long d1 = cross(c, d, a), d2 = cross(c, d, b), d3 = cross(a, b, c), d4 = cross(a, b, d);
  if (shared) {
    // Collinear overlap from a common endpoint.
    return d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0 &&
           ((!same(a, c) && !same(a, d) && on_segment(a, c, d)) || (!same(b, c) && !same(b, d) && on_segment(b, c, d)) ||
            (!same(c, a) && !same(c, b) && on_segment(c, a, b)) || (!same(d, a) && !same(d, b) && on_segment(d, a, b)));
  }
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) return true;
  return on_segment(a, c, d) || on_segment(b, c, d) || on_segment(c, a, b) || on_segment(d, a, b);
}

inline Rotation rotation_from_drawing(const WeightedGraph& g, const std::vector<IPt>& pos) {
  std::vector<std::vector<std::pair<Dart, Point>>> darts(g.vertex_count);
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    IPt a = pos[g.edges[e].u], b = pos[g.edges[e].v];
    darts[g.edges[e].u].push_back({make_dart(e, 0), Point{Rational(b.x - a.x), Rational(b.y - a.y)}});
    darts[g.edges[e].v].push_back({make_dart(e, 1), Point{Rational(a.x - b.x), Rational(a.y - b.y)}});
  }
  Rotation r(g.vertex_count);
  for (VertexId v = 0; v < g.vertex_count; ++v) r[v] = clockwise_order(darts[v]);
  return r;
}

// Random straight-line plane graph on n distinct grid points, keeping each
// admissible segment with probability `density`. Weights random (Gaussian if
// asked, zero now and then).
inline EmbeddedGraph random_plane_graph(std::mt19937_64& rng, std::size_t n, double density, bool gaussian = false,
                                        std::vector<IPt>* drawing = nullptr) {
  const long side = static_cast<long>(2 * n + 2);
  std::uniform_int_distribution<long> coord(0, side);
  std::set<std::pair<long, long>> used;
  std::vector<IPt> pos;
  while (pos.size() < n) {
    IPt p{coord(rng), coord(rng)};
    if (used.insert({p.x, p.y}).second) pos.push_back(p);
  }
  std::vector<std::pair<VertexId, VertexId>> cand;
  for (VertexId a = 0; a < n; ++a)
    for (VertexId b = a + 1; b < n; ++b) cand.emplace_back(a, b);
  std::shuffle(cand.begin(), cand.end(), rng);
  std::bernoulli_distribution keep(density);
  EmbeddedGraph out;
  out.graph.vertex_count = n;
  for (auto [a, b] : cand) {
    bool ok = true;
    for (VertexId c = 0; c < n && ok; ++c)
      if (c != a && c != b && on_segment(pos[c], pos[a], pos[b])) ok = false;
    for (const auto& e : out.graph.edges) {
      if (!ok) break;
      if (segments_clash(pos[a], pos[b], pos[e.u], pos[e.v])) ok = false;
    }
    if (!ok || !keep(rng)) continue;
    Scalar w = rng() % 7 == 0 ? Scalar(0) : oracle::random_small(rng, gaussian);
    if (rng() % 2) out.graph.add_edge(a, b, w);
    else out.graph.add_edge(b, a, w);
  }
  out.rotation = rotation_from_drawing(out.graph, pos);
  if (drawing) *drawing = pos;
  return out;
}

// Adds a parallel copy of edge e drawn next to it and a self-loop at vertex x;
// both keep the embedding plane.
inline void add_parallel(EmbeddedGraph& g, EdgeId e, Scalar w) {
  auto [u, v] = std::pair{g.graph.edges[e].u, g.graph.edges[e].v};
  EdgeId f = g.graph.add_edge(u, v, std::move(w));
  auto& ru = g.rotation[u];
  ru.insert(std::find(ru.begin(), ru.end(), make_dart(e, 0)) + 1, make_dart(f, 0));
  auto& rv = g.rotation[v];
  rv.insert(std::find(rv.begin(), rv.end(), make_dart(e, 1)), make_dart(f, 1));
}

inline void add_loop(EmbeddedGraph& g, VertexId x, Scalar w) {
  EdgeId f = g.graph.add_edge(x, x, std::move(w));
  g.rotation[x].push_back(make_dart(f, 0));
  g.rotation[x].push_back(make_dart(f, 1));
}

}  // namespace testgen
