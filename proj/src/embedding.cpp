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

#include "holant/embedding.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "holant/error.hpp"

namespace holant {

namespace {

VertexId dart_tail(const std::vector<std::pair<VertexId, VertexId>>& ends, Dart d) {
  const auto& [u, v] = ends[dart_edge(d)];
  return dart_side(d) == 0 ? u : v;
}

// Position of every dart in its rotation list; throws on inconsistency.
std::vector<std::uint32_t> dart_positions(std::size_t vertex_count,
                                          const std::vector<std::pair<VertexId, VertexId>>& ends,
                                          const Rotation& rotation) {
  if (rotation.size() != vertex_count)
    throw EmbeddingError("rotation system covers " + std::to_string(rotation.size()) + " of " +
                         std::to_string(vertex_count) + " vertices");
  const std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> pos(2 * ends.size(), kUnset);
  for (VertexId w = 0; w < vertex_count; ++w) {
    for (std::uint32_t i = 0; i < rotation[w].size(); ++i) {
      Dart d = rotation[w][i];
      if (dart_edge(d) >= ends.size()) throw EmbeddingError("rotation names an unknown edge");
      if (dart_tail(ends, d) != w)
        throw EmbeddingError("dart of edge " + std::to_string(dart_edge(d)) + " listed at wrong vertex " +
                             std::to_string(w));
      if (pos[d] != kUnset) throw EmbeddingError("dart listed twice in rotation system");
      pos[d] = i;
    }
  }
  for (Dart d = 0; d < pos.size(); ++d)
    if (pos[d] == kUnset) throw EmbeddingError("edge " + std::to_string(dart_edge(d)) + " missing from rotation");
  return pos;
}

}  // namespace

std::vector<std::vector<Dart>> trace_faces(std::size_t vertex_count,
                                           const std::vector<std::pair<VertexId, VertexId>>& ends,
                                           const Rotation& rotation) {
  auto pos = dart_positions(vertex_count, ends, rotation);
  std::vector<char> seen(2 * ends.size(), 0);
  std::vector<std::vector<Dart>> faces;
  for (Dart start = 0; start < seen.size(); ++start) {
    if (seen[start]) continue;
    std::vector<Dart> face;
    Dart d = start;
    while (!seen[d]) {
      seen[d] = 1;
      face.push_back(d);
      Dart r = dart_rev(d);
      const auto& rot = rotation[dart_tail(ends, r)];
      d = rot[(pos[r] + 1) % rot.size()];
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

EulerReport euler_check(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& ends,
                        const Rotation& rotation) {
  EulerReport rep;
  std::vector<std::vector<Dart>> faces;
  try {
    faces = trace_faces(vertex_count, ends, rotation);
  } catch (const EmbeddingError& e) {
    rep.message = e.what();
    return rep;
  }
  std::vector<VertexId> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : ends) parent[find(u)] = find(v);
  std::vector<long> chi(vertex_count, 0);
  for (VertexId w = 0; w < vertex_count; ++w) chi[find(w)] += 1;
  for (const auto& [u, v] : ends) chi[find(u)] -= 1;
  for (const auto& f : faces) chi[find(dart_tail(ends, f[0]))] += 1;
  for (VertexId w = 0; w < vertex_count; ++w) {
    if (find(w) != w) continue;
    ++rep.components;
    // An isolated vertex has no darts and therefore no traced face.
    bool isolated = rotation[w].empty();
    long expected = isolated ? 1 : 2;
    if (chi[w] != expected) {
      rep.message = "Euler check failed on component of vertex " + std::to_string(w) +
                    " (V - E + F = " + std::to_string(chi[w] + (isolated ? 1 : 0)) + ")";
      return rep;
    }
  }
  rep.faces = faces.size();
  rep.ok = true;
  return rep;
}

std::vector<Dart> clockwise_order(std::vector<std::pair<Dart, Point>> darts) {
  auto half = [](const Point& p) {
    int sx = p.x.sign(), sy = p.y.sign();
    if (sx == 0 && sy == 0) throw EmbeddingError("zero direction vector");
    return (sx > 0 || (sx == 0 && sy > 0)) ? 0 : 1;
  };
  auto before = [&](const std::pair<Dart, Point>& a, const std::pair<Dart, Point>& b) {
    int ha = half(a.second), hb = half(b.second);
    if (ha != hb) return ha < hb;
    Rational cross = a.second.x * b.second.y - a.second.y * b.second.x;
    return cross.sign() < 0;
  };
  std::sort(darts.begin(), darts.end(), before);
  for (std::size_t i = 0; i + 1 < darts.size(); ++i)
    if (!before(darts[i], darts[i + 1]))
      throw EmbeddingError("two darts leave a vertex in the same direction");
  std::vector<Dart> out;
  out.reserve(darts.size());
  for (auto& [d, p] : darts) out.push_back(d);
  return out;
}

}  // namespace holant
