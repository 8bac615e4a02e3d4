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

// Darts, rotation systems and the Euler check.
//
// A dart is one end of an edge: dart 2e sits at the edge's first endpoint u,
// dart 2e+1 at its second endpoint v. A rotation lists, per vertex, the darts
// at that vertex in clockwise order.

#include <cstdint>
#include <optional>
#include <vector>

#include "holant/scalar.hpp"

namespace holant {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Dart = std::uint32_t;

inline Dart make_dart(EdgeId e, unsigned side) { return 2 * e + side; }
inline EdgeId dart_edge(Dart d) { return d >> 1; }
inline unsigned dart_side(Dart d) { return d & 1u; }
inline Dart dart_rev(Dart d) { return d ^ 1u; }

using Rotation = std::vector<std::vector<Dart>>;

struct EulerReport {
  bool ok = false;
  std::size_t components = 0;
  std::size_t faces = 0;
  std::string message;
};

// Checks a closed embedded graph: every dart of every edge listed exactly once
// at its own endpoint, and V - E + F = 2 on every connected component.
// `ends[e]` = (u, v) for edge e.
EulerReport euler_check(std::size_t vertex_count,
                        const std::vector<std::pair<VertexId, VertexId>>& ends,
                        const Rotation& rotation);

// Faces as dart cycles; face of dart d is followed by the successor of rev(d)
// in the clockwise order at d's head.
std::vector<std::vector<Dart>> trace_faces(std::size_t vertex_count,
                                           const std::vector<std::pair<VertexId, VertexId>>& ends,
                                           const Rotation& rotation);

// Exact planar geometry for generating rotations from drawings.
struct Point {
  Rational x, y;
};

// Sorts (dart, direction) pairs clockwise by direction angle.
std::vector<Dart> clockwise_order(std::vector<std::pair<Dart, Point>> darts);

}  // namespace holant
