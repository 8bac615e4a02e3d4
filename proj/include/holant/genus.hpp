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

// PerfMatch on graphs given by a plane model: the graph is drawn inside a
// polygon whose sides are glued in pairs. Every edge bunch leaving the polygon
// is redrawn outside it; crossings become PASS vertices, and the sign errors
// they introduce are removed by linear combinations of reweighted copies.

#include <optional>
#include <string>
#include <vector>

#include "holant/gate.hpp"
#include "holant/weighted_graph.hpp"

namespace holant {

enum class SidePattern {
  kOrientable,      // a1 a2 a1^-1 a2^-1 ... (g handles)
  kPlusProjective,  // ... then one cross cap a a
  kPlusKlein,       // ... then two cross caps a a b b
};
std::string side_pattern_name(SidePattern p);
std::optional<SidePattern> side_pattern_from_name(const std::string& s);

struct PlaneModel {
  // The whole graph. The rotation lists every dart; a bunch edge's darts sit
  // where the edge leaves (exit end) and re-enters (entry end) the polygon.
  EmbeddedGraph graph;
  // Per bunch, the darts at the exit ends in the order the exits are met
  // walking the polygon boundary counterclockwise.
  std::vector<std::vector<Dart>> bunches;
  SidePattern pattern = SidePattern::kOrientable;

  std::size_t cross_caps() const;
  std::size_t handles() const;
  // Throws ValidationError on a malformed model (the planarity of the
  // polygon drawing is checked when constituents are built).
  void validate() const;
};

// Darts of G at the polygon boundary slots, counterclockwise.
std::vector<Dart> boundary_slots(const PlaneModel& pm);

// Cap gates: dangling edges ordered x1, x2, y1, y2 (grid cap), x, y (cross
// cap) or x1..xm, y1..ym (grated cross cap), outer order the same.
Gate build_grid_cap_gate(std::size_t d1, std::size_t d2);
Gate build_cross_cap_gate(std::size_t d);
Gate build_grated_cross_cap_gate(const std::vector<std::size_t>& sizes);

// The glued (identity) functions the caps stand for.
Signature grid_cap_target(std::size_t d1, std::size_t d2);
Signature cross_cap_target(std::size_t d);
Signature grated_cross_cap_target(const std::vector<std::size_t>& sizes);

// A linear combination of the crossing gate with per-bunch edge weights: term
// t contributes coefficient * prod_b bunch_weight[b]^(active edges of bunch b).
struct CapTerm {
  Scalar coefficient;
  std::vector<Scalar> bunch_weight;
};
struct CapExpansion {
  std::vector<CapTerm> terms;
};

CapExpansion grid_cap_expansion();
CapExpansion cross_cap_expansion();
// Solved over the 2^m per-bunch weightings by +-1; certified by exhaustive
// contraction against the gate (throws VerificationError if that fails).
// At most 4 bunches.
CapExpansion grated_cross_cap_expansion(const std::vector<std::size_t>& sizes);

// sum_t coefficient_t * prod_b w_tb^(hw of x on the positions of bunch b) * c(x).
// bunch_of[pos] is the bunch of an exit position, or -1 for entry positions.
Signature contract(const CapExpansion& e, const Signature& c, const std::vector<int>& bunch_of);

// Constituent `theta` (one term index per cap: handles first, then cross
// caps): the planar graph with PASS at every crossing and bunch weights
// applied. Carries a planar witness.
SignatureGraph genus_constituent(const PlaneModel& pm, const std::vector<std::size_t>& theta);

struct GenusResult {
  Scalar value;
  std::size_t constituents = 0;
  std::size_t crossings = 0;
  std::size_t flat_vertices = 0;  // largest flattened constituent
};

// Exact PerfMatch of the modelled graph; 4^g * 2^(cross caps) constituents,
// each flattened to an HW=1 plane graph and counted by FKT. With real edge
// weights the imaginary parts must cancel; otherwise VerificationError.
GenusResult genus_perfmatch(const PlaneModel& pm, unsigned jobs = 1);

// Fixtures.
PlaneModel toroidal_grid_model(std::size_t rows, std::size_t cols);
PlaneModel projective_grid_model(std::size_t rows, std::size_t cols);
PlaneModel klein_grid_model(std::size_t n);
PlaneModel k33_torus_model();
PlaneModel k33_projective_model();

}  // namespace holant
