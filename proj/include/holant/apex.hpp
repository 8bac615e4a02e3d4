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

// Grid-tiling counts as Holants of a planar cell graph, the cell gates that
// realize the cell signatures, and the apex branch graphs whose weighted
// PerfMatch sum recovers the tiling count.
//
// Cell inputs have arity 4n, split into blocks x_N x_E x_S x_W of n bits;
// inside a block the one-hot index runs 1..n from the most significant bit.
// Pairs (u, v) in this API are 0-based: u is the row value (x_W), v the
// column value (x_N).

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "holant/gate.hpp"
#include "holant/gridtiling.hpp"
#include "holant/matching.hpp"

namespace holant {

bool phi_one(Bits x, std::size_t n);
bool phi_prop(Bits x, std::size_t n);
// Blocks are n-bit one-hot or arbitrary masks, N block most significant.
Bits cell_input(std::size_t n, Bits xn, Bits xe, Bits xs, Bits xw);
Bits one_hot(std::size_t n, std::size_t index0);
// All inputs with phi_one, ascending.
std::vector<Bits> phi_one_inputs(std::size_t n);

// PROPAGATE (A empty optional) or PROPAGATE_CHECK(A); zero outside phi_one.
Signature cell_signature(std::size_t n, const std::set<Pair>* A);

struct CellGraph {
  std::size_t n = 0, k = 0;
  SignatureGraph graph;          // planar witness attached
  std::vector<VertexId> cells;   // row-major, cell (i, j) at i * k + j
  std::vector<VertexId> border;  // N_0..N_{k-1}, E_0.., S_0.., W_0..
  VertexId cell(std::size_t i, std::size_t j) const { return cells[i * k + j]; }
};

CellGraph build_cell_graph(const GridTilingInstance& t);

// Grid of n x n vertices b_(u,v); PASS except at `special` cells. Special
// cells carry `special_sig` (ACT or PRE) and are wired to two HW=1 apices via
// their dangling edges 5 and 6. `lifted` adds a dummy row above and below;
// dummy vertices are PRE with west/east forced inactive and are also apex
// wired. `minus_edge` adds a separate weight -1 edge between two HW=1
// vertices. Apices are excluded from the planar witness.
struct GridGateSpec {
  std::size_t n = 1;
  std::set<Pair> special;
  Builtin special_sig = Builtin::kAct;
  bool apices = false;
  bool lifted = false;
  bool minus_edge = false;
};
Gate build_grid_gate(const GridGateSpec& spec);

// Number of elements of A per column; nullopt when columns differ.
std::optional<std::size_t> column_balance(const std::set<Pair>& A, std::size_t n);
std::optional<std::size_t> row_balance(const std::set<Pair>& A, std::size_t n);

Gate build_phi(std::size_t n);
// Requires |A cap (*, v)| = T for all v (ValidationError otherwise).
Gate build_phi_prime(const std::set<Pair>& A, std::size_t n, std::size_t T);
// (T/2) Sig(phi) + (1/2) Sig(phi'), target PROPAGATE_CHECK(A).
LinearCombination g_combination(const std::set<Pair>& A, std::size_t n, std::size_t T);

// Inserts gates[c] at cell c of the cell graph (all cells), keeping the
// planar witness; apices end up as the witness's excluded vertices.
SignatureGraph assemble_cells(const CellGraph& cg, const std::vector<const Gate*>& gates);
std::size_t count_apices(const SignatureGraph& g);

struct ApexBranch {
  std::vector<std::size_t> omega;  // per cell of C in map order, values 1 or 2
  Scalar coefficient;
  SignatureGraph graph;
  std::size_t apices = 0;
};

// Per-cell constants T_kappa from vertical balance of each T(kappa); throws
// ValidationError when some T(kappa) is unbalanced.
std::vector<std::size_t> vertical_constants(const GridTilingInstance& t);

// 2^|C| branches; `flat` realizes PASS/ACT by their matchgates.
std::vector<ApexBranch> apex_branch_graphs(const GridTilingInstance& t, bool flat = true);

struct BranchShape {
  bool bipartite = false;
  bool apices_independent = false;
  bool one_apex_per_vertex = false;  // every non-apex touches <= 1 apex
  bool weights_in_set = false;       // weights in {-1, 1/2, 1} (or {-1, 1})
  bool nonunit_off_apex = false;
  bool ok() const {
    return bipartite && apices_independent && one_apex_per_vertex && weights_in_set && nonunit_off_apex;
  }
};
// allow_half: whether 1/2 is an admissible weight.
BranchShape branch_shape(const SignatureGraph& flat, bool allow_half);

struct ApexVerifyOptions {
  bool abstract = false;  // Holant of the unflattened branch graphs
  unsigned jobs = 1;
  EnumerationOptions enumeration{4096, Strategy::kSupportFirst};
};

struct CombinedReport {
  struct Row {
    std::vector<std::size_t> omega;
    Scalar coefficient;
    Scalar value;  // PerfMatch(H_omega) or Holant of the abstract graph
    std::size_t vertices = 0, edges = 0, apices = 0;
    BranchShape shape;
    std::size_t fkt_calls = 0;
  };
  mpz_class tilings;
  std::optional<Scalar> holant;  // Holant of the cell graph, when within budget
  Scalar rhs;
  std::vector<Row> rows;
  bool abstract = false;
  bool ok() const;
  std::string dump() const;
};

CombinedReport verify_combined_gridtiling(const GridTilingInstance& t, const ApexVerifyOptions& opt = {});

}  // namespace holant
