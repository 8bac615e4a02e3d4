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

// Grid tilings and the PartitionedSub / Clique reductions. All indices are
// 0-based: cells (i, j) in [k]^2, values (u, v) in [n]^2. File formats use
// 1-based indices.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace holant {

using Cell = std::pair<std::size_t, std::size_t>;
using Pair = std::pair<std::size_t, std::size_t>;

struct GridTilingInstance {
  std::size_t n = 0, k = 0;
  std::map<Cell, std::set<Pair>> T;  // keys form C
  void validate() const;             // throws ValidationError
};

struct TilingOptions {
  std::uint64_t max_nodes = 200'000'000;  // search nodes before BudgetExceeded
};

// Tilings a(i, j) = (r_i, c_j): row value r_i, column value c_j.
mpz_class count_tilings(const GridTilingInstance& t, const TilingOptions& opt = {});
int parity_tilings(const GridTilingInstance& t, const TilingOptions& opt = {});
// Calls f(rows, cols) for every tiling (rows/cols without a cell of C range
// over all of [n]).
void for_each_tiling(const GridTilingInstance& t,
                     const std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& f,
                     const TilingOptions& opt = {});
// Direct enumeration of all a : [k]^2 -> [n]^2 (oracle, tiny instances only).
mpz_class count_tilings_naive(const GridTilingInstance& t);

enum class Direction { kHorizontal, kVertical };

struct BalanceResult {
  GridTilingInstance instance;
  std::size_t T = 0;
};

// Pads every cell of C with dummies so that each row u (horizontal) or
// column v (vertical) of [n] holds exactly T elements; n' = n + k^2 T, and
// block B_(i,j) = n + (i k + j) T + [0, T). Dummies are the smallest indices
// of the cell's block.
BalanceResult balance(const GridTilingInstance& t, Direction d);
// Per-cell count of elements in row u / column v, or nothing if a cell of C
// is unbalanced over [n].
std::optional<std::map<Cell, std::size_t>> cell_balance(const GridTilingInstance& t, Direction d);
// Sufficient condition for balance() to keep the tiling set: no row
// (vertical) or column (horizontal) without cells of C, and none with a
// single cell of C.
bool balance_keeps_tilings(const GridTilingInstance& t, Direction d);

struct ColoredGraph {
  std::size_t n = 0;
  std::vector<std::size_t> colour;  // per vertex, in [k]
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct PartitionedSubInstance {
  std::size_t k = 0;
  ColoredGraph H;  // colourful: vertex i has colour i
  ColoredGraph G;
  void validate() const;
};

// Drops edges of G between colour classes that are not adjacent in H.
PartitionedSubInstance preprocess(const PartitionedSubInstance& p);
mpz_class count_psub(const PartitionedSubInstance& p, const TilingOptions& opt = {});
GridTilingInstance psub_to_gridtiling(const PartitionedSubInstance& p);

struct CliqueReduction {
  PartitionedSubInstance instance;
  mpz_class multiplier;  // k!
};
// g uncoloured (colour field ignored).
CliqueReduction clique_to_psub(const ColoredGraph& g, std::size_t k);
mpz_class count_cliques(const ColoredGraph& g, std::size_t k);

}  // namespace holant
