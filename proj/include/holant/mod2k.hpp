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

// Grid-tiling parity from PerfMatch values reduced modulo a power of two.
// Cells of C use the PRE-based gates Gamma(A) and Gamma_up(A) (two dummy
// rows), whose difference is a discrete derivative of the polynomial
// signature of Gamma. All branch graphs carry weights in {-1, 1}.
//
// Pairs are 0-based (row value u, column value v) as in apex.hpp.

#include <string>
#include <vector>

#include "holant/apex.hpp"

namespace holant {

enum class GammaVariant { kBase, kLifted };

struct GammaGate {
  Gate gate;
  std::set<Pair> A;
  std::size_t n = 0;
  GammaVariant variant = GammaVariant::kBase;
};

// require_balance: |A cap (u, *)| equal for all rows u (ValidationError).
GammaGate build_gamma(const std::set<Pair>& A, std::size_t n, GammaVariant variant, bool require_balance = true);

// PRE counts above (alpha) and below (beta) each position of a column, and
// the derived polynomials. Lifted environments count one more PRE on each
// side, matching the dummy rows.
struct PolyEnv {
  std::size_t n = 0;
  std::set<Pair> A;
  bool lifted = false;
  std::vector<long> alpha_, beta_;  // row-major n x n

  long alpha(std::size_t u, std::size_t v) const { return alpha_[u * n + v]; }
  long beta(std::size_t u, std::size_t v) const { return beta_[u * n + v]; }
  long q(std::size_t u) const;
  long p(std::size_t u, std::size_t v, std::size_t w) const;
  long r(std::size_t u, std::size_t v) const;
  long s(std::size_t u, std::size_t v) const;
  // Signature of Gamma predicted by the six-case table; x must satisfy phi_one.
  long gamma_value(Bits x) const;
};

PolyEnv poly_env(const std::set<Pair>& A, std::size_t n, bool lifted);

// Sig(Gamma_up) - Sig(Gamma) on phi_one inputs (zero elsewhere), checked
// against {0, n-2T-2, n-2T+2}; VerificationError on a mismatch.
Signature derivative_signature(const std::set<Pair>& A, std::size_t n, std::size_t T,
                               const EnumerationOptions& opt = {4096, Strategy::kSupportFirst});

// (Sig(Gamma_up) - Sig(Gamma) - S Sig(phi)) / 4 with S = n - 2T - 2.
LinearCombination mod_combination(const std::set<Pair>& A, std::size_t n, std::size_t T);

// Per-cell constants T_kappa from horizontal balance; ValidationError otherwise.
std::vector<std::size_t> horizontal_constants(const GridTilingInstance& t);

struct ModBranch {
  std::vector<std::size_t> omega;  // per cell of C, values 1 (lifted), 2 (base), 3 (phi)
  std::size_t d = 0, e = 0;        // number of 2-entries, 3-entries
  mpz_class coefficient;           // prod over cells of 1, -1, -S_kappa (exact)
  mpz_class perfmatch;             // exact
  ModScalar term{0, 1};            // coefficient * perfmatch in Z/2^m
  std::size_t vertices = 0, apices = 0;
  bool weights_pm1 = false;
  bool bipartite = false;
  std::optional<SignatureGraph> graph;  // H_omega, with ModOptions::keep_graphs
};

struct ModOptions {
  unsigned modulus_log = 0;  // 0: 2|C| + 1
  unsigned jobs = 1;
  bool keep_graphs = false;
};

struct ModReport {
  unsigned modulus_log = 0;
  mpz_class M;  // 2^(2|C|)
  ModScalar sum{0, 1};
  int parity = 0;
  bool in_range = false;  // sum mod 2M in {0, M}
  std::vector<ModBranch> branches;
  bool ok() const;
  std::string dump() const;
};

ModReport modulo_combination_eval(const GridTilingInstance& t, const ModOptions& opt = {});

struct ModRingDemo {
  ModScalar sum, product, power;
};
ModRingDemo mod_ring_demo(const mpz_class& a, const mpz_class& b, unsigned m);

}  // namespace holant
