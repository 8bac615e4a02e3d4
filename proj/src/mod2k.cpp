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


#include "holant/mod2k.hpp"

#include <bit>
#include <sstream>

#include "holant/error.hpp"
#include "holant/matchgates.hpp"
#include "holant/parallel.hpp"

namespace holant {

namespace {

Bits block(Bits x, std::size_t n, int index) {
  return (x >> (n * static_cast<std::size_t>(3 - index))) & ((Bits{1} << n) - 1);
}

// 0-based one-hot position, or -1.
long hot(Bits b, std::size_t n) {
  if (std::popcount(b) != 1) return -1;
  return static_cast<long>(n) - 1 - std::countr_zero(b);
}

long choose2(long a) { return a * (a - 1) / 2; }

}  // namespace

GammaGate build_gamma(const std::set<Pair>& A, std::size_t n, GammaVariant variant, bool require_balance) {
  if (require_balance && !row_balance(A, n))
    throw ValidationError("gamma: every row of A must hold the same number of elements");
  GridGateSpec s;
  s.n = n;
  s.special = A;
  s.special_sig = Builtin::kPre;
  s.apices = true;
  s.lifted = variant == GammaVariant::kLifted;
  return GammaGate{build_grid_gate(s), A, n, variant};
}

long PolyEnv::q(std::size_t u) const {
  long t = 0;
  for (std::size_t z = 0; z < n; ++z) t += alpha(u, z) * beta(u, z) - choose2(alpha(u, z)) - choose2(beta(u, z));
  return t;
}

long PolyEnv::p(std::size_t u, std::size_t v, std::size_t w) const {
  return (alpha(u, v) - beta(u, v)) * (beta(u, w) - alpha(u, w));
}

long PolyEnv::r(std::size_t u, std::size_t v) const {
  long t = 0;
  for (std::size_t z = 0; z < n; ++z)
    if (z != v && A.count({u, z})) t += beta(u, z);
  return t;
}

long PolyEnv::s(std::size_t u, std::size_t v) const {
  long t = 0;
  for (std::size_t z = 0; z < n; ++z)
    if (z != v && A.count({u, z})) t += alpha(u, z);
  return t;
}

long PolyEnv::gamma_value(Bits x) const {
  if (!phi_one(x, n)) throw ValidationError("gamma_value: input fails phi_one");
  Bits xn = block(x, n, 0), xe = block(x, n, 1), xs = block(x, n, 2), xw = block(x, n, 3);
  if (xw != xe || std::popcount(xs) != 1) return 0;
  const auto u = static_cast<std::size_t>(hot(xw, n)), v = static_cast<std::size_t>(hot(xn, n)),
             w = static_cast<std::size_t>(hot(xs, n));
  const bool in_v = A.count({u, v}) > 0;
  if (v == w) {
    long base = q(u) - r(u, v) - s(u, v);
    return in_v ? base + 1 : base - alpha(u, v) - beta(u, v);
  }
  const bool in_w = A.count({u, w}) > 0;
  long val = p(u, v, w);
  if (in_w) val += alpha(u, v) - beta(u, v);
  if (in_v) val += beta(u, w) - alpha(u, w);
  if (in_v && in_w) val += 1;
  return val;
}

PolyEnv poly_env(const std::set<Pair>& A, std::size_t n, bool lifted) {
  for (const auto& pr : A)
    if (pr.first >= n || pr.second >= n) throw ValidationError("poly_env: pair outside [n]^2");
  PolyEnv e;
  e.n = n;
  e.A = A;
  e.lifted = lifted;
  e.alpha_.assign(n * n, lifted ? 1 : 0);
  e.beta_.assign(n * n, lifted ? 1 : 0);
  for (const auto& [a, v] : A)
    for (std::size_t u = 0; u < n; ++u) {
      if (a < u) ++e.alpha_[u * n + v];
      if (a > u) ++e.beta_[u * n + v];
    }
  return e;
}

Signature derivative_signature(const std::set<Pair>& A, std::size_t n, std::size_t T, const EnumerationOptions& opt) {
  auto b = row_balance(A, n);
  if (!b || *b != T) throw ValidationError("derivative: every row of A must hold exactly T elements");
  if (4 * n > kMaxDenseArity) throw DimensionError("derivative: n too large for a dense table");
  const Gate base = build_gamma(A, n, GammaVariant::kBase).gate;
  const Gate up = build_gamma(A, n, GammaVariant::kLifted).gate;
  std::vector<Scalar> table(Bits{1} << 4 * n);
  const long nn = static_cast<long>(n), tt = static_cast<long>(T);
  for (Bits x : phi_one_inputs(n)) {
    Scalar d = gate_signature_value(up, x, opt) - gate_signature_value(base, x, opt);
    long want = 0;
    if (phi_prop(x, n)) {
      Pair uv{static_cast<std::size_t>(hot(block(x, n, 3), n)), static_cast<std::size_t>(hot(block(x, n, 0), n))};
      want = A.count(uv) ? nn - 2 * tt + 2 : nn - 2 * tt - 2;
    }
    if (d != Scalar(want))
      throw VerificationError("derivative: input " + bits_to_string(x, 4 * n) + " gives " + d.pretty() +
                              ", expected " + std::to_string(want));
    table[x] = d;
  }
  return Signature::dense(std::move(table));
}

LinearCombination mod_combination(const std::set<Pair>& A, std::size_t n, std::size_t T) {
  auto b = row_balance(A, n);
  if (!b || *b != T) throw ValidationError("mod_combination: every row of A must hold exactly T elements");
  const long S = static_cast<long>(n) - 2 * static_cast<long>(T) - 2;
  LinearCombination lc;
  lc.target_arity = 4 * n;
  lc.target = cell_signature(n, &A);
  lc.terms.push_back({Scalar::frac(1, 4), build_gamma(A, n, GammaVariant::kLifted).gate});
  lc.terms.push_back({Scalar::frac(-1, 4), build_gamma(A, n, GammaVariant::kBase).gate});
  lc.terms.push_back({Scalar::frac(-S, 4), build_phi(n)});
  return lc;
}

std::vector<std::size_t> horizontal_constants(const GridTilingInstance& t) {
  std::vector<std::size_t> out;
  for (const auto& [cell, set] : t.T) {
    auto b = row_balance(set, t.n);
    if (!b)
      throw ValidationError("cell (" + std::to_string(cell.first + 1) + "," + std::to_string(cell.second + 1) +
                            ") is not horizontally balanced");
    out.push_back(*b);
  }
  return out;
}

bool ModReport::ok() const {
  if (!in_range) return false;
  for (const auto& b : branches)
    if (!b.weights_pm1 || !b.bipartite) return false;
  return true;
}

std::string ModReport::dump() const {
  std::ostringstream os;
  os << "modulus=2^" << modulus_log << " M=" << M.get_str() << " sum=" << sum.str() << " parity=" << parity << "\n";
  for (const auto& b : branches) {
    os << "omega=";
    for (std::size_t i = 0; i < b.omega.size(); ++i) os << (i ? "," : "") << b.omega[i];
    os << " d=" << b.d << " e=" << b.e << " coefficient=" << b.coefficient.get_str()
       << " perfmatch=" << b.perfmatch.get_str() << " term=" << b.term.str() << " vertices=" << b.vertices
       << " apices=" << b.apices << " weights_pm1=" << b.weights_pm1 << " bipartite=" << b.bipartite << "\n";
  }
  os << (ok() ? "OK" : (in_range ? "BAD BRANCH" : "SUM NOT IN {0, M}")) << "\n";
  return os.str();
}

ModReport modulo_combination_eval(const GridTilingInstance& t, const ModOptions& opt) {
  const auto Ts = horizontal_constants(t);
  const std::size_t c = t.T.size();
  if (c > 12) throw BudgetExceeded("mod2k branches: |C| above 12");
  ModReport rep;
  rep.modulus_log = opt.modulus_log ? opt.modulus_log : static_cast<unsigned>(2 * c + 1);
  if (rep.modulus_log < 2 * c + 1)
    throw ValidationError("mod2k: modulus 2^" + std::to_string(rep.modulus_log) + " is below 2M = 2^" +
                          std::to_string(2 * c + 1));
  const unsigned m = rep.modulus_log;
  rep.M = mpz_class(1) << static_cast<mp_bitcnt_t>(2 * c);
  const CellGraph cg = build_cell_graph(t);
  const Gate phi = flatten(build_phi(t.n));
  std::vector<Gate> up, base;
  std::vector<std::size_t> cell_of;
  std::vector<long> S;
  for (const auto& [cell, set] : t.T) {
    up.push_back(flatten(build_gamma(set, t.n, GammaVariant::kLifted).gate));
    base.push_back(flatten(build_gamma(set, t.n, GammaVariant::kBase).gate));
    cell_of.push_back(cell.first * t.k + cell.second);
    S.push_back(static_cast<long>(t.n) - 2 * static_cast<long>(Ts[S.size()]) - 2);
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < c; ++i) count *= 3;
  rep.branches.resize(count);
  parallel_for(count, opt.jobs, [&](std::size_t idx) {
    ModBranch& b = rep.branches[idx];
    std::vector<const Gate*> gates(cg.cells.size(), &phi);
    b.coefficient = 1;
    for (std::size_t i = 0, rest = idx; i < c; ++i, rest /= 3) {
      std::size_t w = rest % 3 + 1;
      b.omega.push_back(w);
      if (w == 1) gates[cell_of[i]] = &up[i];
      if (w == 2) {
        gates[cell_of[i]] = &base[i];
        b.coefficient *= -1;
        ++b.d;
      }
      if (w == 3) {
        b.coefficient *= -S[i];
        ++b.e;
      }
    }
    SignatureGraph h = assemble_cells(cg, gates);
    auto shape = branch_shape(h, false);
    b.weights_pm1 = shape.weights_in_set;
    b.bipartite = shape.bipartite;
    b.vertices = h.vertex_count();
    b.apices = count_apices(h);
    auto inst = apex_instance(h);
    Scalar pm = perfmatch_apex(inst.graph, inst.apices, inst.rotation);
    if (!pm.is_real() || !pm.re().is_integer()) throw VerificationError("mod2k: non-integral PerfMatch " + pm.pretty());
    b.perfmatch = pm.re().num();
    b.term = ModScalar(b.coefficient, m) * ModScalar(b.perfmatch, m);
    if (opt.keep_graphs) b.graph = std::move(h);
  });
  rep.sum = ModScalar(0, m);
  for (const auto& b : rep.branches) rep.sum += b.term;
  mpz_class r = rep.sum.value() % (2 * rep.M);
  rep.in_range = r == 0 || r == rep.M;
  rep.parity = r == rep.M ? 1 : 0;
  return rep;
}

ModRingDemo mod_ring_demo(const mpz_class& a, const mpz_class& b, unsigned m) {
  if (b < 0) throw ValidationError("mod ring: exponent must be non-negative");
  if (!b.fits_ulong_p()) throw DimensionError("mod ring: exponent too large");
  ModScalar x(a, m), y(b, m);
  return {x + y, x * y, x.pow(b.get_ui())};
}

}  // namespace holant
