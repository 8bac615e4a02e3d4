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

#include "holant/modular.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <utility>

#include "holant/error.hpp"

namespace holant::modular {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul_mod(r, a, p);
    a = mul_mod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw ValidationError("inverse of zero mod p");
  return pow_mod(a, p - 2, p);
}

namespace {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
    if (n % q == 0) return n == q;
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

struct PrimeTable {
  std::mutex mu;
  std::deque<PrimeInfo> primes;
  std::uint64_t next_candidate = (std::uint64_t{1} << 62) - 3;  // = 1 mod 4
};

PrimeTable& table() {
  static PrimeTable t;
  return t;
}

}  // namespace

const PrimeInfo& prime(std::size_t i) {
  PrimeTable& t = table();
  std::lock_guard<std::mutex> lock(t.mu);
  while (t.primes.size() <= i) {
    std::uint64_t c = t.next_candidate;
    while (!is_prime(c)) c -= 4;
    t.next_candidate = c - 4;
    std::uint64_t r = 0;
    for (std::uint64_t g = 2;; ++g) {
      if (pow_mod(g, (c - 1) / 2, c) == c - 1) {
        r = pow_mod(g, (c - 1) / 4, c);
        break;
      }
    }
    t.primes.push_back({c, r});
  }
  return t.primes[i];
}

std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p) {
  std::uint64_t det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      det = det ? p - det : 0;
    }
    const std::uint64_t d = a[k * n + k];
    det = mul_mod(det, d, p);
    const std::uint64_t inv = inv_mod(d, p);
    const std::uint64_t* rk = &a[k * n];
    for (std::size_t i = k + 1; i < n; ++i) {
      std::uint64_t* ri = &a[i * n];
      if (ri[k] == 0) continue;
      const std::uint64_t f = p - mul_mod(ri[k], inv, p);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (rk[j] == 0) continue;
        std::uint64_t v = ri[j] + mul_mod(f, rk[j], p);
        ri[j] = v >= p ? v - p : v;
      }
    }
  }
  return det;
}

std::uint64_t pf_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p) {
  auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };
  std::uint64_t pf = 1;
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t piv = k + 1;
    while (piv < n && at(k, piv) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k + 1) {
      for (std::size_t j = 0; j < n; ++j) std::swap(at(piv, j), at(k + 1, j));
      for (std::size_t i = 0; i < n; ++i) std::swap(at(i, piv), at(i, k + 1));
      pf = pf ? p - pf : 0;
    }
    const std::uint64_t d = at(k, k + 1);
    pf = mul_mod(pf, d, p);
    const std::uint64_t inv = inv_mod(d, p);
    // Only the upper triangle of the trailing block is maintained.
    std::vector<std::uint64_t> ak(n), bk(n);
    for (std::size_t j = k + 2; j < n; ++j) {
      ak[j] = mul_mod(at(k, j), inv, p);
      bk[j] = at(k + 1, j);
    }
    for (std::size_t i = k + 2; i < n; ++i) {
      const std::uint64_t ai = ak[i], bi = bk[i];
      if (ai == 0 && bi == 0) continue;
      std::uint64_t* ri = &a[i * n];
      const std::uint64_t nai = ai ? p - ai : 0;
      for (std::size_t j = i + 1; j < n; ++j) {
        // += (b_i a_kj - a_ki b_j) / piv
        std::uint64_t v = ri[j];
        if (bk[j]) {
          v += mul_mod(nai, bk[j], p);
          if (v >= p) v -= p;
        }
        if (ak[j]) {
          v += mul_mod(bi, ak[j], p);
          if (v >= p) v -= p;
        }
        ri[j] = v;
      }
    }
    for (std::size_t i = k + 2; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) at(j, i) = at(i, j) ? p - at(i, j) : 0;
  }
  return pf;
}

namespace {

// Min-degree sparse elimination mod p. Rows are kept as sorted
// (column, value) vectors; pivots are chosen structurally (fewest entries),
// which on planar graphs keeps the fill small.
class SparseMod {
 public:
  using Row = std::vector<std::pair<std::uint32_t, std::uint64_t>>;

  SparseMod(std::size_t n, std::uint64_t p) : n_(n), p_(p), rows_(n), alive_(n, 1), fen_(n + 1, 0) {
    for (std::size_t i = 0; i < n; ++i) fen_add(i, 1);
  }
  void set(std::uint32_t i, std::uint32_t j, std::uint64_t v) {
    if (v) rows_[i].emplace_back(j, v);
  }
  void finalize() {
    for (auto& r : rows_) std::sort(r.begin(), r.end());
    if (cols_.empty()) {
      cols_.assign(n_, {});
      for (std::uint32_t i = 0; i < n_; ++i)
        for (auto& [j, v] : rows_[i]) cols_[j].push_back(i);
    }
  }

  std::uint64_t determinant();
  std::uint64_t pfaffian();

 private:
  void fen_add(std::size_t i, int d) {
    for (++i; i <= n_; i += i & (~i + 1)) fen_[i] += d;
  }
  int rank(std::size_t i) const {  // live indices < i
    int r = 0;
    for (; i > 0; i -= i & (~i + 1)) r += fen_[i];
    return r;
  }
  std::uint64_t get(const Row& r, std::uint32_t j) const {
    auto it = std::lower_bound(r.begin(), r.end(), std::make_pair(j, std::uint64_t{0}));
    return it != r.end() && it->first == j ? it->second : 0;
  }
  // r += f * src, both sorted; returns the merged row.
  Row axpy(const Row& r, std::uint64_t f, const Row& src, std::uint32_t skip_a, std::uint32_t skip_b) const {
    Row out;
    out.reserve(r.size() + src.size());
    std::size_t a = 0, b = 0;
    while (a < r.size() || b < src.size()) {
      if (b == src.size() || (a < r.size() && r[a].first < src[b].first)) {
        out.push_back(r[a++]);
        continue;
      }
      if (src[b].first == skip_a || src[b].first == skip_b) {
        ++b;
        continue;
      }
      std::uint64_t add = mul_mod(f, src[b].second, p_);
      if (a < r.size() && r[a].first == src[b].first) {
        std::uint64_t v = r[a].second + add;
        if (v >= p_) v -= p_;
        if (v) out.emplace_back(r[a].first, v);
        ++a;
      } else {
        out.emplace_back(src[b].first, add);
      }
      ++b;
    }
    return out;
  }

  std::size_t n_;
  std::uint64_t p_;
  std::vector<Row> rows_;
  std::vector<std::vector<std::uint32_t>> cols_;  // candidate rows per column (may be stale)
  std::vector<char> alive_;
  std::vector<int> fen_;
};

std::uint64_t SparseMod::determinant() {
  finalize();
  std::vector<char> col_alive(n_, 1);
  std::vector<int> col_fen(n_ + 1, 0);
  auto cfen_add = [&](std::size_t i, int d) {
    for (++i; i <= n_; i += i & (~i + 1)) col_fen[i] += d;
  };
  auto crank = [&](std::size_t i) {
    int r = 0;
    for (; i > 0; i -= i & (~i + 1)) r += col_fen[i];
    return r;
  };
  for (std::size_t i = 0; i < n_; ++i) cfen_add(i, 1);
  std::uint64_t det = 1;
  for (std::size_t step = 0; step < n_; ++step) {
    std::uint32_t r = UINT32_MAX;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (alive_[i] && (r == UINT32_MAX || rows_[i].size() < rows_[r].size())) r = i;
    if (rows_[r].empty()) return 0;
    // pivot column: fewest candidate rows
    std::uint32_t c = rows_[r][0].first;
    for (auto& [j, v] : rows_[r])
      if (cols_[j].size() < cols_[c].size()) c = j;
    const std::uint64_t piv = get(rows_[r], c);
    const int sgn = (rank(r) + crank(c)) % 2;
    det = mul_mod(det, sgn ? p_ - piv : piv, p_);
    const std::uint64_t inv = inv_mod(piv, p_);
    const Row pivot_row = rows_[r];
    alive_[r] = 0;
    fen_add(r, -1);
    col_alive[c] = 0;
    cfen_add(c, -1);
    std::vector<std::uint32_t> touched = cols_[c];
    for (std::uint32_t r2 : touched) {
      if (!alive_[r2]) continue;
      const std::uint64_t a = get(rows_[r2], c);
      if (!a) continue;
      const std::uint64_t f = p_ - mul_mod(a, inv, p_);
      Row nr = axpy(rows_[r2], f, pivot_row, UINT32_MAX, UINT32_MAX);
      // drop column c (now zero) and register new fill
      Row clean;
      clean.reserve(nr.size());
      for (auto& e : nr)
        if (e.first != c) clean.push_back(e);
      for (auto& [j, v] : clean)
        if (!std::binary_search(rows_[r2].begin(), rows_[r2].end(), std::make_pair(j, std::uint64_t{0}),
                                [](auto& x, auto& y) { return x.first < y.first; }))
          cols_[j].push_back(r2);
      rows_[r2] = std::move(clean);
    }
    cols_[c].clear();
    // prune dead rows from the columns of the pivot row
    for (auto& [j, v] : pivot_row) {
      auto& cl = cols_[j];
      cl.erase(std::remove_if(cl.begin(), cl.end(), [&](std::uint32_t x) { return !alive_[x]; }), cl.end());
    }
  }
  return det;
}

std::uint64_t SparseMod::pfaffian() {
  finalize();
  std::uint64_t pf = 1;
  for (std::size_t step = 0; step < n_ / 2; ++step) {
    std::uint32_t i = UINT32_MAX;
    for (std::uint32_t x = 0; x < n_; ++x)
      if (alive_[x] && (i == UINT32_MAX || rows_[x].size() < rows_[i].size())) i = x;
    if (rows_[i].empty()) return 0;
    std::uint32_t j = rows_[i][0].first;
    for (auto& [y, v] : rows_[i])
      if (rows_[y].size() < rows_[j].size()) j = y;
    if (j < i) std::swap(i, j);
    const std::uint64_t a = get(rows_[i], j);  // a_ij, i < j
    const int sgn = (rank(i) + rank(j) + 1) % 2;
    pf = mul_mod(pf, sgn ? p_ - a : a, p_);
    const std::uint64_t inv = inv_mod(a, p_);
    const Row ri = rows_[i], rj = rows_[j];
    alive_[i] = alive_[j] = 0;
    fen_add(i, -1);
    fen_add(j, -1);
    // a_xy += (a_jx a_iy - a_ix a_jy) / a_ij  ==  row_x += a_jx/a_ij * row_i - a_ix/a_ij * row_j
    std::vector<std::uint32_t> nb;
    for (auto& e : ri)
      if (e.first != j) nb.push_back(e.first);
    for (auto& e : rj)
      if (e.first != i) nb.push_back(e.first);
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    for (std::uint32_t x : nb) {
      const std::uint64_t ajx = get(rj, x), aix = get(ri, x);
      Row row = rows_[x];
      // remove the entries of columns i and j
      Row base;
      base.reserve(row.size());
      for (auto& e : row)
        if (e.first != i && e.first != j) base.push_back(e);
      if (ajx) base = axpy(base, mul_mod(ajx, inv, p_), ri, i, j);
      if (aix) base = axpy(base, p_ - mul_mod(aix, inv, p_), rj, i, j);
      // the diagonal stays zero in exact arithmetic
      Row clean;
      clean.reserve(base.size());
      for (auto& e : base)
        if (e.first != x) clean.push_back(e);
      rows_[x] = std::move(clean);
    }
  }
  return pf;
}

enum class Kind { kDet, kPf };

Scalar evaluate(std::size_t n, const std::vector<SparseEntry>& entries, Kind kind) {
  if (n == 0) return 1;
  if (kind == Kind::kPf && n % 2) return 0;
  mpz_class lcm = 1;
  bool has_imag = false;
  for (const auto& e : entries) {
    if (e.i >= n || e.j >= n) throw DimensionError("sparse entry out of range");
    if (e.v.re().den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.v.re().den().get_mpz_t());
    if (!e.v.im().is_zero()) {
      has_imag = true;
      if (e.v.im().den() != 1) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), e.v.im().den().get_mpz_t());
    }
  }
  struct Scaled {
    std::uint32_t i, j;
    mpz_class re, im;
  };
  // Scale to Gaussian integers and merge duplicates; Pfaffian entries are
  // normalised to i < j.
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::pair<mpz_class, mpz_class>> merged;
  for (const auto& e : entries) {
    if (e.v.is_zero()) continue;
    std::uint32_t i = e.i, j = e.j;
    mpz_class re = e.v.re().num() * (lcm / e.v.re().den()), im = 0;
    if (has_imag) im = e.v.im().num() * (lcm / e.v.im().den());
    if (kind == Kind::kPf && i > j) {
      std::swap(i, j);
      re = -re;
      im = -im;
    }
    auto& slot = merged[{i, j}];
    slot.first += re;
    slot.second += im;
  }
  std::vector<Scaled> sc;
  sc.reserve(merged.size());
  for (auto& [ij, v] : merged)
    if (v.first != 0 || v.second != 0) sc.push_back({ij.first, ij.second, v.first, v.second});
  // Row norms; for the Pfaffian each entry lies in two rows.
  std::vector<mpz_class> norm2(n, 0);
  for (const auto& s : sc) {
    mpz_class q = s.re * s.re + s.im * s.im;
    norm2[s.i] += q;
    if (kind == Kind::kPf) norm2[s.j] += q;
  }
  std::size_t bound_bits = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (norm2[i] == 0) return 0;
    bound_bits += mpz_sizeinbase(norm2[i].get_mpz_t(), 2);
  }
  // |det| <= prod ||row||, |pf| <= prod ||row||^(1/2); one more bit for the sign.
  bound_bits = (kind == Kind::kDet ? bound_bits / 2 : bound_bits / 4) + 2;
  std::size_t prime_count = bound_bits / 61 + 1;

  mpz_class mod = 1, acc_re = 0, acc_im = 0;
  for (std::size_t t = 0; t < prime_count; ++t) {
    const PrimeInfo& pi = prime(t);
    const std::uint64_t p = pi.p;
    auto run = [&](std::uint64_t unit) {
      SparseMod m(n, p);
      for (const auto& s : sc) {
        std::uint64_t v = mpz_fdiv_ui(s.re.get_mpz_t(), p);
        if (has_imag && s.im != 0) {
          v += mul_mod(mpz_fdiv_ui(s.im.get_mpz_t(), p), unit, p);
          if (v >= p) v -= p;
        }
        m.set(s.i, s.j, v);
        if (kind == Kind::kPf) m.set(s.j, s.i, v ? p - v : 0);
      }
      return kind == Kind::kDet ? m.determinant() : m.pfaffian();
    };
    std::uint64_t r_re, r_im = 0;
    if (has_imag) {
      std::uint64_t v1 = run(pi.sqrt_minus_one);
      std::uint64_t v2 = run(p - pi.sqrt_minus_one);
      const std::uint64_t inv2 = (p + 1) / 2;
      std::uint64_t s = v1 + v2;
      if (s >= p) s -= p;
      r_re = mul_mod(s, inv2, p);
      std::uint64_t d = v1 >= v2 ? v1 - v2 : v1 + p - v2;
      r_im = mul_mod(d, inv_mod(mul_mod(2, pi.sqrt_minus_one, p), p), p);
    } else {
      r_re = run(0);
    }
    auto combine = [&](mpz_class& acc, std::uint64_t r) {
      std::uint64_t cur = mpz_fdiv_ui(acc.get_mpz_t(), p);
      std::uint64_t diff = r >= cur ? r - cur : r + p - cur;
      std::uint64_t mm = mpz_fdiv_ui(mod.get_mpz_t(), p);
      std::uint64_t k = mul_mod(diff, inv_mod(mm, p), p);
      acc += mod * mpz_class(static_cast<unsigned long>(k));
    };
    combine(acc_re, r_re);
    if (has_imag) combine(acc_im, r_im);
    mod *= mpz_class(static_cast<unsigned long>(p));
  }
  mpz_class half = mod / 2;
  if (acc_re > half) acc_re -= mod;
  if (acc_im > half) acc_im -= mod;
  mpz_class scale;
  std::size_t exponent = kind == Kind::kDet ? n : n / 2;
  mpz_pow_ui(scale.get_mpz_t(), lcm.get_mpz_t(), exponent);
  return Scalar(Rational(acc_re, scale), Rational(acc_im, scale));
}

std::vector<SparseEntry> to_sparse(const Matrix& m, bool upper_only) {
  std::vector<SparseEntry> out;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = upper_only ? i + 1 : 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j), m(i, j)});
  return out;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  return evaluate(m.rows(), to_sparse(m, false), Kind::kDet);
}

Scalar pfaffian(const Matrix& m) {
  if (!m.square()) throw DimensionError("pfaffian of non-square matrix");
  if (m.rows() % 2) throw DimensionError("pfaffian of odd-dimensional matrix");
  if (!m.is_skew_symmetric()) throw ValidationError("pfaffian of non-skew-symmetric matrix");
  return evaluate(m.rows(), to_sparse(m, true), Kind::kPf);
}

Scalar sparse_determinant(std::size_t n, const std::vector<SparseEntry>& entries) {
  return evaluate(n, entries, Kind::kDet);
}

Scalar sparse_pfaffian(std::size_t n, const std::vector<SparseEntry>& entries) {
  for (const auto& e : entries)
    if (e.i == e.j && !e.v.is_zero()) throw ValidationError("pfaffian: nonzero diagonal entry");
  return evaluate(n, entries, Kind::kPf);
}

}  // namespace holant::modular
