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

#include "holant/matrix.hpp"

#include <bit>
#include <utility>

#include "holant/error.hpp"

namespace holant {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    a_.insert(a_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_skew_symmetric() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (!(*this)(i, i).is_zero()) return false;
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != -(*this)(j, i)) return false;
  }
  return true;
}

Scalar determinant(const Matrix& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    Scalar inv = Scalar(1) / a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k).is_zero()) continue;
      Scalar f = a(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j)
        if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

Scalar pfaffian(const Matrix& m) {
  if (!m.square()) throw DimensionError("pfaffian of non-square matrix");
  if (m.rows() % 2) throw DimensionError("pfaffian of odd-dimensional matrix");
  if (!m.is_skew_symmetric()) throw ValidationError("pfaffian of non-skew-symmetric matrix");
  const std::size_t n = m.rows();
  Matrix a = m;
  Scalar pf = 1;
  auto swap_index = [&](std::size_t x, std::size_t y) {
    for (std::size_t j = 0; j < n; ++j) std::swap(a(x, j), a(y, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(a(i, x), a(i, y));
  };
  for (std::size_t k = 0; k + 1 < n; k += 2) {
    std::size_t p = k + 1;
    while (p < n && a(k, p).is_zero()) ++p;
    if (p == n) return 0;
    if (p != k + 1) {
      swap_index(p, k + 1);
      pf = -pf;
    }
    const Scalar piv = a(k, k + 1);
    pf *= piv;
    const Scalar inv = Scalar(1) / piv;
    // Schur complement of the 2x2 pivot block:
    // a_ij += (a_{k+1,i} a_kj - a_ki a_{k+1,j}) / piv
    for (std::size_t i = k + 2; i < n; ++i) {
      const Scalar& aki = a(k, i);
      const Scalar& bki = a(k + 1, i);
      if (aki.is_zero() && bki.is_zero()) continue;
      for (std::size_t j = i + 1; j < n; ++j) {
        const Scalar& akj = a(k, j);
        const Scalar& bkj = a(k + 1, j);
        if (akj.is_zero() && bkj.is_zero()) continue;
        Scalar d = (bki * akj - aki * bkj) * inv;
        a(i, j) += d;
        a(j, i) -= d;
      }
    }
  }
  return pf;
}

Scalar permanent(const Matrix& m) {
  if (!m.square()) throw DimensionError("permanent of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n > 30) throw BudgetExceeded("permanent: dimension above 30");
  std::vector<Scalar> row_sum(n);
  Scalar total;
  std::uint64_t gray = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << n); ++step) {
    std::uint64_t next = step ^ (step >> 1);
    std::uint64_t changed = next ^ gray;
    std::size_t j = static_cast<std::size_t>(std::countr_zero(changed));
    bool added = (next & changed) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added) row_sum[i] += m(i, j);
      else row_sum[i] -= m(i, j);
    }
    gray = next;
    Scalar prod = 1;
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i) prod *= row_sum[i];
    if (std::popcount(gray) % 2) total -= prod;
    else total += prod;
  }
  if (n % 2) total = -total;
  return total;
}

bool perm_det_mod2_check(const Matrix& m) {
  if (!m.square()) throw DimensionError("perm_det_mod2_check of non-square matrix");
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!(m(i, j) == Scalar(0) || m(i, j) == Scalar(1)))
        throw ValidationError("perm_det_mod2_check expects a 0/1 matrix");
  auto parity = [](const Scalar& s) {
    mpz_class r = s.re().num();
    return mpz_odd_p(r.get_mpz_t()) != 0;
  };
  return parity(permanent(m)) == parity(determinant(m));
}

}  // namespace holant
