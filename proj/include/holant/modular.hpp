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

// Exact determinants and Pfaffians by multi-modular evaluation.
//
// Entries are scaled to Gaussian integers, reduced modulo 62-bit primes
// p = 1 (mod 4) under both embeddings i -> +-sqrt(-1), and the real and
// imaginary parts are recovered by CRT. The number of primes is chosen from
// a Hadamard bound, so the result is exact, not probabilistic.

#include <cstdint>
#include <vector>

#include "holant/matrix.hpp"

namespace holant::modular {

struct PrimeInfo {
  std::uint64_t p;
  std::uint64_t sqrt_minus_one;
};

// The i-th prime of the fixed descending sequence of primes below 2^62 with p = 1 mod 4.
const PrimeInfo& prime(std::size_t i);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

// In-place elimination; the matrix is destroyed. Row-major n x n.
std::uint64_t det_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p);
std::uint64_t pf_mod(std::vector<std::uint64_t>& a, std::size_t n, std::uint64_t p);

struct SparseEntry {
  std::uint32_t i, j;
  Scalar v;
};

Scalar determinant(const Matrix& m);
// m must be skew-symmetric of even dimension (checked).
Scalar pfaffian(const Matrix& m);

// Sparse forms with min-degree pivoting. Duplicate (i, j) entries are summed.
// For the Pfaffian the entries give a_ij for i < j (a_ji = -a_ij implied);
// entries with i > j are accepted and mean a_ij as well.
Scalar sparse_determinant(std::size_t n, const std::vector<SparseEntry>& entries);
Scalar sparse_pfaffian(std::size_t n, const std::vector<SparseEntry>& entries);

}  // namespace holant::modular
