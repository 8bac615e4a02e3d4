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

#include <random>

#include "doctest.h"
#include "holant/error.hpp"
#include "holant/matrix.hpp"
#include "holant/modular.hpp"
#include "holant/scalar.hpp"
#include "oracles.hpp"

namespace holant {

TEST_CASE("rational normal form") {
  Rational r = Rational::parse("-6/4");
  CHECK(r.str() == "-3/2");
  CHECK(Rational::parse("0/7").str() == "0/1");
  CHECK(Rational::parse("5").str() == "5/1");
  CHECK_THROWS_AS(Rational::parse("1/0"), FormatError);
  CHECK_THROWS_AS(Rational::parse("x"), FormatError);
  CHECK_THROWS(Rational(1) / Rational(0));
}

TEST_CASE("rational round trip") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Scalar s = oracle::random_small(rng, true);
    CHECK(Rational::parse(s.re().str()) == s.re());
    CHECK(Rational::parse(s.im().str()) == s.im());
  }
}

TEST_CASE("gaussian field axioms") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    Scalar a = oracle::random_small(rng, true), b = oracle::random_small(rng, true),
           c = oracle::random_small(rng, true);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
  }
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(Scalar::i().pow(4) == Scalar(1));
  CHECK(Scalar::frac(1, 2).pretty() == "1/2");
  CHECK(Scalar(3).pretty() == "3");
}

TEST_CASE("mod scalar ring laws") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> d(-1000, 1000);
  for (unsigned m : {1u, 3u, 8u, 40u, 70u}) {
    for (int t = 0; t < 50; ++t) {
      ModScalar a(d(rng), m), b(d(rng), m), c(d(rng), m);
      CHECK(((a + b) + c).value() == (a + (b + c)).value());
      CHECK((a * (b + c)).value() == (a * b + a * c).value());
    }
    CHECK(ModScalar(2, m).pow(m).value() == 0);
  }
  CHECK((ModScalar(5, 3) + ModScalar(6, 3)).value() == 3);
  CHECK((ModScalar(3, 3) * ModScalar(5, 3)).value() == 7);
  CHECK(ModScalar(-1, 3).value() == 7);
  CHECK_THROWS(ModScalar(1, 3) + ModScalar(1, 4));
  CHECK_THROWS(ModScalar::from_scalar(Scalar::frac(1, 2), 4));
}

TEST_CASE("determinant") {
  CHECK(determinant(Matrix::identity(3)) == Scalar(1));
  CHECK(determinant(Matrix{{0, 1}, {-1, 0}}) == Scalar(1));
  CHECK_THROWS_AS(determinant(Matrix(2, 3)), DimensionError);
  std::mt19937_64 rng(5);
  for (int t = 0; t < 30; ++t) {
    Matrix m = oracle::random_matrix(rng, 5, -9, 9);
    CHECK(determinant(m) == oracle::laplace_det(m));
    CHECK(modular::determinant(m) == oracle::laplace_det(m));
  }
  for (int t = 0; t < 20; ++t) {
    Matrix m(5, 5);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) m(i, j) = oracle::random_small(rng, true);
    Scalar want = oracle::laplace_det(m);
    CHECK(determinant(m) == want);
    CHECK(modular::determinant(m) == want);
  }
}

TEST_CASE("pfaffian") {
  CHECK(pfaffian(Matrix{{0, 7}, {-7, 0}}) == Scalar(7));
  // a12 a34 - a13 a24 + a14 a23
  Matrix m{{0, 2, 3, 5}, {-2, 0, 7, 11}, {-3, -7, 0, 13}, {-5, -11, -13, 0}};
  CHECK(pfaffian(m) == Scalar(2 * 13 - 3 * 11 + 5 * 7));
  CHECK(modular::pfaffian(m) == Scalar(2 * 13 - 3 * 11 + 5 * 7));
  CHECK_THROWS_AS(pfaffian(Matrix(3, 3)), DimensionError);
  CHECK_THROWS_AS(pfaffian(Matrix{{0, 1}, {1, 0}}), ValidationError);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 2 + 2 * (t % 3);
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        s(i, j) = t % 2 ? oracle::random_small(rng, true) : Scalar(static_cast<long>(rng() % 7) - 3);
        s(j, i) = -s(i, j);
      }
    Scalar pf = pfaffian(s);
    CHECK(pf * pf == determinant(s));
    CHECK(pf == oracle::naive_pfaffian(s));
    CHECK(modular::pfaffian(s) == pf);
  }
}

TEST_CASE("permanent") {
  CHECK(permanent(Matrix{{1}}) == Scalar(1));
  CHECK(permanent(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}) == Scalar(6));
  CHECK(permanent(Matrix{{1, 2}, {3, 4}}) == Scalar(10));
  CHECK_THROWS_AS(permanent(Matrix(2, 1)), DimensionError);
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 5; ++t) {
      Matrix m = oracle::random_matrix(rng, n, -4, 4);
      CHECK(permanent(m) == oracle::naive_permanent(m));
    }
}

TEST_CASE("permanent and determinant agree mod 2") {
  CHECK(perm_det_mod2_check(Matrix::identity(4)));
  CHECK(perm_det_mod2_check(Matrix{{1, 1, 1}, {1, 1, 1}, {1, 1, 1}}));
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) CHECK(perm_det_mod2_check(oracle::random_matrix(rng, 6, 0, 1)));
}

}  // namespace holant
