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

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace holant {

// Arbitrary precision rational, always canonical (reduced, positive denominator).
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& num, const mpz_class& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  explicit Rational(const mpz_class& z) : q_(z) {}

  // Parses "p/q" or "p".
  static Rational parse(const std::string& s);
  // "p/q" with q >= 1 always present.
  std::string str() const;
  // "p" for integers, "p/q" otherwise.
  std::string pretty() const;

  const mpq_class& raw() const { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }

 private:
  mpq_class q_;
};

// Exact Gaussian rational re + im*i.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : re_(v) {}   // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }
  static Scalar frac(long p, long q) { return Scalar(Rational(mpz_class(p), mpz_class(q))); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_ == Rational(1); }
  Scalar conj() const { return Scalar(re_, -im_); }
  Scalar pow(unsigned e) const;

  // Compact human form: "3", "1/2", "-i", "1/2+3/4i".
  std::string pretty() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);
std::ostream& operator<<(std::ostream& os, const Scalar& s);

// Element of Z/2^m. No division.
class ModScalar {
 public:
  ModScalar(const mpz_class& value, unsigned modulus_log);
  ModScalar(long value, unsigned modulus_log) : ModScalar(mpz_class(value), modulus_log) {}

  // Reduces an integral Scalar; throws ValidationError on non-integers.
  static ModScalar from_scalar(const Scalar& s, unsigned modulus_log);

  const mpz_class& value() const { return value_; }
  unsigned modulus_log() const { return m_; }
  mpz_class modulus() const;
  std::string str() const { return value_.get_str(); }

  ModScalar operator-() const;
  ModScalar& operator+=(const ModScalar& o);
  ModScalar& operator-=(const ModScalar& o);
  ModScalar& operator*=(const ModScalar& o);
  ModScalar pow(unsigned long e) const;

  friend ModScalar operator+(ModScalar a, const ModScalar& b) { return a += b; }
  friend ModScalar operator-(ModScalar a, const ModScalar& b) { return a -= b; }
  friend ModScalar operator*(ModScalar a, const ModScalar& b) { return a *= b; }
  friend bool operator==(const ModScalar& a, const ModScalar& b) {
    return a.m_ == b.m_ && a.value_ == b.value_;
  }

 private:
  void check_same(const ModScalar& o) const;
  void reduce();
  mpz_class value_;
  unsigned m_;
};

}  // namespace holant
