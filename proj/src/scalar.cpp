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

#include "holant/scalar.hpp"

#include <ostream>

#include "holant/error.hpp"

namespace holant {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto bad = [&]() { return FormatError("malformed rational '" + s + "'"); };
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };
  auto slash = s.find('/');
  std::string a = s.substr(0, slash);
  std::string b = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(a) || !valid_int(b) || b[0] == '-' || b[0] == '+') throw bad();
  mpz_class num(strip_plus(a), 10), den(b, 10);
  if (den == 0) throw bad();
  return Rational(num, den);
}

std::string Rational::str() const {
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::string Rational::pretty() const {
  if (is_integer()) return q_.get_num().get_str();
  return str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  q_ /= o.q_;
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  Rational norm = o.re_ * o.re_ + o.im_ * o.im_;
  *this *= o.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::string Scalar::pretty() const {
  if (im_.is_zero()) return re_.pretty();
  std::string im;
  if (im_ == Rational(1)) im = "i";
  else if (im_ == Rational(-1)) im = "-i";
  else im = im_.pretty() + "i";
  if (re_.is_zero()) return im;
  if (im[0] != '-') im = "+" + im;
  return re_.pretty() + im;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.pretty(); }
std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.pretty(); }

ModScalar::ModScalar(const mpz_class& value, unsigned modulus_log)
    : value_(value), m_(modulus_log) {
  if (m_ == 0) throw ValidationError("modulus_log must be positive");
  reduce();
}

ModScalar ModScalar::from_scalar(const Scalar& s, unsigned modulus_log) {
  if (!s.is_real() || !s.re().is_integer())
    throw ValidationError("value " + s.pretty() + " is not an integer; cannot reduce mod 2^m");
  return ModScalar(s.re().num(), modulus_log);
}

mpz_class ModScalar::modulus() const {
  mpz_class m;
  mpz_ui_pow_ui(m.get_mpz_t(), 2, m_);
  return m;
}

void ModScalar::reduce() { mpz_fdiv_r_2exp(value_.get_mpz_t(), value_.get_mpz_t(), m_); }

void ModScalar::check_same(const ModScalar& o) const {
  if (o.m_ != m_) throw DimensionError("ModScalar modulus mismatch");
}

ModScalar ModScalar::operator-() const { return ModScalar(mpz_class(-value_), m_); }

ModScalar& ModScalar::operator+=(const ModScalar& o) {
  check_same(o);
  value_ += o.value_;
  reduce();
  return *this;
}

ModScalar& ModScalar::operator-=(const ModScalar& o) {
  check_same(o);
  value_ -= o.value_;
  reduce();
  return *this;
}

ModScalar& ModScalar::operator*=(const ModScalar& o) {
  check_same(o);
  value_ *= o.value_;
  reduce();
  return *this;
}

ModScalar ModScalar::pow(unsigned long e) const {
  mpz_class r;
  mpz_powm_ui(r.get_mpz_t(), value_.get_mpz_t(), e, modulus().get_mpz_t());
  return ModScalar(r, m_);
}

}  // namespace holant
