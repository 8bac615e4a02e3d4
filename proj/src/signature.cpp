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

#include "holant/signature.hpp"

#include <algorithm>
#include <bit>

#include "holant/error.hpp"

namespace holant {

Bits parse_bits(const std::string& s) {
  if (s.size() > kMaxArity) throw DimensionError("bit string longer than 64");
  Bits x = 0;
  for (char c : s) {
    if (c == ' ') continue;
    if (c != '0' && c != '1') throw FormatError("bad bit string '" + s + "'");
    x = (x << 1) | static_cast<Bits>(c - '0');
  }
  return x;
}

std::string bits_to_string(Bits x, std::size_t arity) {
  std::string s(arity, '0');
  for (std::size_t i = 0; i < arity; ++i)
    if (bit_at(x, arity, i)) s[i] = '1';
  return s;
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::kHw1: return "HW=1";
    case Builtin::kHw0: return "HW=0";
    case Builtin::kEven: return "EVEN";
    case Builtin::kOdd: return "ODD";
    case Builtin::kPass: return "PASS";
    case Builtin::kPre: return "PRE";
    case Builtin::kAct: return "ACT";
  }
  return "?";
}

std::optional<Builtin> builtin_from_name(const std::string& name) {
  for (Builtin b : {Builtin::kHw1, Builtin::kHw0, Builtin::kEven, Builtin::kOdd, Builtin::kPass,
                    Builtin::kPre, Builtin::kAct})
    if (builtin_name(b) == name) return b;
  return std::nullopt;
}

int one_hot_index(Bits block, std::size_t n) {
  if (std::popcount(block) != 1) return 0;
  // Position from the left, 1-based.
  return static_cast<int>(n) - std::countr_zero(block);
}

namespace {

constexpr Bits kN = 0b1000, kE = 0b0100, kS = 0b0010, kW = 0b0001;

int pass_value(Bits y) {
  if (y == 0 || y == (kE | kW) || y == (kN | kS)) return 1;
  if (y == 0b1111) return -1;
  return 0;
}

int pre_value(Bits x) {
  Bits y = x >> 2, s = x & 3u;
  switch (s) {
    case 0b00: return pass_value(y);
    case 0b11: return (y == (kN | kS) || y == 0b1111) ? 1 : 0;
    case 0b01: return (y == kN || y == (kN | kW | kE)) ? 1 : 0;
    default: return (y == kS || y == (kS | kW | kE)) ? 1 : 0;
  }
}

int act_value(Bits x) {
  Bits y = x >> 2, s = x & 3u;
  if (s == 0b00) return pass_value(y);
  if (s == 0b11) return (y == (kN | kS) || y == 0b1111) ? 1 : 0;
  return 0;
}

Bits block_of(Bits x, std::size_t n, int index) {
  // index 0 = N (most significant) ... 3 = W.
  return (x >> (n * static_cast<std::size_t>(3 - index))) & ((Bits{1} << n) - 1);
}

}  // namespace

Scalar LazyRule::eval(Bits x) const {
  Bits xn = block_of(x, n, 0), xe = block_of(x, n, 1), xs = block_of(x, n, 2), xw = block_of(x, n, 3);
  int v = one_hot_index(xn, n), u = one_hot_index(xw, n);
  if (v == 0 || u == 0) return 0;
  if (xn != xs || xw != xe) return 0;
  if (kind == Kind::kPropagateCheck && !allowed.count({u, v})) return 0;
  return 1;
}

std::string LazyRule::name() const {
  return kind == Kind::kPropagate ? "propagate" : "propagate_check";
}

Signature Signature::dense(std::vector<Scalar> table) {
  std::size_t d = 0;
  while ((std::size_t{1} << d) < table.size()) ++d;
  if ((std::size_t{1} << d) != table.size())
    throw DimensionError("dense table length " + std::to_string(table.size()) + " is not a power of 2");
  if (d > kMaxDenseArity) throw DimensionError("dense table arity above limit");
  Signature s(Form::kDense, d);
  s.table_ = std::make_shared<const std::vector<Scalar>>(std::move(table));
  s.build_support();
  return s;
}

Signature Signature::builtin(Builtin b, std::size_t arity) {
  if ((b == Builtin::kPass && arity != 4) || ((b == Builtin::kPre || b == Builtin::kAct) && arity != 6))
    throw DimensionError(builtin_name(b) + " has fixed arity");
  if (arity > kMaxArity) throw DimensionError("arity above 64");
  Signature s(Form::kBuiltin, arity);
  s.builtin_ = b;
  s.build_support();
  return s;
}

Signature Signature::lazy(LazyRule rule) {
  if (rule.n == 0 || 4 * rule.n > kMaxArity) throw DimensionError("lazy cell signature: bad n");
  for (auto [u, v] : rule.allowed)
    if (u < 1 || v < 1 || u > static_cast<int>(rule.n) || v > static_cast<int>(rule.n))
      throw ValidationError("lazy cell signature: pair outside [n]^2");
  Signature s(Form::kLazy, 4 * rule.n);
  s.rule_ = std::make_shared<const LazyRule>(std::move(rule));
  s.build_support();
  return s;
}

void Signature::build_support() {
  std::vector<Bits> sup;
  const std::size_t d = arity_;
  switch (form_) {
    case Form::kDense:
      for (Bits x = 0; x < table_->size(); ++x)
        if (!(*table_)[x].is_zero()) sup.push_back(x);
      break;
    case Form::kLazy: {
      const std::size_t n = rule_->n;
      for (std::size_t u = 1; u <= n; ++u)
        for (std::size_t v = 1; v <= n; ++v) {
          if (rule_->kind == LazyRule::Kind::kPropagateCheck &&
              !rule_->allowed.count({static_cast<int>(u), static_cast<int>(v)}))
            continue;
          Bits col = Bits{1} << (n - v), row = Bits{1} << (n - u);
          sup.push_back((col << (3 * n)) | (row << (2 * n)) | (col << n) | row);
        }
      break;
    }
    case Form::kBuiltin:
      switch (builtin_) {
        case Builtin::kHw1:
          for (std::size_t i = 0; i < d; ++i) sup.push_back(Bits{1} << i);
          break;
        case Builtin::kHw0:
          sup.push_back(0);
          break;
        case Builtin::kEven:
        case Builtin::kOdd:
          if (d > 16) {
            support_.reset();
            return;
          }
          for (Bits x = 0; x < (Bits{1} << d); ++x)
            if ((std::popcount(x) % 2 == 1) == (builtin_ == Builtin::kOdd)) sup.push_back(x);
          break;
        case Builtin::kPass:
        case Builtin::kPre:
        case Builtin::kAct:
          for (Bits x = 0; x < (Bits{1} << d); ++x)
            if (!eval(x).is_zero()) sup.push_back(x);
          break;
      }
      break;
  }
  std::sort(sup.begin(), sup.end());
  support_ = std::make_shared<const std::vector<Bits>>(std::move(sup));
}

Scalar Signature::eval(Bits x) const {
  if (arity_ < 64 && (x >> arity_) != 0) throw DimensionError("input wider than arity");
  switch (form_) {
    case Form::kDense: return (*table_)[x];
    case Form::kLazy: return rule_->eval(x);
    case Form::kBuiltin:
      switch (builtin_) {
        case Builtin::kHw1: return std::popcount(x) == 1 ? 1 : 0;
        case Builtin::kHw0: return x == 0 ? 1 : 0;
        case Builtin::kEven: return std::popcount(x) % 2 == 0 ? 1 : 0;
        case Builtin::kOdd: return std::popcount(x) % 2 == 1 ? 1 : 0;
        case Builtin::kPass: return pass_value(x);
        case Builtin::kPre: return pre_value(x);
        case Builtin::kAct: return act_value(x);
      }
  }
  return 0;
}

Scalar Signature::eval(const std::string& bits) const {
  std::size_t len = static_cast<std::size_t>(std::count_if(bits.begin(), bits.end(), [](char c) { return c != ' '; }));
  if (len != arity_)
    throw DimensionError("input of length " + std::to_string(len) + " for arity " + std::to_string(arity_));
  return eval(parse_bits(bits));
}

Signature Signature::to_dense() const {
  if (form_ == Form::kDense) return *this;
  if (arity_ > kMaxDenseArity) throw DimensionError("arity too large for a dense table");
  std::vector<Scalar> t(std::size_t{1} << arity_);
  if (support_) {
    for (Bits x : *support_) t[x] = eval(x);
  } else {
    for (Bits x = 0; x < t.size(); ++x) t[x] = eval(x);
  }
  return dense(std::move(t));
}

std::string Signature::describe() const {
  switch (form_) {
    case Form::kDense: return "dense/" + std::to_string(arity_);
    case Form::kBuiltin: return builtin_name(builtin_) + "/" + std::to_string(arity_);
    case Form::kLazy: return rule_->name() + "/" + std::to_string(arity_);
  }
  return "?";
}

bool same_values(const Signature& a, const Signature& b) {
  if (a.arity() != b.arity()) return false;
  if (a.arity() > kMaxDenseArity) throw DimensionError("same_values: arity too large");
  for (Bits x = 0; x < (Bits{1} << a.arity()); ++x)
    if (a.eval(x) != b.eval(x)) return false;
  return true;
}

}  // namespace holant
