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

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "holant/scalar.hpp"

namespace holant {

// Local inputs are bit strings packed big-endian: the first incident edge is
// the most significant of `arity` bits. "1010" for arity 4 is index 10.
using Bits = std::uint64_t;

inline constexpr std::size_t kMaxArity = 64;
inline constexpr std::size_t kMaxDenseArity = 24;

Bits parse_bits(const std::string& s);
std::string bits_to_string(Bits x, std::size_t arity);
inline bool bit_at(Bits x, std::size_t arity, std::size_t pos) {
  return (x >> (arity - 1 - pos)) & 1u;
}

enum class Builtin { kHw1, kHw0, kEven, kOdd, kPass, kPre, kAct };

std::string builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(const std::string& name);

// Cell signatures f and g of arity 4n. Input splits into one-hot blocks
// x_N x_E x_S x_W of n bits each; the value is 0 unless hw(x_N) = hw(x_W) = 1.
struct LazyRule {
  enum class Kind { kPropagate, kPropagateCheck };
  Kind kind = Kind::kPropagate;
  std::size_t n = 1;
  // (u, v) pairs, 1-based: u = row (x_W index), v = column (x_N index).
  std::set<std::pair<int, int>> allowed;

  Scalar eval(Bits x) const;
  std::string name() const;
};

// One-hot index (1-based) of an n-bit block, 0 if the block is not one-hot.
int one_hot_index(Bits block, std::size_t n);

class Signature {
 public:
  enum class Form { kDense, kBuiltin, kLazy };

  Signature() : Signature(builtin(Builtin::kHw0, 0)) {}
  static Signature dense(std::vector<Scalar> table);
  static Signature builtin(Builtin b, std::size_t arity);
  static Signature lazy(LazyRule rule);

  static Signature hw1(std::size_t d) { return builtin(Builtin::kHw1, d); }
  static Signature pass() { return builtin(Builtin::kPass, 4); }
  static Signature pre() { return builtin(Builtin::kPre, 6); }
  static Signature act() { return builtin(Builtin::kAct, 6); }

  std::size_t arity() const { return arity_; }
  Form form() const { return form_; }
  std::optional<Builtin> builtin_kind() const {
    return form_ == Form::kBuiltin ? std::optional<Builtin>(builtin_) : std::nullopt;
  }
  const std::vector<Scalar>& table() const { return *table_; }
  const LazyRule& rule() const { return *rule_; }

  Scalar eval(Bits x) const;
  Scalar eval(const std::string& bits) const;

  // Inputs with nonzero value, ascending. Built at construction for
  // structured signatures and for dense tables; absent for EVEN/ODD/HW=0 of
  // large arity, which the evaluator handles by rule.
  bool has_support_list() const { return static_cast<bool>(support_); }
  const std::vector<Bits>& support() const { return *support_; }

  // Expands to a dense table (arity <= kMaxDenseArity).
  Signature to_dense() const;

  std::string describe() const;

 private:
  Signature(Form f, std::size_t arity) : form_(f), arity_(arity) {}
  Form form_;
  std::size_t arity_;
  Builtin builtin_ = Builtin::kHw0;
  std::shared_ptr<const std::vector<Scalar>> table_;
  std::shared_ptr<const LazyRule> rule_;
  std::shared_ptr<const std::vector<Bits>> support_;
  void build_support();
};

bool same_values(const Signature& a, const Signature& b);

}  // namespace holant
