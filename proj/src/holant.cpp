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

#include "holant/holant.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "holant/error.hpp"

namespace holant {

namespace {

Bits local_input(const SignatureGraph& g, VertexId v, const std::vector<std::uint8_t>& x) {
  const auto& inc = g.vertex(v).incidence;
  Bits b = 0;
  for (Dart d : inc) b = (b << 1) | (x[dart_edge(d)] & 1u);
  return b;
}

class SupportSearch {
 public:
  SupportSearch(const SignatureGraph& g, const std::vector<std::int8_t>& fixed) : g_(g) {
    const std::size_t nv = g.vertex_count(), ne = g.edge_count();
    edge_pos_.resize(ne);
    for (VertexId v = 0; v < nv; ++v) {
      const auto& inc = g.vertex(v).incidence;
      for (std::size_t p = 0; p < inc.size(); ++p)
        edge_pos_[dart_edge(inc[p])].push_back({v, Bits{1} << (inc.size() - 1 - p)});
    }
    assign_.assign(ne, -1);
    mask_.assign(nv, 0);
    value_.assign(nv, 0);
    product_ = 1;
    for (EdgeId e = 0; e < ne; ++e) {
      if (fixed[e] < 0) continue;
      set_edge(e, fixed[e]);
      if (fixed[e] == 1 && !g.edge(e).weight.is_one()) product_ *= g.edge(e).weight;
    }
    build_order();
  }

  Scalar run() {
    total_ = 0;
    for (VertexId v = 0; v < g_.vertex_count(); ++v)
      if (!feasible(v)) return 0;
    recurse(0, product_);
    return total_;
  }

 private:
  struct Pos {
    VertexId v;
    Bits bit;
  };

  void set_edge(EdgeId e, int b) {
    assign_[e] = static_cast<std::int8_t>(b);
    for (const Pos& p : edge_pos_[e]) {
      mask_[p.v] |= p.bit;
      if (b) value_[p.v] |= p.bit;
    }
  }
  void clear_edge(EdgeId e) {
    assign_[e] = -1;
    for (const Pos& p : edge_pos_[e]) {
      mask_[p.v] &= ~p.bit;
      value_[p.v] &= ~p.bit;
    }
  }

  bool feasible(VertexId v) const {
    const Signature& s = g_.vertex(v).signature;
    const Bits m = mask_[v], val = value_[v];
    if (s.has_support_list()) {
      for (Bits x : s.support())
        if ((x & m) == val) return true;
      return false;
    }
    const std::size_t d = s.arity();
    const Bits full = d >= 64 ? ~Bits{0} : ((Bits{1} << d) - 1);
    if (m != full) return true;
    return !s.eval(val).is_zero();
  }

  // Maximum-cardinality ordering: next vertex has the most already-ordered
  // neighbours (fixed edges count as ordered); ties prefer small support.
  void build_order() {
    const std::size_t nv = g_.vertex_count();
    std::vector<int> score(nv, 0);
    std::vector<char> used(nv, 0);
    for (VertexId v = 0; v < nv; ++v) score[v] = std::popcount(mask_[v]);
    auto support_size = [&](VertexId v) {
      const Signature& s = g_.vertex(v).signature;
      return s.has_support_list() ? s.support().size() : (std::size_t{1} << std::min<std::size_t>(s.arity(), 40));
    };
    for (std::size_t step = 0; step < nv; ++step) {
      VertexId best = UINT32_MAX;
      for (VertexId v = 0; v < nv; ++v) {
        if (used[v]) continue;
        if (best == UINT32_MAX || score[v] > score[best] ||
            (score[v] == score[best] && support_size(v) < support_size(best)))
          best = v;
      }
      used[best] = 1;
      order_.push_back(best);
      for (Dart d : g_.vertex(best).incidence) {
        const auto& e = g_.edge(dart_edge(d));
        if (!e.v) continue;
        VertexId other = dart_side(d) == 0 ? *e.v : e.u;
        if (!used[other]) score[other]++;
      }
    }
  }

  void recurse(std::size_t idx, const Scalar& prod) {
    if (idx == order_.size()) {
      total_ += prod;
      return;
    }
    const VertexId v = order_[idx];
    const Signature& sig = g_.vertex(v).signature;
    const auto& inc = g_.vertex(v).incidence;
    const std::size_t d = inc.size();
    const Bits m = mask_[v], val = value_[v];
    auto try_candidate = [&](Bits x) {
      // Self-loops: both positions of one edge must agree.
      std::vector<EdgeId> newly;
      bool ok = true;
      for (std::size_t p = 0; p < d && ok; ++p) {
        Bits bit = Bits{1} << (d - 1 - p);
        if (m & bit) continue;
        EdgeId e = dart_edge(inc[p]);
        int b = (x & bit) ? 1 : 0;
        if (assign_[e] >= 0) {
          ok = assign_[e] == b;
          continue;
        }
        set_edge(e, b);
        newly.push_back(e);
      }
      if (ok) {
        for (EdgeId e : newly) {
          for (const Pos& p : edge_pos_[e])
            if (p.v != v && !feasible(p.v)) ok = false;
          if (!ok) break;
        }
      }
      if (ok) {
        Scalar factor = sig.eval(x);
        for (EdgeId e : newly)
          if (assign_[e] == 1 && !g_.edge(e).weight.is_one()) factor *= g_.edge(e).weight;
        if (!factor.is_zero()) {
          if (factor.is_one()) recurse(idx + 1, prod);
          else recurse(idx + 1, prod * factor);
        }
      }
      for (EdgeId e : newly) clear_edge(e);
    };
    if (sig.has_support_list()) {
      for (Bits x : sig.support())
        if ((x & m) == val) try_candidate(x);
    } else {
      std::vector<Bits> free_bits;
      for (std::size_t p = 0; p < d; ++p) {
        Bits bit = Bits{1} << (d - 1 - p);
        if (!(m & bit)) free_bits.push_back(bit);
      }
      if (free_bits.size() > 24) throw BudgetExceeded("holant: vertex with more than 24 free positions and no support list");
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << free_bits.size()); ++c) {
        Bits x = val;
        for (std::size_t i = 0; i < free_bits.size(); ++i)
          if (c >> i & 1u) x |= free_bits[i];
        if (!sig.eval(x).is_zero()) try_candidate(x);
      }
    }
  }

  const SignatureGraph& g_;
  std::vector<std::vector<Pos>> edge_pos_;
  std::vector<std::int8_t> assign_;
  std::vector<Bits> mask_, value_;
  std::vector<VertexId> order_;
  Scalar product_;
  Scalar total_;
};

Scalar plain_sum(const SignatureGraph& g, const std::vector<std::int8_t>& fixed) {
  std::vector<EdgeId> free_edges;
  std::vector<std::uint8_t> x(g.edge_count(), 0);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (fixed[e] < 0) free_edges.push_back(e);
    else x[e] = static_cast<std::uint8_t>(fixed[e]);
  }
  Scalar total = 0;
  for (std::uint64_t c = 0; c < (std::uint64_t{1} << free_edges.size()); ++c) {
    for (std::size_t i = 0; i < free_edges.size(); ++i) x[free_edges[i]] = (c >> i) & 1u;
    Scalar v = val(g, x);
    if (v.is_zero()) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (x[e]) v *= g.edge(e).weight;
    total += v;
  }
  return total;
}

}  // namespace

Scalar val(const SignatureGraph& g, const std::vector<std::uint8_t>& x) {
  if (x.size() != g.edge_count()) throw DimensionError("assignment length differs from edge count");
  Scalar prod = 1;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Scalar f = g.vertex(v).signature.eval(local_input(g, v, x));
    if (f.is_zero()) return 0;
    if (!f.is_one()) prod *= f;
  }
  return prod;
}

Scalar holant_fixed(const SignatureGraph& g, const std::vector<std::int8_t>& fixed,
                    const EnumerationOptions& opt) {
  g.validate();
  if (fixed.size() != g.edge_count()) throw DimensionError("fixed vector length differs from edge count");
  std::size_t free_count = 0;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (fixed[e] < 0) {
      if (g.is_dangling(e)) throw ValidationError("holant: dangling edge left free");
      ++free_count;
    }
  }
  if (free_count > opt.max_edges)
    throw BudgetExceeded("holant: " + std::to_string(free_count) + " free edges exceed the enumeration budget of " +
                         std::to_string(opt.max_edges));
  if (opt.strategy == Strategy::kPlain) {
    if (free_count > 40) throw BudgetExceeded("holant: plain strategy limited to 40 free edges");
    return plain_sum(g, fixed);
  }
  return SupportSearch(g, fixed).run();
}

Scalar holant(const SignatureGraph& g, const EnumerationOptions& opt) {
  if (!g.closed()) throw ValidationError("holant requires a closed graph");
  return holant_fixed(g, std::vector<std::int8_t>(g.edge_count(), -1), opt);
}

Scalar perfmatch_via_holant(const WeightedGraph& g, const EnumerationOptions& opt) {
  return holant(matching_signature_graph(g), opt);
}

}  // namespace holant
