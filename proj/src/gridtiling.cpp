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


#include "holant/gridtiling.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "holant/error.hpp"

namespace holant {

void GridTilingInstance::validate() const {
  for (const auto& [cell, set] : T) {
    if (cell.first >= k || cell.second >= k) throw ValidationError("grid tiling: cell outside [k]^2");
    for (const auto& [u, v] : set)
      if (u >= n || v >= n) throw ValidationError("grid tiling: element outside [n]^2");
  }
}

namespace {

struct Search {
  const GridTilingInstance& t;
  const TilingOptions& opt;
  // Variable order: row 0, col 0, row 1, col 1, ...; entries (is_row, index).
  std::vector<std::pair<bool, std::size_t>> order;
  std::vector<std::vector<std::size_t>> domain_row, domain_col;
  std::vector<char> row_constrained, col_constrained;
  std::vector<std::size_t> rows, cols;
  std::vector<char> row_set, col_set;
  std::uint64_t nodes = 0;
  bool enumerate_free = false;

  Search(const GridTilingInstance& tt, const TilingOptions& o, bool free) : t(tt), opt(o), enumerate_free(free) {
    t.validate();
    const std::size_t k = t.k;
    row_constrained.assign(k, 0);
    col_constrained.assign(k, 0);
    domain_row.assign(k, {});
    domain_col.assign(k, {});
    std::vector<std::set<std::size_t>> r(k), c(k);
    std::vector<char> rseen(k, 0), cseen(k, 0);
    for (const auto& [cell, set] : t.T) {
      std::set<std::size_t> fr, fc;
      for (const auto& [u, v] : set) {
        fr.insert(u);
        fc.insert(v);
      }
      auto meet = [](std::set<std::size_t>& acc, char& seen, const std::set<std::size_t>& s) {
        if (!seen) {
          acc = s;
          seen = 1;
          return;
        }
        std::set<std::size_t> out;
        std::set_intersection(acc.begin(), acc.end(), s.begin(), s.end(), std::inserter(out, out.begin()));
        acc = std::move(out);
      };
      meet(r[cell.first], rseen[cell.first], fr);
      meet(c[cell.second], cseen[cell.second], fc);
      row_constrained[cell.first] = 1;
      col_constrained[cell.second] = 1;
    }
    std::vector<std::size_t> all(t.n);
    std::iota(all.begin(), all.end(), 0);
    for (std::size_t i = 0; i < k; ++i) {
      domain_row[i] = row_constrained[i] ? std::vector<std::size_t>(r[i].begin(), r[i].end()) : all;
      domain_col[i] = col_constrained[i] ? std::vector<std::size_t>(c[i].begin(), c[i].end()) : all;
    }
    for (std::size_t i = 0; i < k; ++i) {
      if (row_constrained[i] || enumerate_free) order.emplace_back(true, i);
      if (col_constrained[i] || enumerate_free) order.emplace_back(false, i);
    }
    rows.assign(k, 0);
    cols.assign(k, 0);
    row_set.assign(k, 0);
    col_set.assign(k, 0);
  }

  bool consistent(bool is_row, std::size_t idx) const {
    // Check every cell of C on this row/column whose other coordinate is set.
    for (std::size_t o = 0; o < t.k; ++o) {
      Cell cell = is_row ? Cell{idx, o} : Cell{o, idx};
      if (!(is_row ? col_set[o] : row_set[o])) continue;
      auto it = t.T.find(cell);
      if (it == t.T.end()) continue;
      if (!it->second.count({rows[cell.first], cols[cell.second]})) return false;
    }
    return true;
  }

  template <class F>
  void run(std::size_t pos, F&& leaf) {
    if (++nodes > opt.max_nodes) throw BudgetExceeded("grid tiling search exceeded " + std::to_string(opt.max_nodes) + " nodes");
    if (pos == order.size()) {
      leaf();
      return;
    }
    auto [is_row, idx] = order[pos];
    const auto& dom = is_row ? domain_row[idx] : domain_col[idx];
    for (std::size_t val : dom) {
      (is_row ? rows : cols)[idx] = val;
      (is_row ? row_set : col_set)[idx] = 1;
      if (consistent(is_row, idx)) run(pos + 1, leaf);
      (is_row ? row_set : col_set)[idx] = 0;
    }
  }
};

}  // namespace

mpz_class count_tilings(const GridTilingInstance& t, const TilingOptions& opt) {
  Search s(t, opt, false);
  mpz_class count = 0;
  s.run(0, [&] { ++count; });
  mpz_class free_factor = 1;
  for (std::size_t i = 0; i < t.k; ++i) {
    if (!s.row_constrained[i]) free_factor *= static_cast<unsigned long>(t.n);
    if (!s.col_constrained[i]) free_factor *= static_cast<unsigned long>(t.n);
  }
  return count * free_factor;
}

int parity_tilings(const GridTilingInstance& t, const TilingOptions& opt) {
  mpz_class c = count_tilings(t, opt);
  return mpz_odd_p(c.get_mpz_t()) ? 1 : 0;
}

void for_each_tiling(const GridTilingInstance& t,
                     const std::function<void(const std::vector<std::size_t>&, const std::vector<std::size_t>&)>& f,
                     const TilingOptions& opt) {
  Search s(t, opt, true);
  s.run(0, [&] { f(s.rows, s.cols); });
}

mpz_class count_tilings_naive(const GridTilingInstance& t) {
  t.validate();
  const std::size_t cells = t.k * t.k, vals = t.n * t.n;
  if (cells * 2 > 0 && std::pow(double(vals), double(cells)) > 5e7) throw BudgetExceeded("naive tiling oracle too large");
  std::vector<std::size_t> a(cells, 0);
  mpz_class count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < t.k && ok; ++i)
      for (std::size_t j = 0; j < t.k && ok; ++j) {
        Pair p{a[i * t.k + j] / t.n, a[i * t.k + j] % t.n};
        if (j + 1 < t.k && p.first != a[i * t.k + j + 1] / t.n) ok = false;
        if (i + 1 < t.k && p.second != a[(i + 1) * t.k + j] % t.n) ok = false;
        auto it = t.T.find({i, j});
        if (it != t.T.end() && !it->second.count(p)) ok = false;
      }
    if (ok) ++count;
    std::size_t i = 0;
    while (i < cells && ++a[i] == vals) a[i++] = 0;
    if (i == cells) break;
  }
  return count;
}

BalanceResult balance(const GridTilingInstance& t, Direction d) {
  t.validate();
  const bool vertical = d == Direction::kVertical;
  // line(p) = the coordinate that must be balanced.
  auto line = [&](const Pair& p) { return vertical ? p.second : p.first; };
  std::size_t T = 0;
  std::map<Cell, std::vector<std::size_t>> counts;
  for (const auto& [cell, set] : t.T) {
    auto& c = counts[cell];
    c.assign(t.n, 0);
    for (const auto& p : set) ++c[line(p)];
    for (auto x : c) T = std::max(T, x);
  }
  BalanceResult out;
  out.T = T;
  out.instance.k = t.k;
  out.instance.n = t.n + t.k * t.k * T;
  for (const auto& [cell, set] : t.T) {
    auto& dst = out.instance.T[cell];
    dst = set;
    const std::size_t block = t.n + (cell.first * t.k + cell.second) * T;
    for (std::size_t w = 0; w < t.n; ++w)
      for (std::size_t f = 0; f < T - counts[cell][w]; ++f)
        dst.insert(vertical ? Pair{block + f, w} : Pair{w, block + f});
  }
  return out;
}

std::optional<std::map<Cell, std::size_t>> cell_balance(const GridTilingInstance& t, Direction d) {
  std::map<Cell, std::size_t> out;
  for (const auto& [cell, set] : t.T) {
    std::vector<std::size_t> c(t.n, 0);
    for (const auto& [u, v] : set) ++c[d == Direction::kVertical ? v : u];
    for (auto x : c)
      if (x != c[0]) return std::nullopt;
    out[cell] = t.n ? c[0] : 0;
  }
  return out;
}

bool balance_keeps_tilings(const GridTilingInstance& t, Direction d) {
  // Dummies of a vertical balance sit in first coordinates, so rows matter.
  std::vector<std::size_t> per(t.k, 0);
  for (const auto& [cell, set] : t.T) ++per[d == Direction::kVertical ? cell.first : cell.second];
  for (auto c : per)
    if (c < 2) return false;
  return true;
}

void PartitionedSubInstance::validate() const {
  if (H.n != k || H.colour.size() != k) throw ValidationError("psub: H must have k vertices");
  std::vector<char> seen(k, 0);
  for (auto c : H.colour) {
    if (c >= k || seen[c]) throw ValidationError("psub: H is not colourful");
    seen[c] = 1;
  }
  if (G.colour.size() != G.n) throw ValidationError("psub: G colour list size mismatch");
  for (auto c : G.colour)
    if (c >= k) throw ValidationError("psub: G colour outside [k]");
  for (auto [a, b] : H.edges)
    if (a >= H.n || b >= H.n) throw ValidationError("psub: H edge endpoint out of range");
  for (auto [a, b] : G.edges)
    if (a >= G.n || b >= G.n) throw ValidationError("psub: G edge endpoint out of range");
}

namespace {
std::set<std::pair<std::size_t, std::size_t>> colour_adjacency(const PartitionedSubInstance& p) {
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (auto [a, b] : p.H.edges) {
    adj.insert({p.H.colour[a], p.H.colour[b]});
    adj.insert({p.H.colour[b], p.H.colour[a]});
  }
  return adj;
}
}  // namespace

PartitionedSubInstance preprocess(const PartitionedSubInstance& p) {
  p.validate();
  auto adj = colour_adjacency(p);
  PartitionedSubInstance out = p;
  out.G.edges.clear();
  for (auto [a, b] : p.G.edges)
    if (adj.count({p.G.colour[a], p.G.colour[b]})) out.G.edges.push_back({a, b});
  return out;
}

mpz_class count_psub(const PartitionedSubInstance& p, const TilingOptions& opt) {
  p.validate();
  const std::size_t k = p.k;
  std::vector<std::vector<std::size_t>> cls(k);
  for (std::size_t v = 0; v < p.G.n; ++v) cls[p.G.colour[v]].push_back(v);
  std::set<std::pair<std::size_t, std::size_t>> gadj;
  for (auto [a, b] : p.G.edges) {
    gadj.insert({a, b});
    gadj.insert({b, a});
  }
  // H edges by colour.
  std::vector<std::vector<std::size_t>> back(k);  // colours adjacent to c with a smaller colour
  for (auto [a, b] : p.H.edges) {
    std::size_t ca = p.H.colour[a], cb = p.H.colour[b];
    if (ca == cb) continue;
    back[std::max(ca, cb)].push_back(std::min(ca, cb));
  }
  std::vector<std::size_t> pick(k);
  mpz_class count = 0;
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t c) {
    if (++nodes > opt.max_nodes) throw BudgetExceeded("count_psub exceeded node budget");
    if (c == k) {
      ++count;
      return;
    }
    for (std::size_t v : cls[c]) {
      bool ok = true;
      for (std::size_t b : back[c])
        if (!gadj.count({v, pick[b]})) {
          ok = false;
          break;
        }
      if (!ok) continue;
      pick[c] = v;
      rec(c + 1);
    }
  };
  rec(0);
  return count;
}

GridTilingInstance psub_to_gridtiling(const PartitionedSubInstance& raw) {
  PartitionedSubInstance p = preprocess(raw);
  GridTilingInstance t;
  t.n = p.G.n;
  t.k = p.k;
  for (auto [a, b] : p.H.edges) {
    std::size_t ca = p.H.colour[a], cb = p.H.colour[b];
    t.T[{ca, cb}];
    t.T[{cb, ca}];
  }
  for (std::size_t i = 0; i < p.k; ++i) t.T[{i, i}];
  for (auto [a, b] : p.G.edges) {
    if (a == b) continue;
    std::size_t ca = p.G.colour[a], cb = p.G.colour[b];
    t.T[{ca, cb}].insert({a, b});
    t.T[{cb, ca}].insert({b, a});
  }
  for (std::size_t v = 0; v < p.G.n; ++v) t.T[{p.G.colour[v], p.G.colour[v]}].insert({v, v});
  return t;
}

CliqueReduction clique_to_psub(const ColoredGraph& g, std::size_t k) {
  CliqueReduction r;
  auto& p = r.instance;
  p.k = k;
  p.H.n = k;
  for (std::size_t i = 0; i < k; ++i) p.H.colour.push_back(i);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) p.H.edges.push_back({i, j});
  p.G.n = g.n * k;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t v = 0; v < g.n; ++v) p.G.colour.push_back(i);
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j) p.G.edges.push_back({i * g.n + u, j * g.n + v});
  }
  r.multiplier = 1;
  for (std::size_t i = 2; i <= k; ++i) r.multiplier *= static_cast<unsigned long>(i);
  return r;
}

mpz_class count_cliques(const ColoredGraph& g, std::size_t k) {
  std::set<std::pair<std::size_t, std::size_t>> adj;
  for (auto [a, b] : g.edges)
    if (a != b) {
      adj.insert({a, b});
      adj.insert({b, a});
    }
  std::vector<std::size_t> pick;
  mpz_class count = 0;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (pick.size() == k) {
      ++count;
      return;
    }
    for (std::size_t v = from; v < g.n; ++v) {
      bool ok = true;
      for (auto w : pick) ok = ok && adj.count({v, w});
      if (!ok) continue;
      pick.push_back(v);
      rec(v + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return count;
}

}  // namespace holant
