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


#include "holant/matching.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <string>
#include <unordered_map>

#include "holant/error.hpp"
#include "holant/modular.hpp"

namespace holant {

namespace {
constexpr std::uint32_t kNone = UINT32_MAX;

// Embedded multigraph with self-loops (and optionally zero-weight edges)
// removed. orig[e] is the id of edge e in the source graph.
struct Compact {
  std::size_t n = 0;
  std::vector<std::pair<VertexId, VertexId>> ends;
  std::vector<Scalar> w;
  std::vector<EdgeId> orig;
  Rotation rotation;
};

Compact compact(const WeightedGraph& g, const Rotation& rot, bool drop_zero) {
  if (rot.size() != g.vertex_count) throw EmbeddingError("rotation size differs from vertex count");
  Compact c;
  c.n = g.vertex_count;
  std::vector<EdgeId> map(g.edges.size(), kNone);
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.u >= c.n || ed.v >= c.n) throw ValidationError("edge endpoint out of range");
    if (ed.u == ed.v || (drop_zero && ed.w.is_zero())) continue;
    map[e] = static_cast<EdgeId>(c.ends.size());
    c.ends.emplace_back(ed.u, ed.v);
    c.w.push_back(ed.w);
    c.orig.push_back(e);
  }
  c.rotation.resize(c.n);
  for (VertexId x = 0; x < c.n; ++x)
    for (Dart d : rot[x]) {
      if (dart_edge(d) >= g.edges.size()) throw EmbeddingError("rotation lists an unknown dart");
      EdgeId ne = map[dart_edge(d)];
      if (ne != kNone) c.rotation[x].push_back(make_dart(ne, dart_side(d)));
    }
  return c;
}

VertexId tail(const Compact& c, Dart d) { return dart_side(d) ? c.ends[dart_edge(d)].second : c.ends[dart_edge(d)].first; }

struct Oriented {
  std::vector<char> forward;
  std::vector<std::vector<Dart>> faces;
  std::vector<char> outer;
};

Oriented orient(const Compact& c) {
  auto rep = euler_check(c.n, c.ends, c.rotation);
  if (!rep.ok) throw EmbeddingError("not a plane embedding: " + rep.message);
  Oriented o;
  o.faces = trace_faces(c.n, c.ends, c.rotation);
  const std::size_t m = c.ends.size();
  std::vector<std::uint32_t> face_of(2 * m, kNone);
  for (std::uint32_t f = 0; f < o.faces.size(); ++f)
    for (Dart d : o.faces[f]) face_of[d] = f;

  // Spanning forest by BFS.
  std::vector<std::vector<Dart>> out_darts(c.n);
  for (EdgeId e = 0; e < m; ++e) {
    out_darts[c.ends[e].first].push_back(make_dart(e, 0));
    out_darts[c.ends[e].second].push_back(make_dart(e, 1));
  }
  std::vector<std::uint32_t> comp(c.n, kNone);
  std::vector<char> tree(m, 0);
  std::uint32_t ncomp = 0;
  for (VertexId s = 0; s < c.n; ++s) {
    if (comp[s] != kNone) continue;
    comp[s] = ncomp;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (Dart d : out_darts[x]) {
        VertexId y = tail(c, dart_rev(d));
        if (comp[y] != kNone) continue;
        comp[y] = ncomp;
        tree[dart_edge(d)] = 1;
        q.push(y);
      }
    }
    ++ncomp;
  }

  // Outer face per component: the largest, ties to the lowest index.
  std::vector<std::uint32_t> outer_of(ncomp, kNone);
  for (std::uint32_t f = 0; f < o.faces.size(); ++f) {
    std::uint32_t k = comp[tail(c, o.faces[f][0])];
    if (outer_of[k] == kNone || o.faces[f].size() > o.faces[outer_of[k]].size()) outer_of[k] = f;
  }
  o.outer.assign(o.faces.size(), 0);

  // Dual tree over non-tree edges, BFS from each outer face.
  std::vector<std::vector<EdgeId>> dual(o.faces.size());
  for (EdgeId e = 0; e < m; ++e)
    if (!tree[e]) {
      dual[face_of[2 * e]].push_back(e);
      dual[face_of[2 * e + 1]].push_back(e);
    }
  std::vector<EdgeId> parent_edge(o.faces.size(), kNone);
  std::vector<char> seen(o.faces.size(), 0);
  std::vector<std::uint32_t> order;
  for (std::uint32_t r : outer_of) {
    if (r == kNone) continue;
    o.outer[r] = 1;
    seen[r] = 1;
    std::size_t head = order.size();
    order.push_back(r);
    while (head < order.size()) {
      std::uint32_t f = order[head++];
      for (EdgeId e : dual[f]) {
        std::uint32_t g = face_of[2 * e] == f ? face_of[2 * e + 1] : face_of[2 * e];
        if (seen[g]) continue;
        seen[g] = 1;
        parent_edge[g] = e;
        order.push_back(g);
      }
    }
  }
  if (order.size() != o.faces.size()) throw EmbeddingError("dual graph is not connected");

  o.forward.assign(m, 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    std::uint32_t f = *it;
    if (o.outer[f]) continue;
    EdgeId pe = parent_edge[f];
    std::size_t against = 0;
    Dart pd = kNone;
    for (Dart d : o.faces[f]) {
      if (dart_edge(d) == pe) {
        pd = d;
        continue;
      }
      // Inner faces are traced counter-clockwise; a dart against its edge is clockwise.
      if (static_cast<bool>(o.forward[dart_edge(d)]) == static_cast<bool>(dart_side(d))) ++against;
    }
    // Choose the parent edge so that the clockwise count is odd.
    bool need_against = against % 2 == 0;
    o.forward[pe] = need_against ? static_cast<char>(dart_side(pd)) : static_cast<char>(!dart_side(pd));
  }
  return o;
}

bool bipartition(const Compact& c, std::vector<int>& colour) {
  colour.assign(c.n, -1);
  std::vector<std::vector<VertexId>> adj(c.n);
  for (const auto& [u, v] : c.ends) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (VertexId s = 0; s < c.n; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      VertexId x = q.front();
      q.pop();
      for (VertexId y : adj[x]) {
        if (colour[y] < 0) {
          colour[y] = 1 - colour[x];
          q.push(y);
        } else if (colour[y] == colour[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Kuhn's augmenting paths; match_row[r] = edge index into `edges`.
bool structural_matching(std::size_t rows, const std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>& adj,
                         std::vector<std::uint32_t>& row_edge) {
  std::vector<std::uint32_t> col_row(rows, kNone);
  row_edge.assign(rows, kNone);
  std::vector<std::uint32_t> stamp(rows, 0);
  std::uint32_t round = 0;
  for (std::uint32_t r0 = 0; r0 < rows; ++r0) {
    ++round;
    // Iterative DFS.
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{r0, 0}};
    std::vector<std::pair<std::uint32_t, std::uint32_t>> path;  // (row, edge)
    bool found = false;
    while (!stack.empty() && !found) {
      auto& [r, i] = stack.back();
      if (i == adj[r].size()) {
        stack.pop_back();
        if (!path.empty()) path.pop_back();
        continue;
      }
      auto [col, e] = adj[r][i++];
      if (stamp[col] == round) continue;
      stamp[col] = round;
      path.emplace_back(r, e);
      if (col_row[col] == kNone) {
        found = true;
        break;
      }
      stack.emplace_back(col_row[col], 0);
    }
    if (!found) return false;
    for (auto [r, e] : path) {
      row_edge[r] = e;
    }
    // Recompute col_row from the path.
    for (auto [r, e] : path) {
      for (auto [col, ee] : adj[r])
        if (ee == e) {
          col_row[col] = r;
          break;
        }
    }
  }
  return true;
}

Scalar fkt_compact(const Compact& c) {
  // Quick structural exits.
  if (c.n % 2) return Scalar(0);
  {
    std::vector<VertexId> parent(c.n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](VertexId x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const auto& [u, v] : c.ends) parent[find(u)] = find(v);
    std::vector<std::size_t> size(c.n, 0);
    for (VertexId x = 0; x < c.n; ++x) ++size[find(x)];
    for (VertexId x = 0; x < c.n; ++x)
      if (find(x) == x && size[x] % 2) return Scalar(0);
  }
  if (c.n == 0) return Scalar(1);
  Oriented o = orient(c);
  const std::size_t m = c.ends.size();
  auto sgn = [&](EdgeId e, VertexId from) {
    bool fw = o.forward[e];
    return (c.ends[e].first == from) == fw ? 1 : -1;
  };

  std::vector<int> colour;
  if (bipartition(c, colour)) {
    std::vector<std::uint32_t> idx(c.n);
    std::size_t rows = 0, cols = 0;
    for (VertexId x = 0; x < c.n; ++x) idx[x] = static_cast<std::uint32_t>(colour[x] == 0 ? rows++ : cols++);
    if (rows != cols) return Scalar(0);
    std::vector<modular::SparseEntry> entries;
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(rows);
    std::vector<int> esign(m);
    for (EdgeId e = 0; e < m; ++e) {
      auto [u, v] = c.ends[e];
      if (colour[u] != 0) std::swap(u, v);
      esign[e] = sgn(e, u);
      entries.push_back({idx[u], idx[v], esign[e] == 1 ? c.w[e] : -c.w[e]});
      adj[idx[u]].emplace_back(idx[v], e);
    }
    std::vector<std::uint32_t> row_edge;
    if (!structural_matching(rows, adj, row_edge)) return Scalar(0);
    // Sign of the permutation row -> matched column, times the edge signs.
    std::vector<std::uint32_t> perm(rows);
    int eps = 1;
    for (std::uint32_t r = 0; r < rows; ++r) {
      EdgeId e = row_edge[r];
      auto [u, v] = c.ends[e];
      if (colour[u] != 0) std::swap(u, v);
      perm[r] = idx[v];
      eps *= esign[e];
    }
    std::vector<char> vis(rows, 0);
    for (std::uint32_t r = 0; r < rows; ++r) {
      if (vis[r]) continue;
      std::size_t len = 0;
      for (std::uint32_t x = r; !vis[x]; x = perm[x]) {
        vis[x] = 1;
        ++len;
      }
      if (len % 2 == 0) eps = -eps;
    }
    Scalar det = modular::sparse_determinant(rows, entries);
    return eps == 1 ? det : -det;
  }

  std::vector<modular::SparseEntry> entries, unit;
  for (EdgeId e = 0; e < m; ++e) {
    auto [u, v] = c.ends[e];
    int s = sgn(e, u);
    entries.push_back({u, v, s == 1 ? c.w[e] : -c.w[e]});
    unit.push_back({u, v, Scalar(s)});
  }
  Scalar pu = modular::sparse_pfaffian(c.n, unit);
  if (pu.is_zero()) return Scalar(0);
  Scalar pf = modular::sparse_pfaffian(c.n, entries);
  return pu.re().sign() > 0 ? pf : -pf;
}
}  // namespace

Scalar perfmatch_bruteforce(const WeightedGraph& g) {
  const std::size_t n = g.vertex_count;
  if (n > 64) throw BudgetExceeded("perfmatch_bruteforce: more than 64 vertices");
  if (n % 2) return Scalar(0);
  // Parallel edges summed.
  std::vector<std::map<VertexId, Scalar>> adj(n);
  for (const auto& e : g.edges) {
    if (e.u >= n || e.v >= n) throw ValidationError("edge endpoint out of range");
    if (e.u == e.v) continue;
    adj[e.u][e.v] += e.w;
    adj[e.v][e.u] += e.w;
  }
  std::unordered_map<std::uint64_t, Scalar> memo;
  const std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  std::function<Scalar(std::uint64_t)> rec = [&](std::uint64_t used) -> Scalar {
    if (used == full) return Scalar(1);
    auto it = memo.find(used);
    if (it != memo.end()) return it->second;
    VertexId x = static_cast<VertexId>(__builtin_ctzll(~used));
    Scalar total(0);
    for (const auto& [y, w] : adj[x]) {
      if (y < x || (used >> y & 1) || w.is_zero()) continue;
      Scalar sub = rec(used | (std::uint64_t{1} << x) | (std::uint64_t{1} << y));
      if (!sub.is_zero()) total += w * sub;
    }
    memo.emplace(used, total);
    return total;
  };
  return rec(0);
}

Orientation pfaffian_orientation(const EmbeddedGraph& g) {
  Compact c = compact(g.graph, g.rotation, false);
  Oriented o = orient(c);
  Orientation out;
  out.forward.assign(g.graph.edges.size(), 1);
  for (EdgeId e = 0; e < c.orig.size(); ++e) out.forward[c.orig[e]] = o.forward[e];
  return out;
}

FaceParity check_pfaffian_orientation(const EmbeddedGraph& g, const Orientation& o) {
  if (o.forward.size() != g.graph.edges.size()) throw DimensionError("orientation size differs from edge count");
  Compact c = compact(g.graph, g.rotation, false);
  Oriented ref = orient(c);
  FaceParity fp;
  fp.outer = ref.outer;
  fp.ok = true;
  for (std::size_t f = 0; f < ref.faces.size(); ++f) {
    std::vector<Dart> face;
    std::size_t cw = 0;
    for (Dart d : ref.faces[f]) {
      EdgeId e = c.orig[dart_edge(d)];
      face.push_back(make_dart(e, dart_side(d)));
      if (static_cast<bool>(o.forward[e]) == static_cast<bool>(dart_side(d))) ++cw;
    }
    fp.faces.push_back(std::move(face));
    fp.clockwise.push_back(cw);
    if (!fp.outer[f] && cw % 2 == 0) fp.ok = false;
  }
  return fp;
}

Scalar perfmatch_fkt(const EmbeddedGraph& g) {
  Compact c = compact(g.graph, g.rotation, false);
  // The Euler check runs on the full (loop-free) embedding, then zero-weight
  // edges are dropped: deleting edges keeps an embedding plane.
  auto rep = euler_check(c.n, c.ends, c.rotation);
  if (!rep.ok) throw EmbeddingError("not a plane embedding: " + rep.message);
  return fkt_compact(compact(g.graph, g.rotation, true));
}

Scalar perfmatch_apex(const WeightedGraph& g, const std::vector<VertexId>& apices, const Rotation& rotation) {
  return perfmatch_apex(g, apices, rotation, nullptr);
}

Scalar perfmatch_apex(const WeightedGraph& g, const std::vector<VertexId>& apices, const Rotation& rotation,
                      FktStats* stats) {
  const std::size_t n = g.vertex_count;
  if (rotation.size() != n) throw EmbeddingError("rotation size differs from vertex count");
  std::vector<char> is_apex(n, 0);
  for (VertexId a : apices) {
    if (a >= n || is_apex[a]) throw ValidationError("apex list has an unknown or repeated vertex");
    is_apex[a] = 1;
  }
  for (VertexId a : apices)
    if (!rotation[a].empty()) throw EmbeddingError("apex vertex has a rotation");
  // Edges at apices, per apex.
  std::vector<std::vector<EdgeId>> at(n);
  for (EdgeId e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    if (ed.u >= n || ed.v >= n) throw ValidationError("edge endpoint out of range");
    if (ed.u == ed.v || ed.w.is_zero()) continue;
    if (is_apex[ed.u]) at[ed.u].push_back(e);
    if (is_apex[ed.v] && ed.u != ed.v) at[ed.v].push_back(e);
  }
  // Sum of weight products per set of non-apex partners.
  std::map<std::vector<VertexId>, Scalar> by_partners;
  std::vector<char> used(n, 0);
  std::vector<VertexId> partners;
  std::function<void(std::size_t, const Scalar&)> rec = [&](std::size_t i, const Scalar& w) {
    while (i < apices.size() && used[apices[i]]) ++i;
    if (i == apices.size()) {
      auto key = partners;
      std::sort(key.begin(), key.end());
      by_partners[key] += w;
      return;
    }
    VertexId a = apices[i];
    used[a] = 1;
    for (EdgeId e : at[a]) {
      VertexId b = g.edges[e].u == a ? g.edges[e].v : g.edges[e].u;
      if (used[b]) continue;
      used[b] = 1;
      if (!is_apex[b]) partners.push_back(b);
      rec(i + 1, w * g.edges[e].w);
      if (!is_apex[b]) partners.pop_back();
      used[b] = 0;
    }
    used[a] = 0;
  };
  rec(0, Scalar(1));

  Scalar total(0);
  for (const auto& [key, w] : by_partners) {
    if (w.is_zero()) continue;
    // Residual: g minus apices and partners, compacted vertex ids.
    std::vector<char> gone = is_apex;
    for (VertexId b : key) gone[b] = 1;
    std::vector<VertexId> id(n, kNone);
    WeightedGraph r;
    for (VertexId x = 0; x < n; ++x)
      if (!gone[x]) id[x] = static_cast<VertexId>(r.vertex_count++);
    std::vector<EdgeId> eid(g.edges.size(), kNone);
    for (EdgeId e = 0; e < g.edges.size(); ++e) {
      const auto& ed = g.edges[e];
      if (gone[ed.u] || gone[ed.v]) continue;
      eid[e] = r.add_edge(id[ed.u], id[ed.v], ed.w);
    }
    Rotation rr(r.vertex_count);
    for (VertexId x = 0; x < n; ++x) {
      if (gone[x]) continue;
      for (Dart d : rotation[x]) {
        if (dart_edge(d) >= g.edges.size()) throw EmbeddingError("rotation lists an unknown dart");
        EdgeId ne = eid[dart_edge(d)];
        if (ne != kNone) rr[id[x]].push_back(make_dart(ne, dart_side(d)));
      }
    }
    if (stats) {
      ++stats->fkt_calls;
      stats->residual_vertices = std::max(stats->residual_vertices, r.vertex_count);
    }
    Scalar pm = perfmatch_fkt({std::move(r), std::move(rr)});
    if (!pm.is_zero()) total += w * pm;
  }
  return total;
}

ApexInstance apex_instance(const SignatureGraph& g) {
  if (!g.witness) throw EmbeddingError("apex_instance: graph has no planarity witness");
  ApexInstance out;
  out.graph = to_weighted_graph(g);
  const auto& w = *g.witness;
  if (w.rotation.size() != g.vertex_count() || w.excluded.size() != g.vertex_count())
    throw EmbeddingError("apex_instance: witness size mismatch");
  std::vector<char> listed(2 * g.edge_count(), 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (w.excluded[v]) {
      out.apices.push_back(v);
      if (!w.rotation[v].empty()) throw EmbeddingError("apex_instance: excluded vertex has darts");
    }
    for (Dart d : w.rotation[v]) listed[d] = 1;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ed = g.edge(e);
    bool touches = w.excluded[ed.u] || w.excluded[*ed.v];
    if (!touches && !(listed[2 * e] && listed[2 * e + 1]))
      throw EmbeddingError("apex_instance: edge " + std::to_string(e) + " between in-plane vertices is not embedded");
  }
  out.rotation = w.rotation;
  return out;
}

bool is_bipartite(const WeightedGraph& g) {
  Compact c;
  c.n = g.vertex_count;
  for (const auto& e : g.edges) {
    if (e.u == e.v) return false;
    c.ends.emplace_back(e.u, e.v);
  }
  std::vector<int> colour;
  return bipartition(c, colour);
}

}  // namespace holant
