// Copyright 2026 The linkirr Authors
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

#ifndef LINKIRR_GRAPH_HPP_
#define LINKIRR_GRAPH_HPP_

/**
 * Simple undirected graphs on at most 64 vertices, stored as one 64-bit
 * adjacency row per vertex. Values are immutable once built.
 */

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace linkirr {

inline constexpr int kMaxVertices = 64;

using Row = std::uint64_t;
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

constexpr auto bit(int v) -> Row { return Row{1} << v; }

constexpr auto low_mask(int n) -> Row {
  return n >= 64 ? ~Row{0} : (Row{1} << n) - 1;
}

/// Calls f(v) for every set bit of the row, ascending.
template <typename F>
constexpr void for_each_bit(Row row, F&& f) {
  while (row != 0) {
    const int v = std::countr_zero(row);
    row &= row - 1;
    f(v);
  }
}

class Graph {
 public:
  Graph() = default;

  /// Edgeless graph on n vertices.
  explicit Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
      throw GraphError("vertex count " + std::to_string(n) +
                       " outside [0, " + std::to_string(kMaxVertices) + "]");
  }

  /// Builds from explicit pairs; duplicates and reversed duplicates collapse.
  static auto build(int n, std::span<const Edge> edges) -> Graph {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw GraphError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                         ") has a vertex outside [0, " + std::to_string(n) + ")");
      if (u == v)
        throw GraphError("self-loop (" + std::to_string(u) + ", " + std::to_string(v) + ")");
      g.rows_[u] |= bit(v);
      g.rows_[v] |= bit(u);
    }
    return g;
  }

  static auto build(int n, std::initializer_list<Edge> edges) -> Graph {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Builds from adjacency rows; rejects asymmetric rows, loops and stray bits.
  static auto from_rows(int n, std::span<const Row> rows) -> Graph {
    Graph g(n);
    if (static_cast<int>(rows.size()) < n) throw GraphError("too few adjacency rows");
    const Row mask = low_mask(n);
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~mask) throw GraphError("adjacency row " + std::to_string(v) + " out of range");
      if (rows[v] & bit(v)) throw GraphError("self-loop at " + std::to_string(v));
      g.rows_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v) {
      bool symmetric = true;
      for_each_bit(g.rows_[v], [&](int w) { symmetric = symmetric && (g.rows_[w] & bit(v)); });
      if (!symmetric) throw GraphError("adjacency rows are not symmetric at " + std::to_string(v));
    }
    return g;
  }

  auto order() const -> int { return n_; }

  auto size() const -> int {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(rows_[v]);
    return twice / 2;
  }

  auto adjacent(Vertex u, Vertex v) const -> bool { return (rows_[u] >> v) & 1U; }
  auto neighbors(Vertex v) const -> Row { return rows_[v]; }
  auto degree(Vertex v) const -> int { return std::popcount(rows_[v]); }
  auto rows() const -> std::span<const Row> { return {rows_.data(), static_cast<std::size_t>(n_)}; }
  auto vertex_mask() const -> Row { return low_mask(n_); }

  /// Edges (u, v) with u < v in row-major order.
  auto edges() const -> std::vector<Edge> {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for_each_bit(rows_[u] & ~low_mask(u + 1), [&](int v) { out.emplace_back(u, v); });
    return out;
  }

  /// Graph with one more vertex adjacent to `nbrs`.
  auto with_vertex(Row nbrs) const -> Graph {
    if (n_ >= kMaxVertices) throw GraphError("vertex cap reached");
    if (nbrs & ~low_mask(n_)) throw GraphError("new vertex neighbours out of range");
    Graph g = *this;
    g.n_ = n_ + 1;
    g.rows_[n_] = nbrs;
    for_each_bit(nbrs, [&](int w) { g.rows_[w] |= bit(n_); });
    return g;
  }

  /// Relabels vertex v to perm[v].
  auto relabel(std::span<const int> perm) const -> Graph {
    Graph g(n_);
    for (int v = 0; v < n_; ++v) {
      Row r = 0;
      for_each_bit(rows_[v], [&](int w) { r |= bit(perm[w]); });
      g.rows_[perm[v]] = r;
    }
    return g;
  }

  friend auto operator==(const Graph& a, const Graph& b) -> bool {
    return a.n_ == b.n_ && std::equal(a.rows_.begin(), a.rows_.begin() + a.n_, b.rows_.begin());
  }

 private:
  int n_ = 0;
  std::array<Row, kMaxVertices> rows_{};
};

struct DegreeSummary {
  std::vector<int> multiset;  // sorted ascending
  std::vector<int> distinct;  // sorted ascending
};

inline auto degree(const Graph& g, Vertex v) -> int {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  return g.degree(v);
}

inline auto degree_summary(const Graph& g) -> DegreeSummary {
  DegreeSummary s;
  for (int v = 0; v < g.order(); ++v) s.multiset.push_back(g.degree(v));
  std::sort(s.multiset.begin(), s.multiset.end());
  s.distinct = s.multiset;
  s.distinct.erase(std::unique(s.distinct.begin(), s.distinct.end()), s.distinct.end());
  return s;
}

inline auto complement(const Graph& g) -> Graph {
  std::array<Row, kMaxVertices> rows{};
  const Row mask = g.vertex_mask();
  for (int v = 0; v < g.order(); ++v) rows[v] = ~g.neighbors(v) & mask & ~bit(v);
  return Graph::from_rows(g.order(), std::span<const Row>(rows.data(), g.order()));
}

/// Subgraph induced on `subset`, relabelled 0..|S|-1 by ascending original index.
inline auto induced_subgraph(const Graph& g, Row subset) -> Graph {
  subset &= g.vertex_mask();
  std::array<int, kMaxVertices> index{};
  int k = 0;
  for_each_bit(subset, [&](int v) { index[v] = k++; });
  std::array<Row, kMaxVertices> rows{};
  for_each_bit(subset, [&](int v) {
    Row r = 0;
    for_each_bit(g.neighbors(v) & subset, [&](int w) { r |= bit(index[w]); });
    rows[index[v]] = r;
  });
  return Graph::from_rows(k, std::span<const Row>(rows.data(), k));
}

inline auto induced_subgraph(const Graph& g, std::span<const Vertex> subset) -> Graph {
  Row mask = 0;
  for (Vertex v : subset) {
    if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
    mask |= bit(v);
  }
  return induced_subgraph(g, mask);
}

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

/// Shortest cycle length by BFS from every vertex; kInfiniteGirth for forests.
inline auto girth(const Graph& g) -> int {
  const int n = g.order();
  // Triangle test on rows first: the common case in this domain.
  for (int u = 0; u < n; ++u) {
    bool tri = false;
    for_each_bit(g.neighbors(u) & ~low_mask(u + 1), [&](int v) { tri = tri || (g.neighbors(u) & g.neighbors(v)); });
    if (tri) return 3;
  }
  int best = kInfiniteGirth;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for_each_bit(g.neighbors(u), [&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          q.push(w);
        } else if (parent[u] != w) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  return best;
}

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;       // 0/1 per vertex when bipartite
  std::vector<Vertex> odd_cycle;   // closed walk v0..vk (v0 not repeated) when not
};

inline auto is_bipartite(const Graph& g) -> BipartiteResult {
  const int n = g.order();
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (Row r = g.neighbors(u); r != 0; r &= r - 1) {
        const int w = std::countr_zero(r);
        if (color[w] < 0) {
          color[w] = 1 - color[u];
          parent[w] = u;
          depth[w] = depth[u] + 1;
          q.push(w);
        } else if (color[w] == color[u]) {
          // Equal BFS parity: the tree paths to the common ancestor plus uw form an odd cycle.
          std::vector<Vertex> left{u}, right{w};
          int a = u, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          right.pop_back();
          BipartiteResult res;
          res.odd_cycle = std::move(left);
          res.odd_cycle.insert(res.odd_cycle.end(), right.rbegin(), right.rend());
          return res;
        }
      }
    }
  }
  BipartiteResult res;
  res.bipartite = true;
  res.coloring = std::move(color);
  return res;
}

/// Common degree when regular; nullopt otherwise. The order-0 graph is 0-regular.
inline auto regularity(const Graph& g) -> std::optional<int> {
  if (g.order() == 0) return 0;
  const int r = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != r) return std::nullopt;
  return r;
}

inline auto is_connected(const Graph& g) -> bool {
  if (g.order() == 0) return true;
  Row seen = bit(0), frontier = bit(0);
  while (frontier != 0) {
    Row next = 0;
    for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == g.vertex_mask();
}

/// Connected components as vertex masks, ordered by smallest member.
inline auto components(const Graph& g) -> std::vector<Row> {
  std::vector<Row> out;
  Row left = g.vertex_mask();
  while (left != 0) {
    Row seen = left & -left, frontier = seen;
    while (frontier != 0) {
      Row next = 0;
      for_each_bit(frontier, [&](int v) { next |= g.neighbors(v); });
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

namespace named {

inline auto complete(int n) -> Graph {
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < n; ++v) rows[v] = low_mask(n) & ~bit(v);
  return Graph::from_rows(n, std::span<const Row>(rows.data(), n));
}

inline auto cycle(int n) -> Graph {
  if (n < 3) throw GraphError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v) e.emplace_back(v, (v + 1) % n);
  return Graph::build(n, e);
}

inline auto path(int n) -> Graph {
  std::vector<Edge> e;
  for (int v = 0; v + 1 < n; ++v) e.emplace_back(v, v + 1);
  return Graph::build(n, e);
}

inline auto complete_bipartite(int a, int b) -> Graph {
  std::vector<Edge> e;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
  return Graph::build(a + b, e);
}

inline auto hypercube(int k) -> Graph {
  if (k < 0 || k > 6) throw GraphError("hypercube dimension must be in [0, 6]");
  const int n = 1 << k;
  std::vector<Edge> e;
  for (int v = 0; v < n; ++v)
    for (int i = 0; i < k; ++i)
      if (const int w = v ^ (1 << i); v < w) e.emplace_back(v, w);
  return Graph::build(n, e);
}

/// Two poles 0 and 11, upper pentagon 1..5, lower pentagon 6..10.
inline auto icosahedron() -> Graph {
  std::vector<Edge> e;
  for (int i = 0; i < 5; ++i) {
    const int up = 1 + i, up_next = 1 + (i + 1) % 5;
    const int lo = 6 + i, lo_next = 6 + (i + 1) % 5;
    e.emplace_back(0, up);
    e.emplace_back(up, up_next);
    e.emplace_back(up, lo);
    e.emplace_back(up, lo_next);
    e.emplace_back(lo, lo_next);
    e.emplace_back(lo, 11);
  }
  return Graph::build(12, e);
}

/// Parses names such as "K5", "C6", "P4", "K3,3", "Q4", "icosahedron".
inline auto make(const std::string& name) -> Graph {
  auto number = [&](std::size_t from, std::size_t to) -> int {
    const std::string digits = name.substr(from, to - from);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        digits.size() > 3)
      throw GraphError("unknown graph name '" + name + "'");
    return std::stoi(digits);
  };
  if (name == "icosahedron") return icosahedron();
  if (name.size() >= 2) {
    const auto comma = name.find(',');
    switch (name[0]) {
      case 'K':
        if (comma != std::string::npos) return complete_bipartite(number(1, comma), number(comma + 1, name.size()));
        return complete(number(1, name.size()));
      case 'C': return cycle(number(1, name.size()));
      case 'P': return path(number(1, name.size()));
      case 'Q': return hypercube(number(1, name.size()));
      default: break;
    }
  }
  throw GraphError("unknown graph name '" + name + "'");
}

}  // namespace named

}  // namespace linkirr

#endif  // LINKIRR_GRAPH_HPP_
