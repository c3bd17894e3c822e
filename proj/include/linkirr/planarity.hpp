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

#ifndef LINKIRR_PLANARITY_HPP_
#define LINKIRR_PLANARITY_HPP_

/**
 * Planarity with certificates in both directions.
 *
 * Each biconnected block is embedded by path addition (Demoucron, Malgrange
 * and Pertuiset): start from a cycle, repeatedly pick a fragment with the
 * fewest admissible faces and route one of its attachment paths through such
 * a face. A fragment with no admissible face proves the block non-planar.
 * Block rotations are glued at cut vertices.
 *
 * Non-planar graphs are shrunk to an edge-minimal non-planar subgraph, which
 * is a subdivision of K5 or K3,3; its branch vertices and paths form the
 * Kuratowski certificate.
 */

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "graph.hpp"

namespace linkirr {

/// rotation[v] lists N(v) in cyclic order around v.
using RotationSystem = std::vector<std::vector<Vertex>>;

struct KuratowskiWitness {
  enum class Kind { kK5, kK33 };
  Kind kind = Kind::kK5;
  std::vector<Vertex> branch;               // K3,3: first three form one side
  std::vector<std::vector<Vertex>> paths;   // endpoints are branch vertices
};

struct PlanarityResult {
  bool planar = false;
  std::optional<RotationSystem> embedding;
  std::optional<KuratowskiWitness> obstruction;
};

namespace detail {

/// Edge sets of the biconnected blocks, each as a vertex mask (blocks are induced).
inline auto blocks(const Graph& g) -> std::vector<Row> {
  const int n = g.order();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<Row> out;
  int time = 0;
  std::function<void(int, int)> dfs = [&](int u, int parent) {
    disc[u] = low[u] = time++;
    for_each_bit(g.neighbors(u), [&](int w) {
      if (disc[w] < 0) {
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          Row block = 0;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            block |= bit(e.first) | bit(e.second);
            if (e == Edge{u, w}) break;
          }
          out.push_back(block);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    });
  };
  for (int v = 0; v < n; ++v)
    if (disc[v] < 0) dfs(v, -1);
  return out;
}

/// Oriented faces of a planar embedding of the 2-connected graph induced on
/// `block`, or nullopt when it is not planar.
inline auto embed_block(const Graph& g, Row block) -> std::optional<std::vector<std::vector<Vertex>>> {
  const auto adj = [&](int v) { return g.neighbors(v) & block; };
  int total = 0;
  for_each_bit(block, [&](int v) { total += std::popcount(adj(v)); });
  total /= 2;

  // Initial cycle: walk a DFS tree until a back edge closes a cycle.
  std::vector<int> parent(kMaxVertices, -1), depth(kMaxVertices, -1);
  std::vector<Vertex> cycle;
  {
    const int root = std::countr_zero(block);
    std::vector<int> stack{root};
    depth[root] = 0;
    while (!stack.empty() && cycle.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for_each_bit(adj(u), [&](int w) {
        if (!cycle.empty()) return;
        if (depth[w] < 0) {
          depth[w] = depth[u] + 1;
          parent[w] = u;
          stack.push_back(w);
        } else if (w != parent[u] && depth[w] < depth[u]) {
          // w is an ancestor of u only if it lies on u's tree path.
          for (int x = u; x >= 0; x = parent[x])
            if (x == w) {
              for (int y = u; y != w; y = parent[y]) cycle.push_back(y);
              cycle.push_back(w);
              break;
            }
        }
      });
    }
    if (cycle.empty()) {
      // DFS order from a stack may miss back edges; fall back to BFS closure.
      for (int u = 0; u < kMaxVertices && cycle.empty(); ++u) {
        if (!(block & bit(u))) continue;
        for_each_bit(adj(u), [&](int w) {
          if (!cycle.empty() || w < u) return;
          // Shortest u-w path avoiding edge uw.
          std::vector<int> prev(kMaxVertices, -1);
          Row seen = bit(u), frontier = bit(u);
          while (frontier && !(seen & bit(w))) {
            Row next = 0;
            for_each_bit(frontier, [&](int x) {
              for_each_bit(adj(x) & ~seen, [&](int y) {
                if (x == u && y == w) return;
                if (prev[y] < 0) prev[y] = x;
                next |= bit(y);
              });
            });
            seen |= next;
            frontier = next;
          }
          if (seen & bit(w)) {
            for (int x = w; x != u; x = prev[x]) cycle.push_back(x);
            cycle.push_back(u);
          }
        });
      }
    }
  }

  std::array<Row, kMaxVertices> embedded{};
  Row in_h = 0;
  int embedded_edges = 0;
  const auto add_edge = [&](int a, int b) {
    embedded[a] |= bit(b);
    embedded[b] |= bit(a);
    in_h |= bit(a) | bit(b);
    ++embedded_edges;
  };
  for (std::size_t i = 0; i < cycle.size(); ++i) add_edge(cycle[i], cycle[(i + 1) % cycle.size()]);
  std::vector<std::vector<Vertex>> faces{cycle, std::vector<Vertex>(cycle.rbegin(), cycle.rend())};

  struct Fragment {
    Row attachments = 0;
    Row interior = 0;  // empty for a single chord
    Edge chord{-1, -1};
  };

  while (embedded_edges < total) {
    std::vector<Fragment> fragments;
    for_each_bit(in_h, [&](int u) {
      for_each_bit(adj(u) & in_h & ~embedded[u], [&](int w) {
        if (u < w) fragments.push_back(Fragment{bit(u) | bit(w), 0, {u, w}});
      });
    });
    Row left = block & ~in_h;
    while (left) {
      Row comp = left & -left, frontier = comp;
      while (frontier) {
        Row next = 0;
        for_each_bit(frontier, [&](int x) { next |= adj(x) & ~in_h; });
        frontier = next & ~comp;
        comp |= next;
      }
      Row attach = 0;
      for_each_bit(comp, [&](int x) { attach |= adj(x) & in_h; });
      fragments.push_back(Fragment{attach, comp, {-1, -1}});
      left &= ~comp;
    }

    std::vector<Row> face_masks;
    for (const auto& f : faces) {
      Row m = 0;
      for (int v : f) m |= bit(v);
      face_masks.push_back(m);
    }
    int chosen = -1, chosen_face = -1, best = kMaxVertices * kMaxVertices;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      int admissible = 0, first = -1;
      for (std::size_t f = 0; f < faces.size(); ++f)
        if ((fragments[i].attachments & ~face_masks[f]) == 0) {
          if (first < 0) first = static_cast<int>(f);
          ++admissible;
        }
      if (admissible == 0) return std::nullopt;
      if (admissible < best) {
        best = admissible;
        chosen = static_cast<int>(i);
        chosen_face = first;
      }
    }

    // Path between two attachments through the fragment.
    const Fragment& frag = fragments[chosen];
    std::vector<Vertex> path;
    if (frag.interior == 0) {
      path = {frag.chord.first, frag.chord.second};
    } else {
      const int a = std::countr_zero(frag.attachments);
      std::vector<int> prev(kMaxVertices, -1);
      Row seen = 0, frontier = adj(a) & frag.interior;
      for_each_bit(frontier, [&](int x) { prev[x] = a; });
      seen = frontier;
      int end = -1, b = -1;
      while (frontier && end < 0) {
        for_each_bit(frontier, [&](int x) {
          if (end >= 0) return;
          const Row exits = adj(x) & in_h & ~bit(a);
          if (exits) {
            end = x;
            b = std::countr_zero(exits);
          }
        });
        if (end >= 0) break;
        Row next = 0;
        for_each_bit(frontier, [&](int x) {
          for_each_bit(adj(x) & frag.interior & ~seen, [&](int y) {
            prev[y] = x;
            next |= bit(y);
          });
        });
        seen |= next;
        frontier = next;
      }
      if (end < 0) return std::nullopt;  // unreachable for 2-connected input
      path.push_back(b);
      for (int x = end; x != a; x = prev[x]) path.push_back(x);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
    }

    const std::vector<Vertex> face = faces[chosen_face];
    const int len = static_cast<int>(face.size());
    const int ia = static_cast<int>(std::find(face.begin(), face.end(), path.front()) - face.begin());
    const int ib = static_cast<int>(std::find(face.begin(), face.end(), path.back()) - face.begin());
    std::vector<Vertex> one, two;
    for (int i = ia;; i = (i + 1) % len) {
      one.push_back(face[i]);
      if (i == ib) break;
    }
    for (std::size_t k = path.size() - 2; k >= 1; --k) one.push_back(path[k]);
    for (int i = ib;; i = (i + 1) % len) {
      two.push_back(face[i]);
      if (i == ia) break;
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) two.push_back(path[k]);
    faces[chosen_face] = std::move(one);
    faces.push_back(std::move(two));
    for (std::size_t k = 0; k + 1 < path.size(); ++k) add_edge(path[k], path[k + 1]);
  }
  return faces;
}

}  // namespace detail

/// A rotation system when g is planar.
inline auto planar_embedding(const Graph& g) -> std::optional<RotationSystem> {
  RotationSystem rotation(g.order());
  for (Row block : detail::blocks(g)) {
    std::vector<std::vector<Vertex>> local(kMaxVertices);
    if (std::popcount(block) == 2) {
      const int a = std::countr_zero(block), b = 63 - std::countl_zero(block);
      local[a] = {b};
      local[b] = {a};
    } else {
      const auto faces = detail::embed_block(g, block);
      if (!faces) return std::nullopt;
      std::vector<std::map<int, int>> succ(kMaxVertices);
      for (const auto& f : *faces)
        for (std::size_t i = 0; i < f.size(); ++i) {
          const int x = f[(i + f.size() - 1) % f.size()], y = f[i], z = f[(i + 1) % f.size()];
          succ[y][x] = z;
        }
      for_each_bit(block, [&](int v) {
        const int start = std::countr_zero(g.neighbors(v) & block);
        int cur = start;
        do {
          local[v].push_back(cur);
          cur = succ[v].at(cur);
        } while (cur != start);
      });
    }
    for_each_bit(block, [&](int v) { rotation[v].insert(rotation[v].end(), local[v].begin(), local[v].end()); });
  }
  return rotation;
}

/// Faces traced from a rotation system: dart (u,v) is followed by (v, next of u around v).
inline auto trace_faces(const Graph& g, const RotationSystem& rotation) -> std::vector<std::vector<Vertex>> {
  std::map<Edge, bool> used;
  std::vector<std::vector<Vertex>> faces;
  const auto next_around = [&](int v, int u) {
    const auto& r = rotation[v];
    const auto it = std::find(r.begin(), r.end(), u);
    return r[(it - r.begin() + 1) % r.size()];
  };
  for (int u = 0; u < g.order(); ++u)
    for (int v : rotation[u]) {
      if (used[{u, v}]) continue;
      std::vector<Vertex> face;
      int a = u, b = v;
      while (!used[{a, b}]) {
        used[{a, b}] = true;
        face.push_back(a);
        const int c = next_around(b, a);
        a = b;
        b = c;
      }
      faces.push_back(std::move(face));
    }
  return faces;
}

/// Checks that rotation[v] permutes N(v) and that every component satisfies V - E + F = 2.
inline auto embedding_is_valid(const Graph& g, const RotationSystem& rotation) -> bool {
  if (static_cast<int>(rotation.size()) != g.order()) return false;
  for (int v = 0; v < g.order(); ++v) {
    Row seen = 0;
    for (int w : rotation[v]) {
      if (w < 0 || w >= g.order() || (seen & bit(w))) return false;
      seen |= bit(w);
    }
    if (seen != g.neighbors(v)) return false;
  }
  const auto faces = trace_faces(g, rotation);
  for (Row comp : components(g)) {
    const int vertices = std::popcount(comp);
    int edges = 0, count = 0;
    for_each_bit(comp, [&](int v) { edges += g.degree(v); });
    edges /= 2;
    for (const auto& f : faces)
      if (comp & bit(f.front())) ++count;
    if (edges == 0) count = 1;
    if (vertices - edges + count != 2) return false;
  }
  return true;
}

inline auto obstruction_is_valid(const Graph& g, const KuratowskiWitness& w) -> bool {
  const bool k5 = w.kind == KuratowskiWitness::Kind::kK5;
  const std::size_t branches = k5 ? 5 : 6, paths = k5 ? 10 : 9;
  if (w.branch.size() != branches || w.paths.size() != paths) return false;
  Row branch = 0;
  for (int b : w.branch) {
    if (b < 0 || b >= g.order() || (branch & bit(b))) return false;
    branch |= bit(b);
  }
  const auto index = [&](int v) { return static_cast<int>(std::find(w.branch.begin(), w.branch.end(), v) - w.branch.begin()); };
  std::set<std::pair<int, int>> pairs;
  Row interior = 0;
  for (const auto& p : w.paths) {
    if (p.size() < 2) return false;
    if (!(branch & bit(p.front())) || !(branch & bit(p.back()))) return false;
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
      if (p[i] < 0 || p[i + 1] < 0 || p[i] >= g.order() || p[i + 1] >= g.order() || !g.adjacent(p[i], p[i + 1]))
        return false;
    for (std::size_t i = 1; i + 1 < p.size(); ++i) {
      if ((branch | interior) & bit(p[i])) return false;
      interior |= bit(p[i]);
    }
    int a = index(p.front()), b = index(p.back());
    if (a > b) std::swap(a, b);
    if (a == b) return false;
    if (!k5 && !(a < 3 && b >= 3)) return false;
    pairs.emplace(a, b);
  }
  return pairs.size() == paths;
}

namespace detail {

inline auto without_edge(const Graph& g, Edge e) -> Graph {
  std::array<Row, kMaxVertices> rows{};
  for (int v = 0; v < g.order(); ++v) rows[v] = g.neighbors(v);
  rows[e.first] &= ~bit(e.second);
  rows[e.second] &= ~bit(e.first);
  return Graph::from_rows(g.order(), std::span<const Row>(rows.data(), g.order()));
}

inline auto kuratowski_subgraph(const Graph& g) -> KuratowskiWitness {
  Graph h = g;
  // Above 3n - 6 edges a graph is non-planar outright; drop edges without testing.
  for (const Edge& e : g.edges()) {
    if (h.order() < 3 || h.size() <= 3 * h.order() - 5) break;
    h = without_edge(h, e);
  }
  for (const Edge& e : h.edges()) {
    Graph trial = without_edge(h, e);
    if (!planar_embedding(trial)) h = std::move(trial);
  }
  KuratowskiWitness w;
  Row branch = 0;
  for (int v = 0; v < h.order(); ++v)
    if (h.degree(v) >= 3) branch |= bit(v);
  for_each_bit(branch, [&](int v) { w.branch.push_back(v); });
  w.kind = w.branch.size() == 5 ? KuratowskiWitness::Kind::kK5 : KuratowskiWitness::Kind::kK33;
  std::vector<std::pair<int, int>> ends;
  for (int b : w.branch)
    for_each_bit(h.neighbors(b), [&](int first) {
      std::vector<Vertex> p{b, first};
      while (!(branch & bit(p.back()))) {
        const Row onward = h.neighbors(p.back()) & ~bit(p[p.size() - 2]);
        p.push_back(std::countr_zero(onward));
      }
      if (b < p.back()) {
        w.paths.push_back(std::move(p));
        ends.emplace_back(b, w.paths.back().back());
      }
    });
  if (w.kind == KuratowskiWitness::Kind::kK33) {
    // Two-colour the branch vertices along the paths; side of the smallest first.
    std::map<int, int> side{{w.branch.front(), 0}};
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [a, b] : ends) {
        if (side.count(a) && !side.count(b)) side[b] = 1 - side[a], changed = true;
        if (side.count(b) && !side.count(a)) side[a] = 1 - side[b], changed = true;
      }
    }
    std::stable_partition(w.branch.begin(), w.branch.end(), [&](int v) { return side[v] == 0; });
  }
  return w;
}

}  // namespace detail

inline auto is_planar(const Graph& g) -> PlanarityResult {
  PlanarityResult result;
  if (auto rotation = planar_embedding(g)) {
    result.planar = true;
    result.embedding = std::move(rotation);
  } else {
    result.obstruction = detail::kuratowski_subgraph(g);
  }
  return result;
}

/// Necessary condition e <= 3n - 6 for planar graphs with n >= 3.
inline auto planar_edge_bound_check(const Graph& g) -> bool {
  if (g.order() < 3) throw GraphError("edge bound needs at least 3 vertices");
  return g.size() <= 3 * g.order() - 6;
}

/// Planar with 3n - 6 edges, and every face of the computed embedding is a triangle.
inline auto is_triangulation(const Graph& g) -> bool {
  if (g.order() < 3) throw GraphError("triangulation needs at least 3 vertices");
  const auto rotation = planar_embedding(g);
  if (!rotation || g.size() != 3 * g.order() - 6) return false;
  const auto faces = trace_faces(g, *rotation);
  return std::all_of(faces.begin(), faces.end(), [](const auto& f) { return f.size() == 3; });
}

}  // namespace linkirr

#endif  // LINKIRR_PLANARITY_HPP_
