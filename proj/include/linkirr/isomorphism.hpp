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

#ifndef LINKIRR_ISOMORPHISM_HPP_
#define LINKIRR_ISOMORPHISM_HPP_

/**
 * Canonical labelling by individualisation-refinement.
 *
 * The search refines to the coarsest equitable partition, individualises
 * vertices of the first non-singleton cell and keeps the leaf whose relabelled
 * adjacency matrix is lexicographically smallest. Automorphisms discovered at
 * equal leaves prune sibling branches in the same orbit, so highly symmetric
 * graphs (edgeless, complete, disjoint cycles) stay cheap.
 */

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace linkirr {

/// Upper triangle of the canonically relabelled adjacency matrix, row-major,
/// packed most-significant-bit first. Ordering is lexicographic on that string.
struct CanonicalCode {
  int n = 0;
  std::vector<std::uint64_t> words;

  auto operator<=>(const CanonicalCode&) const = default;
  auto operator==(const CanonicalCode&) const -> bool = default;

  auto hex() const -> std::string {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    std::string out = std::to_string(n) + ":";
    const std::size_t nibbles = (bits + 3) / 4;
    for (std::size_t i = 0; i < nibbles; ++i) {
      const std::size_t word = i / 16, shift = 60 - 4 * (i % 16);
      out += kDigits[(words[word] >> shift) & 0xF];
    }
    return out;
  }

  /// Inverse of hex().
  static auto from_hex(const std::string& text) -> CanonicalCode {
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw GraphError("malformed canonical code '" + text + "'");
    CanonicalCode c;
    c.n = std::stoi(text.substr(0, colon));
    if (c.n < 0 || c.n > kMaxVertices) throw GraphError("malformed canonical code '" + text + "'");
    const std::size_t bits = static_cast<std::size_t>(c.n) * (c.n - (c.n > 0 ? 1 : 0)) / 2;
    c.words.assign((bits + 63) / 64, 0);
    const std::string digits = text.substr(colon + 1);
    if (digits.size() != (bits + 3) / 4) throw GraphError("malformed canonical code '" + text + "'");
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const char ch = digits[i];
      const int value = ch >= '0' && ch <= '9' ? ch - '0' : ch >= 'a' && ch <= 'f' ? ch - 'a' + 10 : -1;
      if (value < 0) throw GraphError("malformed canonical code '" + text + "'");
      c.words[i / 16] |= std::uint64_t(value) << (60 - 4 * (i % 16));
    }
    return c;
  }
};

struct CanonicalCodeHash {
  auto operator()(const CanonicalCode& c) const noexcept -> std::size_t {
    std::uint64_t h = 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(c.n);
    for (auto w : c.words) {
      h ^= w + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

struct CanonicalForm {
  CanonicalCode code;
  std::vector<int> perm;  // perm[v] = canonical label of v
};

namespace detail {

/// Packs matrix rows whose label j sits at bit (63 - j).
inline auto pack_upper(int n, const Row* rows) -> CanonicalCode {
  CanonicalCode c;
  c.n = n;
  const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
  c.words.assign((bits + 63) / 64, 0);
  std::size_t pos = 0;
  for (int i = 0; i + 1 < n; ++i) {
    const int len = n - 1 - i;
    const std::uint64_t chunk = rows[i] << (i + 1);  // top `len` bits are labels i+1..n-1
    const std::size_t word = pos / 64, off = pos % 64;
    c.words[word] |= chunk >> off;
    if (off + len > 64) c.words[word + 1] |= chunk << (64 - off);
    pos += len;
  }
  return c;
}

inline auto unpack_upper(const CanonicalCode& c) -> Graph {
  std::array<Row, kMaxVertices> rows{};
  std::size_t pos = 0;
  for (int i = 0; i + 1 < c.n; ++i)
    for (int j = i + 1; j < c.n; ++j, ++pos)
      if ((c.words[pos / 64] >> (63 - pos % 64)) & 1U) {
        rows[i] |= bit(j);
        rows[j] |= bit(i);
      }
  return Graph::from_rows(c.n, std::span<const Row>(rows.data(), c.n));
}

struct OrderedPartition {
  std::array<Row, kMaxVertices> cells{};
  int count = 0;
};

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : g_(g), n_(g.order()) {}

  auto run() -> CanonicalForm {
    CanonicalForm out;
    if (n_ == 0) {
      out.code = pack_upper(0, nullptr);
      return out;
    }
    OrderedPartition root;
    root.cells[0] = g_.vertex_mask();
    root.count = 1;
    search(root, 0);
    out.perm.resize(n_);
    for (int pos = 0; pos < n_; ++pos) out.perm[best_lab_[pos]] = pos;
    out.code = pack_upper(n_, best_rows_.data());
    return out;
  }

 private:
  static constexpr int kNoJump = kMaxVertices + 1;
  static constexpr std::size_t kMaxGenerators = 96;

  void refine(OrderedPartition& p) const {
    std::array<int, kMaxVertices> count{};
    bool changed = true;
    while (changed && p.count < n_) {
      changed = false;
      for (int s = 0; s < p.count && p.count < n_; ++s) {
        const Row splitter = p.cells[s];
        for (int c = 0; c < p.count; ++c) {
          const Row cell = p.cells[c];
          if ((cell & (cell - 1)) == 0) continue;
          int lo = kMaxVertices, hi = -1;
          for_each_bit(cell, [&](int v) {
            count[v] = std::popcount(g_.neighbors(v) & splitter);
            lo = std::min(lo, count[v]);
            hi = std::max(hi, count[v]);
          });
          if (lo == hi) continue;
          std::array<Row, kMaxVertices> parts{};
          int k = 0;
          for (int value = lo; value <= hi; ++value) {
            Row part = 0;
            for_each_bit(cell, [&](int v) {
              if (count[v] == value) part |= bit(v);
            });
            if (part != 0) parts[k++] = part;
          }
          std::copy_backward(p.cells.begin() + c + 1, p.cells.begin() + p.count, p.cells.begin() + p.count + k - 1);
          std::copy(parts.begin(), parts.begin() + k, p.cells.begin() + c);
          p.count += k - 1;
          c += k - 1;
          changed = true;
        }
      }
    }
  }

  auto fixes_prefix(const std::array<int, kMaxVertices>& gen, int depth) const -> bool {
    for (int i = 0; i < depth; ++i)
      if (gen[path_[i]] != path_[i]) return false;
    return true;
  }

  auto orbit_root(std::array<int, kMaxVertices>& uf, int v) const -> int {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  }

  /// True when v shares an orbit, under stored automorphisms fixing the
  /// current prefix, with an already explored sibling.
  auto pruned(int v, const std::vector<int>& explored, int depth) const -> bool {
    if (generators_.empty()) return false;
    std::array<int, kMaxVertices> uf{};
    std::iota(uf.begin(), uf.begin() + n_, 0);
    for (const auto& gen : generators_) {
      if (!fixes_prefix(gen, depth)) continue;
      for (int x = 0; x < n_; ++x) {
        const int a = orbit_root(uf, x), b = orbit_root(uf, gen[x]);
        if (a != b) uf[std::max(a, b)] = std::min(a, b);
      }
    }
    const int root = orbit_root(uf, v);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return orbit_root(uf, e) == root; });
  }

  auto search(OrderedPartition p, int depth) -> int {
    refine(p);
    if (p.count == n_) return leaf(p, depth);
    int target = 0;
    while ((p.cells[target] & (p.cells[target] - 1)) == 0) ++target;
    const Row cell = p.cells[target];
    std::vector<int> explored;
    for (Row rest = cell; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if (!explored.empty() && pruned(v, explored, depth)) continue;
      path_[depth] = v;
      OrderedPartition child = p;
      std::copy_backward(child.cells.begin() + target + 1, child.cells.begin() + child.count,
                         child.cells.begin() + child.count + 1);
      child.cells[target] = bit(v);
      child.cells[target + 1] = cell & ~bit(v);
      ++child.count;
      const int jump = search(child, depth + 1);
      explored.push_back(v);
      if (jump < depth) return jump;
    }
    return kNoJump;
  }

  auto leaf(const OrderedPartition& p, int depth) -> int {
    std::array<int, kMaxVertices> lab{}, perm{};
    for (int pos = 0; pos < n_; ++pos) {
      lab[pos] = std::countr_zero(p.cells[pos]);
      perm[lab[pos]] = pos;
    }
    std::array<Row, kMaxVertices> rows{};
    for (int pos = 0; pos < n_; ++pos) {
      Row r = 0;
      for_each_bit(g_.neighbors(lab[pos]), [&](int w) { r |= bit(63 - perm[w]); });
      rows[pos] = r;
    }
    const auto same = [&](const std::array<Row, kMaxVertices>& other) {
      return std::equal(rows.begin(), rows.begin() + n_, other.begin());
    };
    if (!have_first_) {
      have_first_ = true;
      first_rows_ = best_rows_ = rows;
      first_lab_ = best_lab_ = lab;
      first_path_ = path_;
      first_depth_ = depth;
      return kNoJump;
    }
    if (same(first_rows_)) {
      record_automorphism(first_lab_, perm);
      int common = 0;
      while (common < depth && common < first_depth_ && path_[common] == first_path_[common]) ++common;
      return common;
    }
    if (same(best_rows_)) {
      record_automorphism(best_lab_, perm);
      return kNoJump;
    }
    if (std::lexicographical_compare(rows.begin(), rows.begin() + n_, best_rows_.begin(), best_rows_.begin() + n_)) {
      best_rows_ = rows;
      best_lab_ = lab;
    }
    return kNoJump;
  }

  void record_automorphism(const std::array<int, kMaxVertices>& other_lab, const std::array<int, kMaxVertices>& perm) {
    if (generators_.size() >= kMaxGenerators) return;
    std::array<int, kMaxVertices> gen{};
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      gen[v] = other_lab[perm[v]];
      identity = identity && gen[v] == v;
    }
    if (!identity) generators_.push_back(gen);
  }

  const Graph& g_;
  int n_;
  bool have_first_ = false;
  int first_depth_ = 0;
  std::array<int, kMaxVertices> path_{}, first_path_{};
  std::array<int, kMaxVertices> first_lab_{}, best_lab_{};
  std::array<Row, kMaxVertices> first_rows_{}, best_rows_{};
  std::vector<std::array<int, kMaxVertices>> generators_;
};

}  // namespace detail

inline auto canonical_form(const Graph& g) -> CanonicalForm {
  auto form = detail::Canonizer(g).run();
#ifdef LINKIRR_VERIFY_CANONICAL
  {
    const Graph relabelled = g.relabel(form.perm);
    std::array<Row, kMaxVertices> rows{};
    for (int v = 0; v < g.order(); ++v)
      for_each_bit(relabelled.neighbors(v), [&](int w) { rows[v] |= bit(63 - w); });
    if (detail::pack_upper(g.order(), rows.data()) != form.code)
      throw std::logic_error("canonical permutation does not reproduce its code");
  }
#endif
  return form;
}

inline auto canonical_code(const Graph& g) -> CanonicalCode { return canonical_form(g).code; }

/// The canonically relabelled copy of g.
inline auto canonical_graph(const Graph& g) -> Graph { return g.relabel(canonical_form(g).perm); }

/// Graph whose canonical code is `code` (its canonical representative).
inline auto graph_from_code(const CanonicalCode& code) -> Graph { return detail::unpack_upper(code); }

namespace detail {

inline auto quick_reject(const Graph& g, const Graph& h) -> bool {
  if (g.order() != h.order() || g.size() != h.size()) return true;
  return degree_summary(g).multiset != degree_summary(h).multiset;
}

}  // namespace detail

/// An edge-preserving bijection g -> h (map[v] in h), if one exists.
inline auto find_isomorphism(const Graph& g, const Graph& h) -> std::optional<std::vector<int>> {
  if (detail::quick_reject(g, h)) return std::nullopt;
  const auto cg = canonical_form(g), ch = canonical_form(h);
  if (cg.code != ch.code) return std::nullopt;
  std::vector<int> inverse_h(h.order());
  for (int v = 0; v < h.order(); ++v) inverse_h[ch.perm[v]] = v;
  std::vector<int> map(g.order());
  for (int v = 0; v < g.order(); ++v) map[v] = inverse_h[cg.perm[v]];
  return map;
}

inline auto are_isomorphic(const Graph& g, const Graph& h) -> bool {
  if (detail::quick_reject(g, h)) return false;
  return canonical_code(g) == canonical_code(h);
}

/// True when map is a bijection V(g) -> V(h) preserving adjacency and non-adjacency.
inline auto is_isomorphism(const Graph& g, const Graph& h, std::span<const int> map) -> bool {
  if (g.order() != h.order() || static_cast<int>(map.size()) != g.order()) return false;
  Row image = 0;
  for (int v : map) {
    if (v < 0 || v >= h.order()) return false;
    image |= bit(v);
  }
  if (image != h.vertex_mask()) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != h.adjacent(map[u], map[v])) return false;
  return true;
}

inline constexpr int kBruteForceLimit = 8;

/// Ground truth by trying every permutation; limited to 8 vertices.
inline auto brute_force_isomorphic(const Graph& g, const Graph& h) -> bool {
  if (g.order() > kBruteForceLimit || h.order() > kBruteForceLimit)
    throw GraphError("brute-force isomorphism is limited to " + std::to_string(kBruteForceLimit) + " vertices");
  if (g.order() != h.order()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (is_isomorphism(g, h, perm)) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace linkirr

#endif  // LINKIRR_ISOMORPHISM_HPP_
