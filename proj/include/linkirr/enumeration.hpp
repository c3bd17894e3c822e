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

#ifndef LINKIRR_ENUMERATION_HPP_
#define LINKIRR_ENUMERATION_HPP_

/**
 * Isomorph-free generation of graphs and of r-regular graphs, and the
 * exhaustive link-irregularity search over those catalogues.
 *
 * Graphs grow one vertex at a time. A child C of parent P (C = P plus a new
 * vertex) is accepted only when deleting the vertex with the largest
 * canonical label of C gives a graph isomorphic to P, so every class has a
 * unique parent class and the generation forms a tree. Duplicates can only
 * arise among siblings and are removed with a per-parent set.
 *
 * Regular generation prunes partial graphs that cannot be completed: degrees
 * never exceed r and the remaining deficits must be coverable by the vertices
 * still to be added. Degrees above half the order go through the complement.
 */

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"
#include "link.hpp"

namespace linkirr {

inline constexpr int kMaxEnumerationOrder = 9;
inline constexpr int kMaxRegularOrder = 12;

class LimitError : public GraphError {
 public:
  using GraphError::GraphError;
};

struct GenSpec {
  int n = 0;
  std::optional<int> regularity;
  bool connected_only = false;

  auto describe() const -> std::string {
    std::string s = "n=" + std::to_string(n);
    if (regularity) s += " r=" + std::to_string(*regularity);
    if (connected_only) s += " connected";
    return s;
  }
};

inline void validate(const GenSpec& spec) {
  if (spec.n < 0) throw GraphError("order must be non-negative");
  if (spec.regularity) {
    const int r = *spec.regularity;
    if (spec.n == 0) throw GraphError("regular generation needs at least one vertex");
    if (r < 0 || r > spec.n - 1)
      throw GraphError("degree " + std::to_string(r) + " outside [0, " + std::to_string(spec.n - 1) + "]");
    if ((spec.n * r) % 2 != 0)
      throw GraphError("no " + std::to_string(r) + "-regular graph on " + std::to_string(spec.n) +
                       " vertices: n*r is odd");
    if (spec.n > kMaxRegularOrder)
      throw LimitError("regular enumeration is limited to " + std::to_string(kMaxRegularOrder) + " vertices");
  } else if (spec.n > kMaxEnumerationOrder) {
    throw LimitError("full enumeration is limited to " + std::to_string(kMaxEnumerationOrder) + " vertices");
  }
}

/// Sorted canonical codes; graphs are decoded on access.
class Catalog {
 public:
  Catalog() = default;
  explicit Catalog(std::vector<CanonicalCode> codes) : codes_(std::move(codes)) {
    std::sort(codes_.begin(), codes_.end());
  }

  auto size() const -> std::size_t { return codes_.size(); }
  auto empty() const -> bool { return codes_.empty(); }
  auto codes() const -> const std::vector<CanonicalCode>& { return codes_; }
  auto operator[](std::size_t i) const -> Graph { return graph_from_code(codes_[i]); }

  class iterator {
   public:
    using value_type = Graph;
    using difference_type = std::ptrdiff_t;
    iterator() = default;
    iterator(const Catalog* c, std::size_t i) : c_(c), i_(i) {}
    auto operator*() const -> Graph { return (*c_)[i_]; }
    auto operator++() -> iterator& { ++i_; return *this; }
    auto operator++(int) -> iterator { auto t = *this; ++i_; return t; }
    auto operator==(const iterator& o) const -> bool { return i_ == o.i_; }
   private:
    const Catalog* c_ = nullptr;
    std::size_t i_ = 0;
  };
  auto begin() const -> iterator { return {this, 0}; }
  auto end() const -> iterator { return {this, codes_.size()}; }

 private:
  std::vector<CanonicalCode> codes_;
};

struct GenerationStats {
  long long nodes = 0;       // accepted tree nodes, leaves included
  long long candidates = 0;  // children examined
  int roots = 0;             // parallel work units
  int roots_skipped = 0;     // restored from a checkpoint
  double seconds = 0.0;
};

namespace detail {

/// Canonical-deletion tree over graphs of order `n`, optionally r-regular.
class GenerationTree {
 public:
  GenerationTree(int n, std::optional<int> r) : n_(n), r_(r) {}

  struct Node {
    Graph graph;
    CanonicalCode code;
  };

  auto order() const -> int { return n_; }

  /// Level at which the tree is cut into independent work units.
  auto split_level() const -> int { return std::max(0, std::min(n_, n_ - 4)); }

  auto roots() const -> std::vector<Node> {
    std::vector<Node> level{{Graph(0), canonical_code(Graph(0))}};
    GenerationStats scratch;
    for (int k = 0; k < split_level(); ++k) {
      std::vector<Node> next;
      for (const auto& node : level) children(node, scratch, [&](Node child) { next.push_back(std::move(child)); });
      level = std::move(next);
    }
    std::sort(level.begin(), level.end(), [](const Node& a, const Node& b) { return a.code < b.code; });
    return level;
  }

  /// Depth-first walk below `root`, calling leaf(node) for every complete graph.
  template <typename Leaf>
  void walk(const Node& root, GenerationStats& stats, Leaf&& leaf) const {
    ++stats.nodes;
    if (root.graph.order() == n_) {
      leaf(root);
      return;
    }
    children(root, stats, [&](Node child) { walk(child, stats, leaf); });
  }

  /// Whether a partial graph on k vertices can still grow into an r-regular graph on n.
  auto feasible(const Graph& g) const -> bool {
    if (!r_) return true;
    const int r = *r_, k = g.order(), m = n_ - k;
    long deficit = 0;
    int open = 0;
    for (int v = 0; v < k; ++v) {
      const int d = g.degree(v);
      if (d > r || r - d > m) return false;
      deficit += r - d;
      open += d < r;
    }
    if (m == 0) return deficit == 0;
    const long internal = static_cast<long>(m) * r - deficit;
    if (internal < 0 || internal % 2 != 0 || internal > static_cast<long>(m) * (m - 1)) return false;
    const int lowest_cross = std::max(0, r - (m - 1));
    if (open < lowest_cross) return false;
    if (deficit > static_cast<long>(m) * std::min(r, open)) return false;
    return deficit >= static_cast<long>(m) * lowest_cross;
  }

 private:
  template <typename Emit>
  void children(const Node& parent, GenerationStats& stats, Emit&& emit) const {
    const Graph& g = parent.graph;
    const int k = g.order();
    std::vector<int> open;
    int lo = 0, hi = k;
    if (r_) {
      for (int v = 0; v < k; ++v)
        if (g.degree(v) < *r_) open.push_back(v);
      lo = std::max(0, *r_ - (n_ - k - 1));
      hi = std::min<int>(*r_, static_cast<int>(open.size()));
    } else {
      for (int v = 0; v < k; ++v) open.push_back(v);
    }
    const int q = static_cast<int>(open.size());
    std::unordered_set<CanonicalCode, CanonicalCodeHash> seen;
    for (int size = lo; size <= hi; ++size) {
      // Gosper's hack over q-bit selections of `size` elements.
      std::uint64_t pick = size == 0 ? 0 : low_mask(size);
      const std::uint64_t limit = q >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << q);
      while (true) {
        Row nbrs = 0;
        for_each_bit(pick, [&](int i) { nbrs |= bit(open[i]); });
        ++stats.candidates;
        consider(parent, g.with_vertex(nbrs), size, seen, emit);
        if (size == 0) break;
        const std::uint64_t c = pick & -pick, next = pick + c;
        pick = (((next ^ pick) >> 2) / c) | next;
        if (pick >= limit || pick == 0) break;
      }
    }
  }

  template <typename Emit>
  void consider(const Node& parent, Graph child, int new_degree,
                std::unordered_set<CanonicalCode, CanonicalCodeHash>& seen, Emit&& emit) const {
    if (!feasible(child)) return;
    const int k = child.order() - 1;  // index of the new vertex
    auto form = canonical_form(child);
    int last = 0;
    while (form.perm[last] != k) ++last;  // vertex holding the largest canonical label
    if (last != k) {
      if (child.degree(last) != new_degree) return;
      if (canonical_code(induced_subgraph(child, child.vertex_mask() & ~bit(last))) != parent.code) return;
    }
    if (!seen.insert(form.code).second) return;
    emit(Node{std::move(child), std::move(form.code)});
  }

  int n_;
  std::optional<int> r_;
};

enum class LeafOutcome { kFiltered, kMiss, kHit };

/// Runs the tree over all roots with `workers` threads. `on_leaf` is called
/// concurrently; `skip_root`/`root_done` support checkpointing. Filtered
/// leaves are not counted as examined.
template <typename OnLeaf>
auto run_tree(const GenerationTree& tree, int workers, OnLeaf&& on_leaf,
              const std::function<bool(const CanonicalCode&)>& skip_root = {},
              const std::function<void(const CanonicalCode&, long long, std::vector<CanonicalCode>)>& root_done = {})
    -> GenerationStats {
  const auto start = std::chrono::steady_clock::now();
  const auto roots = tree.roots();
  GenerationStats total;
  total.roots = static_cast<int>(roots.size());
  std::atomic<std::size_t> next{0};
  std::mutex merge;
  workers = std::max(1, workers);
  auto work = [&] {
    GenerationStats local;
    int skipped = 0;
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      if (skip_root && skip_root(roots[i].code)) {
        ++skipped;
        continue;
      }
      long long examined = 0;
      std::vector<CanonicalCode> hits;
      tree.walk(roots[i], local, [&](const GenerationTree::Node& leaf) {
        const LeafOutcome outcome = on_leaf(leaf);
        if (outcome == LeafOutcome::kFiltered) return;
        ++examined;
        if (outcome == LeafOutcome::kHit) hits.push_back(leaf.code);
      });
      if (root_done) {
        std::lock_guard lock(merge);
        root_done(roots[i].code, examined, std::move(hits));
      }
    }
    std::lock_guard lock(merge);
    total.nodes += local.nodes;
    total.candidates += local.candidates;
    total.roots_skipped += skipped;
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  total.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return total;
}

inline auto collect(const GenerationTree& tree, int workers, GenerationStats* stats = nullptr)
    -> std::vector<CanonicalCode> {
  std::vector<CanonicalCode> out;
  std::mutex m;
  auto s = run_tree(tree, workers, [&](const GenerationTree::Node& leaf) {
    std::lock_guard lock(m);
    out.push_back(leaf.code);
    return LeafOutcome::kMiss;
  });
  if (stats) *stats = s;
  return out;
}

inline auto complement_codes(const std::vector<CanonicalCode>& codes) -> std::vector<CanonicalCode> {
  std::vector<CanonicalCode> out;
  out.reserve(codes.size());
  for (const auto& c : codes) out.push_back(canonical_code(complement(graph_from_code(c))));
  return out;
}

inline auto default_workers() -> int { return static_cast<int>(std::max(1U, std::thread::hardware_concurrency())); }

}  // namespace detail

/// Every graph of order n, one per isomorphism class, ascending canonical code.
inline auto enumerate_graphs(int n, int workers = detail::default_workers()) -> Catalog {
  validate(GenSpec{n, std::nullopt, false});
  return Catalog(detail::collect(detail::GenerationTree(n, std::nullopt), workers));
}

/// r-regular graphs of order n by degree-constrained augmentation, without the complement shortcut.
inline auto enumerate_regular_direct(int n, int r, int workers = detail::default_workers()) -> Catalog {
  validate(GenSpec{n, r, false});
  return Catalog(detail::collect(detail::GenerationTree(n, r), workers));
}

/// r-regular graphs of order n; degrees above (n-1)/2 are generated as complements.
inline auto enumerate_regular(int n, int r, int workers = detail::default_workers()) -> Catalog {
  validate(GenSpec{n, r, false});
  const int dual = n - 1 - r;
  if (dual < r) return Catalog(detail::complement_codes(enumerate_regular_direct(n, dual, workers).codes()));
  return enumerate_regular_direct(n, r, workers);
}

inline auto enumerate(const GenSpec& spec, int workers = detail::default_workers()) -> Catalog {
  Catalog all = spec.regularity ? enumerate_regular(spec.n, *spec.regularity, workers) : enumerate_graphs(spec.n, workers);
  if (!spec.connected_only) return all;
  std::vector<CanonicalCode> kept;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (is_connected(all[i])) kept.push_back(all.codes()[i]);
  return Catalog(std::move(kept));
}

struct SearchResult {
  GenSpec spec;
  long long examined = 0;
  std::vector<Graph> hits;  // canonical representatives, ascending code
  GenerationStats wall_stats;
  bool via_complement = false;
};

struct SearchOptions {
  int workers = detail::default_workers();
  std::string checkpoint;  // empty: no checkpointing
  bool force_direct = false;
};

namespace detail {

/// Line-oriented resume file. One "root" line per finished work unit:
///   root <root-code> <examined> [<hit-code> ...]
class Checkpoint {
 public:
  Checkpoint(std::string path, std::string header) : path_(std::move(path)), header_(std::move(header)) {
    if (path_.empty()) return;
    std::ifstream in(path_);
    if (in) {
      std::string line;
      if (std::getline(in, line) && line != header_)
        throw GraphError("checkpoint '" + path_ + "' belongs to a different run: " + line);
      while (std::getline(in, line)) {
        std::istringstream fields(line);
        std::string tag, root;
        long long examined = 0;
        if (!(fields >> tag >> root >> examined) || tag != "root") continue;  // torn final line
        done_.insert(CanonicalCode::from_hex(root));
        examined_ += examined;
        for (std::string hit; fields >> hit;) hits_.push_back(CanonicalCode::from_hex(hit));
      }
    } else {
      std::ofstream(path_) << header_ << '\n';
    }
    out_.open(path_, std::ios::app);
    // A run killed mid-write leaves an unterminated line; start on a fresh one.
    std::ifstream tail(path_, std::ios::binary | std::ios::ate);
    if (tail && tail.tellg() > 0) {
      tail.seekg(-1, std::ios::end);
      if (tail.get() != '\n') out_ << '\n';
    }
  }

  auto enabled() const -> bool { return !path_.empty(); }
  auto done(const CanonicalCode& root) const -> bool { return done_.count(root) != 0; }
  auto restored_examined() const -> long long { return examined_; }
  auto restored_hits() const -> const std::vector<CanonicalCode>& { return hits_; }

  void record(const CanonicalCode& root, long long examined, const std::vector<CanonicalCode>& hits) {
    if (!enabled()) return;
    out_ << "root " << root.hex() << ' ' << examined;
    for (const auto& h : hits) out_ << ' ' << h.hex();
    out_ << '\n' << std::flush;
  }

 private:
  std::string path_, header_;
  std::unordered_set<CanonicalCode, CanonicalCodeHash> done_;
  long long examined_ = 0;
  std::vector<CanonicalCode> hits_;
  std::ofstream out_;
};

inline auto run_search(const GenSpec& spec, std::optional<int> tree_degree, bool complement_leaves,
                       const SearchOptions& options) -> SearchResult {
  GenerationTree tree(spec.n, tree_degree);
  const std::string header =
      "linkirr-checkpoint 1 " + spec.describe() + (complement_leaves ? " via-complement" : "");
  Checkpoint checkpoint(options.checkpoint, header);

  std::mutex m;
  long long examined = checkpoint.restored_examined();
  std::vector<CanonicalCode> hit_codes = checkpoint.restored_hits();
  auto on_leaf = [&](const GenerationTree::Node& leaf) {
    const Graph g = complement_leaves ? complement(leaf.graph) : leaf.graph;
    if (spec.connected_only && !is_connected(g)) return LeafOutcome::kFiltered;
    return is_link_irregular(g).irregular ? LeafOutcome::kHit : LeafOutcome::kMiss;
  };
  auto root_done = [&](const CanonicalCode& root, long long count, std::vector<CanonicalCode> hits) {
    for (auto& h : hits)
      if (complement_leaves) h = canonical_code(complement(graph_from_code(h)));
    checkpoint.record(root, count, hits);
    std::lock_guard lock(m);
    examined += count;
    hit_codes.insert(hit_codes.end(), hits.begin(), hits.end());
  };
  const auto stats = run_tree(
      tree, options.workers, on_leaf, [&](const CanonicalCode& root) { return checkpoint.done(root); }, root_done);

  SearchResult result;
  result.spec = spec;
  result.via_complement = complement_leaves;
  result.wall_stats = stats;
  result.examined = examined;
  std::sort(hit_codes.begin(), hit_codes.end());
  for (const auto& c : hit_codes) result.hits.push_back(graph_from_code(c));
  return result;
}

}  // namespace detail

/// Exhaustive link-irregularity search over the catalogue described by `spec`.
inline auto search_link_irregular(const GenSpec& spec, const SearchOptions& options = {}) -> SearchResult {
  validate(spec);
  if (!spec.regularity) return detail::run_search(spec, std::nullopt, false, options);
  const int r = *spec.regularity, dual = spec.n - 1 - r;
  if (dual < r && !options.force_direct) return detail::run_search(spec, dual, true, options);
  return detail::run_search(spec, r, false, options);
}

/// Searches r-regular graphs by enumerating their (n-1-r)-regular complements.
inline auto regular_search_via_complement(int n, int r, const SearchOptions& options = {}) -> SearchResult {
  const GenSpec spec{n, r, false};
  validate(spec);
  if (!(n - 1 - r < r))
    throw GraphError("complement route needs n-1-r < r; enumerate " + std::to_string(r) + "-regular graphs directly");
  return detail::run_search(spec, n - 1 - r, true, options);
}

}  // namespace linkirr

#endif  // LINKIRR_ENUMERATION_HPP_
