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

#ifndef LINKIRR_LINK_HPP_
#define LINKIRR_LINK_HPP_

/**
 * Vertex links and the link-irregularity decision.
 *
 * The link of v is the subgraph induced by N(v). A graph is link-irregular
 * when no two distinct vertices have isomorphic links. Negative verdicts carry
 * the smallest offending pair (u, v) and an explicit isomorphism L(u) -> L(v).
 */

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "graph.hpp"
#include "isomorphism.hpp"

namespace linkirr {

struct LinkProfile {
  Vertex owner = 0;
  Row members = 0;  // N(owner) in the host graph
  Graph link;       // vertices relabelled by ascending host index
  std::vector<int> degree_multiset;
  CanonicalForm canon;

  /// Host vertex behind link vertex i.
  auto host_vertex(int i) const -> Vertex {
    Row r = members;
    for (int k = 0; k < i; ++k) r &= r - 1;
    return std::countr_zero(r);
  }
};

inline auto link(const Graph& g, Vertex v) -> LinkProfile {
  if (v < 0 || v >= g.order()) throw GraphError("vertex " + std::to_string(v) + " out of range");
  LinkProfile p;
  p.owner = v;
  p.members = g.neighbors(v);
  p.link = induced_subgraph(g, p.members);
  p.degree_multiset = degree_summary(p.link).multiset;
  p.canon = canonical_form(p.link);
  return p;
}

using LinkDegreeTable = std::vector<std::pair<Vertex, std::vector<int>>>;

inline auto link_degree_table(const Graph& g) -> LinkDegreeTable {
  LinkDegreeTable table;
  for (int v = 0; v < g.order(); ++v)
    table.emplace_back(v, degree_summary(induced_subgraph(g, g.neighbors(v))).multiset);
  return table;
}

/// One "L(v): {a,b,...}" line per row.
inline auto format_link_degree_table(const LinkDegreeTable& table) -> std::string {
  std::ostringstream out;
  for (const auto& [v, degrees] : table) {
    out << "L(" << v << "): {";
    for (std::size_t i = 0; i < degrees.size(); ++i) out << (i ? "," : "") << degrees[i];
    out << "}\n";
  }
  return out.str();
}

struct LinkWitness {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<std::pair<Vertex, Vertex>> mapping;  // N(u) -> N(v), host labels, ascending by source
};

struct Verdict {
  bool irregular = false;
  std::optional<LinkWitness> witness;
  Graph subject;                         // graph the verdict was computed for
  std::vector<CanonicalCode> link_codes; // per vertex; filled for irregular verdicts
};

/// True when `w.mapping` is a bijection N(u) -> N(v) preserving adjacency both ways.
inline auto witness_is_valid(const Graph& g, const LinkWitness& w) -> bool {
  if (w.u == w.v || w.u < 0 || w.v < 0 || w.u >= g.order() || w.v >= g.order()) return false;
  Row from = 0, to = 0;
  for (const auto& [a, b] : w.mapping) {
    if (a < 0 || b < 0 || a >= g.order() || b >= g.order()) return false;
    if ((from & bit(a)) || (to & bit(b))) return false;
    from |= bit(a);
    to |= bit(b);
  }
  if (from != g.neighbors(w.u) || to != g.neighbors(w.v)) return false;
  for (const auto& [a1, b1] : w.mapping)
    for (const auto& [a2, b2] : w.mapping)
      if (a1 < a2 && g.adjacent(a1, a2) != g.adjacent(b1, b2)) return false;
  return true;
}

namespace detail {

inline auto make_witness(const Graph& g, Vertex u, Vertex v) -> LinkWitness {
  // Prefer the map fixing common neighbours when it already works.
  LinkWitness simple{u, v, {}};
  const Row common = g.neighbors(u) & g.neighbors(v);
  Row rest_v = g.neighbors(v) & ~common;
  for_each_bit(g.neighbors(u), [&](int a) {
    if (common & bit(a)) {
      simple.mapping.emplace_back(a, a);
    } else if (rest_v != 0) {
      simple.mapping.emplace_back(a, std::countr_zero(rest_v));
      rest_v &= rest_v - 1;
    }
  });
  if (witness_is_valid(g, simple)) return simple;
  const LinkProfile lu = link(g, u), lv = link(g, v);
  const auto map = find_isomorphism(lu.link, lv.link);
  if (!map) throw std::logic_error("links with equal codes are not isomorphic");
  LinkWitness w{u, v, {}};
  for (int i = 0; i < lu.link.order(); ++i) w.mapping.emplace_back(lu.host_vertex(i), lv.host_vertex((*map)[i]));
  return w;
}

}  // namespace detail

/// Decides link-irregularity. Links are bucketed by (order, size, degree
/// multiset) and only canonicalised inside buckets with two or more members.
inline auto is_link_irregular(const Graph& g) -> Verdict {
  const int n = g.order();
  using Key = std::tuple<int, int, std::vector<int>>;
  std::vector<Graph> links(n);
  std::map<Key, std::vector<Vertex>> buckets;
  for (int v = 0; v < n; ++v) {
    links[v] = induced_subgraph(g, g.neighbors(v));
    buckets[Key{links[v].order(), links[v].size(), degree_summary(links[v]).multiset}].push_back(v);
  }
  std::vector<std::optional<CanonicalCode>> codes(n);
  std::optional<std::pair<Vertex, Vertex>> first;
  for (const auto& [key, members] : buckets) {
    if (members.size() < 2) continue;
    for (Vertex v : members) codes[v] = canonical_code(links[v]);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        if (*codes[members[i]] == *codes[members[j]]) {
          const std::pair<Vertex, Vertex> pair{members[i], members[j]};
          if (!first || pair < *first) first = pair;
          break;
        }
  }
  Verdict verdict;
  verdict.subject = g;
  if (first) {
    verdict.witness = detail::make_witness(g, first->first, first->second);
    return verdict;
  }
  verdict.irregular = true;
  for (int v = 0; v < n; ++v) verdict.link_codes.push_back(codes[v] ? *codes[v] : canonical_code(links[v]));
  return verdict;
}

/// Human-readable justification of a verdict.
inline auto verdict_explain(const Graph& g, const Verdict& verdict) -> std::string {
  if (!(verdict.subject == g)) throw GraphError("stale verdict: it was computed for a different graph");
  std::ostringstream out;
  if (verdict.irregular) {
    out << "link-irregular: all " << g.order() << " links are pairwise non-isomorphic\n";
    for (std::size_t v = 0; v < verdict.link_codes.size(); ++v)
      out << "  L(" << v << ") code " << verdict.link_codes[v].hex() << '\n';
    return out.str();
  }
  if (!verdict.witness) throw GraphError("negative verdict without a witness");
  const auto& w = *verdict.witness;
  const Row common = g.neighbors(w.u) & g.neighbors(w.v);
  bool identity = true;
  for (const auto& [a, b] : w.mapping) identity = identity && (!(common & bit(a)) || a == b);
  out << "not link-irregular: L(" << w.u << ") ≅ L(" << w.v << ")";
  if (identity && !w.mapping.empty()) out << " via identity-on-common-neighbors map";
  out << '\n';
  for (const auto& [a, b] : w.mapping) out << "  " << a << " -> " << b << '\n';
  return out.str();
}

}  // namespace linkirr

#endif  // LINKIRR_LINK_HPP_
