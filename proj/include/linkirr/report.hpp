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


#ifndef LINKIRR_REPORT_HPP_
#define LINKIRR_REPORT_HPP_

/**
 * Reports: a subject plus ordered sections of key/value facts. The text and
 * structured (JSON) renderings walk the same data, so they always carry the
 * same facts; every ordering is fixed, so identical input gives identical
 * bytes.
 */

#include <nlohmann/json.hpp>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "bounds.hpp"
#include "enumeration.hpp"
#include "graph6.hpp"
#include "link.hpp"
#include "planarity.hpp"

namespace linkirr {

using Json = nlohmann::ordered_json;

enum class Format { kText, kStructured };

struct Report {
  std::string kind;  // subcommand that produced it
  Json subject = Json::object();
  std::vector<std::pair<std::string, Json>> sections;

  auto section(const std::string& name) -> Json& {
    sections.emplace_back(name, Json::object());
    return sections.back().second;
  }
};

namespace detail {

inline auto big_json(const BigInt& v) -> Json {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline auto scalar_text(const Json& v) -> std::string { return v.is_string() ? v.get<std::string>() : v.dump(); }

inline void render_value(std::ostringstream& out, const std::string& key, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    out << pad << key << ":\n";
    for (const auto& [k, child] : v.items()) render_value(out, k, child, indent + 2);
  } else if (v.is_array() && !v.empty() && (v.front().is_string() || v.front().is_object())) {
    out << pad << key << ":\n";
    for (const auto& item : v) {
      if (item.is_object()) {
        out << pad << "  -\n";
        for (const auto& [k, child] : item.items()) render_value(out, k, child, indent + 4);
      } else {
        out << pad << "  - " << scalar_text(item) << '\n';
      }
    }
  } else {
    out << pad << key << ": " << scalar_text(v) << '\n';
  }
}

}  // namespace detail

inline auto render_text(const Report& r) -> std::string {
  std::ostringstream out;
  out << r.kind << '\n';
  for (const auto& [k, v] : r.subject.items()) detail::render_value(out, k, v, 2);
  for (const auto& [name, body] : r.sections) {
    out << '[' << name << "]\n";
    for (const auto& [k, v] : body.items()) detail::render_value(out, k, v, 2);
  }
  return out.str();
}

inline auto render_structured(const Report& r) -> std::string {
  Json doc = Json::object();
  doc["kind"] = r.kind;
  doc["subject"] = r.subject;
  Json findings = Json::array();
  for (const auto& [name, body] : r.sections) {
    Json entry = Json::object();
    entry["section"] = name;
    for (const auto& [k, v] : body.items()) entry[k] = v;
    findings.push_back(std::move(entry));
  }
  doc["findings"] = std::move(findings);
  return doc.dump(2) + "\n";
}

inline auto render(const Report& r, Format f) -> std::string {
  return f == Format::kText ? render_text(r) : render_structured(r);
}

inline auto subject_json(const std::string& source, const Graph& g) -> Json {
  Json s = Json::object();
  s["source"] = source;
  s["order"] = g.order();
  s["size"] = g.size();
  s["canonical_code"] = canonical_code(g).hex();
  s["graph6"] = write_graph6(g);
  return s;
}

inline auto mapping_json(const LinkWitness& w) -> Json {
  Json m = Json::array();
  for (const auto& [a, b] : w.mapping) m.push_back(std::to_string(a) + " -> " + std::to_string(b));
  return m;
}

inline void add_verdict(Report& r, const Graph& g, const Verdict& verdict) {
  Json& s = r.section("verdict");
  s["link_irregular"] = verdict.irregular;
  if (verdict.irregular) {
    Json codes = Json::array();
    for (std::size_t v = 0; v < verdict.link_codes.size(); ++v)
      codes.push_back("L(" + std::to_string(v) + ") " + verdict.link_codes[v].hex());
    s["distinct_link_codes"] = static_cast<int>(verdict.link_codes.size());
    s["link_codes"] = std::move(codes);
  } else {
    const auto& w = *verdict.witness;
    s["witness"] = {w.u, w.v};
    s["witness_valid"] = witness_is_valid(g, w);
    s["mapping"] = mapping_json(w);
  }
}

inline void add_planarity(Report& r, const Graph& g, const PlanarityResult& p, bool full_certificate) {
  Json& s = r.section("planarity");
  s["planar"] = p.planar;
  if (g.order() >= 3) {
    s["edge_bound_3n_minus_6"] = planar_edge_bound_check(g);
    s["triangulation"] = p.planar && is_triangulation(g);
  }
  if (p.embedding) {
    s["certificate"] = "rotation system";
    s["certificate_valid"] = embedding_is_valid(g, *p.embedding);
    s["faces"] = static_cast<int>(trace_faces(g, *p.embedding).size());
    if (full_certificate) {
      Json rot = Json::array();
      for (int v = 0; v < g.order(); ++v) {
        std::string line = std::to_string(v) + ":";
        for (int w : (*p.embedding)[v]) line += " " + std::to_string(w);
        rot.push_back(line);
      }
      s["rotation"] = std::move(rot);
    }
  } else {
    const auto& o = *p.obstruction;
    s["certificate"] = o.kind == KuratowskiWitness::Kind::kK5 ? "K5 subdivision" : "K3,3 subdivision";
    s["certificate_valid"] = obstruction_is_valid(g, o);
    s["branch_vertices"] = o.branch;
    if (full_certificate) {
      Json paths = Json::array();
      for (const auto& path : o.paths) {
        std::string line;
        for (std::size_t i = 0; i < path.size(); ++i) line += (i ? " - " : "") + std::to_string(path[i]);
        paths.push_back(line);
      }
      s["paths"] = std::move(paths);
    }
  }
}

inline auto check_report(const std::string& source, const Graph& g) -> Report {
  Report r{"check", subject_json(source, g), {}};
  const auto summary = degree_summary(g);
  Json& deg = r.section("degrees");
  const auto reg = regularity(g);
  deg["regular"] = reg.has_value();
  if (reg) deg["degree"] = *reg;
  deg["degree_multiset"] = summary.multiset;
  deg["distinct_degrees"] = summary.distinct;
  deg["connected"] = is_connected(g);

  Json& gi = r.section("girth");
  const int gv = girth(g);
  gi["girth"] = gv == kInfiniteGirth ? Json("infinite") : Json(gv);

  Json& bp = r.section("bipartite");
  const auto b = is_bipartite(g);
  bp["bipartite"] = b.bipartite;
  if (!b.bipartite) bp["odd_cycle"] = b.odd_cycle;

  Json& lt = r.section("link_degrees");
  Json rows = Json::array();
  std::istringstream table(format_link_degree_table(link_degree_table(g)));
  for (std::string line; std::getline(table, line);) rows.push_back(line);
  lt["table"] = std::move(rows);

  add_verdict(r, g, is_link_irregular(g));
  add_planarity(r, g, is_planar(g), false);

  if (g.order() >= 6) {
    const auto eb = edge_bounds(g.order());
    Json& bo = r.section("edge_bounds");
    bo["lower_2n_minus_5"] = detail::big_json(eb.edge_lower);
    bo["upper"] = detail::big_json(eb.edge_upper);
    bo["asymptotic_lower"] = detail::big_json(eb.asym_lower);
    bo["edges_within_bounds"] = eb.edge_lower <= g.size() && g.size() <= eb.edge_upper && eb.asym_lower <= g.size();
  }
  return r;
}

inline auto planar_report(const std::string& source, const Graph& g) -> Report {
  Report r{"planar", subject_json(source, g), {}};
  add_planarity(r, g, is_planar(g), true);
  return r;
}

inline auto links_report(const std::string& source, const Graph& g, std::optional<int> vertex) -> Report {
  Report r{"links", subject_json(source, g), {}};
  if (vertex) {
    const auto p = link(g, *vertex);
    Json& s = r.section("link");
    s["owner"] = *vertex;
    std::vector<int> members;
    for_each_bit(p.members, [&](int v) { members.push_back(v); });
    s["members"] = members;
    s["degree_multiset"] = p.degree_multiset;
    s["graph6"] = write_graph6(p.link);
    s["canonical_code"] = p.canon.code.hex();
  } else {
    Json rows = Json::array();
    std::istringstream table(format_link_degree_table(link_degree_table(g)));
    for (std::string line; std::getline(table, line);) rows.push_back(line);
    r.section("link_degrees")["table"] = std::move(rows);
  }
  return r;
}

inline auto search_report(const std::vector<SearchResult>& results) -> Report {
  Report r{"search", Json::object(), {}};
  long long examined = 0, hits = 0;
  for (const auto& res : results) {
    examined += res.examined;
    hits += static_cast<long long>(res.hits.size());
    Json& s = r.section("search " + res.spec.describe());
    s["examined"] = res.examined;
    s["hits"] = static_cast<long long>(res.hits.size());
    s["summary"] = std::to_string(res.hits.size()) + (res.hits.size() == 1 ? " hit / " : " hits / ") +
                   std::to_string(res.examined) + " examined";
    s["route"] = res.via_complement ? "complement" : "direct";
    s["roots"] = res.wall_stats.roots;
    s["roots_restored"] = res.wall_stats.roots_skipped;
    Json list = Json::array();
    for (const Graph& g : res.hits) list.push_back(write_graph6(g));
    s["hit_graph6"] = std::move(list);
  }
  r.subject["runs"] = static_cast<int>(results.size());
  r.subject["examined"] = examined;
  r.subject["hits"] = hits;
  return r;
}

inline auto bounds_report(long long n, std::optional<int> r_degree) -> Report {
  Report r{"bounds", Json::object(), {}};
  r.subject["n"] = n;
  const auto eb = edge_bounds(n);
  Json& s = r.section("edge_bounds");
  s["lower_2n_minus_5"] = detail::big_json(eb.edge_lower);
  s["upper"] = detail::big_json(eb.edge_upper);
  s["asymptotic_lower"] = detail::big_json(eb.asym_lower);
  s["planar_possible"] = eb.planar_possible;
  s["notes"] = eb.notes;
  if (n > 208) {
    Json& f = r.section("link_distinctness");
    f["edge_floor"] = detail::big_json(link_distinctness_edge_floor(n));
    f["planar_edge_cap"] = 3 * n - 6;
  }
  if (r_degree) {
    const int deg = *r_degree;
    const Rational lower = g_lower_bound(deg);
    Json& g = r.section("link_types");
    g["r"] = deg;
    g["g_lower_bound"] = lower.str();
    std::optional<BigInt> exact;
    if (deg <= kMaxEnumerationOrder) {
      exact = g_exact(deg);
      g["g_exact"] = detail::big_json(*exact);
    }
    const BigInt count = exact ? *exact : detail::ceil_div(numerator(lower), denominator(lower));
    const auto m = moment_estimates(n, count);
    Json& me = r.section("moment_estimates");
    me["g_used"] = detail::big_json(count);
    me["g_source"] = exact ? "exact" : "lower bound (rounded up)";
    me["expected_unique"] = m.expected_unique;
    me["variance_ratio"] = m.variance_ratio;
    me["note"] = "heuristic; links are assigned independently and need not come from a graph";
  }
  return r;
}

}  // namespace linkirr

#endif  // LINKIRR_REPORT_HPP_
