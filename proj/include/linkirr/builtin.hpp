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


#ifndef LINKIRR_BUILTIN_HPP_
#define LINKIRR_BUILTIN_HPP_

// Named graphs and the input loader shared by the command-line tool.

#include <fstream>
#include <mutex>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "datasets.hpp"
#include "edge_list.hpp"
#include "enumeration.hpp"
#include "graph.hpp"
#include "graph6.hpp"

namespace linkirr {

inline const std::vector<std::string>& builtin_names() {
  static const std::vector<std::string> names = {"counterexample12", "planar16",  "planar18",
                                                 "planar18-corrected", "icosahedron", "unique6"};
  return names;
}

namespace detail {

inline auto unique6() -> Graph {
  static std::once_flag once;
  static Graph cached;
  std::call_once(once, [] {
    const auto result = search_link_irregular(GenSpec{.n = 6, .regularity = std::nullopt});
    if (result.hits.size() != 1)
      throw std::logic_error("expected exactly one link-irregular graph on 6 vertices, found " +
                             std::to_string(result.hits.size()));
    cached = result.hits.front();
  });
  return cached;
}

}  // namespace detail

/// planar18 is the list exactly as published (46 edges after collapsing
/// repeats); planar18-corrected drops the one extra edge.
inline auto builtin(std::string_view name) -> Graph {
  using namespace datasets;
  if (name == "counterexample12") return parse_edge_list(kCounterexample12, kCounterexample12Base);
  if (name == "planar16") return parse_edge_list(kPlanar16, kPlanar16Base);
  if (name == "planar18") return parse_edge_list(kPlanar18, kPlanar18Base);
  if (name == "planar18-corrected") {
    const Graph raw = parse_edge_list(kPlanar18, kPlanar18Base);
    const Edge extra{kPlanar18ExtraEdge.first - kPlanar18Base, kPlanar18ExtraEdge.second - kPlanar18Base};
    std::vector<Edge> edges;
    for (const Edge& e : raw.edges())
      if (e != extra) edges.push_back(e);
    return Graph::build(raw.order(), edges);
  }
  if (name == "icosahedron") return named::icosahedron();
  if (name == "unique6") return detail::unique6();
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw GraphError("unknown builtin '" + std::string(name) + "' (known: " + known + ")");
}

/// True when `text` holds a single graph6 token (optionally with the >>graph6<< prefix).
inline auto looks_like_graph6(std::string_view text) -> bool {
  std::istringstream in{std::string(text)};
  std::string token, extra;
  if (!(in >> token) || (in >> extra)) return false;
  if (token.starts_with(">>graph6<<")) return true;
  for (char c : token)
    if (c < 63 || c > 126) return false;
  return true;
}

/// Decodes graph text: graph6 when it is a single graph6 token, otherwise an edge list.
inline auto parse_graph_text(std::string_view text, int base = 0) -> Graph {
  if (looks_like_graph6(text)) {
    std::istringstream in{std::string(text)};
    std::string token;
    in >> token;
    return parse_graph6(token);
  }
  return parse_edge_list(text, base);
}

/// "builtin:NAME", "-" for standard input, or a file path.
inline auto load_graph(const std::string& source, int base = 0, std::istream* stdin_stream = nullptr) -> Graph {
  if (source.starts_with("builtin:")) return builtin(std::string_view(source).substr(8));
  std::ostringstream buffer;
  if (source == "-") {
    if (!stdin_stream) throw GraphError("no standard input available");
    buffer << stdin_stream->rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw GraphError("cannot read '" + source + "'");
    buffer << in.rdbuf();
  }
  return parse_graph_text(buffer.str(), base);
}

}  // namespace linkirr

#endif  // LINKIRR_BUILTIN_HPP_
