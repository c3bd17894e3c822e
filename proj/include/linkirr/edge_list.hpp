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

#ifndef LINKIRR_EDGE_LIST_HPP_
#define LINKIRR_EDGE_LIST_HPP_

// Plain-text edge lists: integers taken two at a time. Whitespace, commas,
// semicolons and bracket characters are separators; '#' starts a comment.
// An optional "order N" line fixes the vertex count.

#include <cctype>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "graph.hpp"

namespace linkirr {

struct EdgeListDoc {
  int base = 0;
  std::vector<std::pair<long long, long long>> pairs;  // as written, before rebasing
  std::optional<int> n_hint;
};

inline auto read_edge_list(std::string_view text, int base) -> EdgeListDoc {
  if (base != 0 && base != 1) throw GraphError("edge-list base must be 0 or 1");
  EdgeListDoc doc;
  doc.base = base;
  std::vector<long long> numbers;
  std::istringstream lines{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(lines, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (std::string_view("(){}[],;").find(ch) != std::string_view::npos) ch = ' ';
    std::istringstream tokens(line);
    std::string token;
    bool first = true;
    while (tokens >> token) {
      if (first && token == "order") {
        int n = -1;
        if (!(tokens >> n) || n < 0 || n > kMaxVertices)
          throw GraphError("line " + std::to_string(line_no) + ": bad order directive");
        doc.n_hint = n;
        break;
      }
      first = false;
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size())
        throw GraphError("line " + std::to_string(line_no) + ": '" + token + "' is not an integer");
      numbers.push_back(value);
    }
  }
  if (numbers.size() % 2 != 0) throw GraphError("edge list has an odd number of endpoints");
  for (std::size_t i = 0; i < numbers.size(); i += 2) doc.pairs.emplace_back(numbers[i], numbers[i + 1]);
  return doc;
}

inline auto build(const EdgeListDoc& doc) -> Graph {
  std::vector<Edge> edges;
  long long top = -1;
  for (const auto& [u, v] : doc.pairs) {
    for (long long x : {u, v}) {
      if (x < 0) throw GraphError("negative vertex index " + std::to_string(x));
      if (x < doc.base)
        throw GraphError("vertex index " + std::to_string(x) + " below base " + std::to_string(doc.base));
      if (x - doc.base >= kMaxVertices) throw GraphError("vertex index " + std::to_string(x) + " above the vertex cap");
      top = std::max(top, x - doc.base);
    }
    edges.emplace_back(static_cast<int>(u - doc.base), static_cast<int>(v - doc.base));
  }
  const int n = doc.n_hint ? *doc.n_hint : static_cast<int>(top + 1);
  return Graph::build(n, edges);
}

inline auto parse_edge_list(std::string_view text, int base) -> Graph { return build(read_edge_list(text, base)); }

inline auto write_edge_list(const Graph& g) -> std::string {
  std::ostringstream out;
  out << "order " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace linkirr

#endif  // LINKIRR_EDGE_LIST_HPP_
