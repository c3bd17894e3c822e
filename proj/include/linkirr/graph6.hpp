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


#ifndef LINKIRR_GRAPH6_HPP_
#define LINKIRR_GRAPH6_HPP_

// graph6 (McKay): order header N(n), then the upper triangle in column order
// x(0,1) x(0,2) x(1,2) x(0,3) ... packed six bits per byte, offset by 63.

#include <string>
#include <string_view>

#include "graph.hpp"

namespace linkirr {

class Graph6Error : public GraphError {
 public:
  enum class Kind { kMalformedHeader, kInvalidCharacter, kLengthMismatch, kNonzeroPadding, kTooLarge };

  Graph6Error(Kind kind, const std::string& what) : GraphError("graph6: " + what), kind_(kind) {}
  auto kind() const -> Kind { return kind_; }

 private:
  Kind kind_;
};

namespace detail {

inline auto graph6_bits(int n) -> long long { return static_cast<long long>(n) * (n - 1) / 2; }

}  // namespace detail

inline auto parse_graph6(std::string_view line) -> Graph {
  using K = Graph6Error::Kind;
  constexpr std::string_view kPrefix = ">>graph6<<";
  if (line.starts_with(kPrefix)) line.remove_prefix(kPrefix.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  for (char c : line)
    if (c < 63 || c > 126) throw Graph6Error(K::kInvalidCharacter, "byte " + std::to_string(static_cast<int>(c)) + " outside 63..126");
  if (line.empty()) throw Graph6Error(K::kMalformedHeader, "empty input");

  long long n = 0;
  std::size_t pos = 0;
  const auto take = [&](int count) {
    if (line.size() < pos + count) throw Graph6Error(K::kMalformedHeader, "truncated order header");
    long long v = 0;
    for (int i = 0; i < count; ++i) v = (v << 6) | (line[pos++] - 63);
    return v;
  };
  if (line[0] != 126) {
    n = take(1);
  } else if (line.size() > 1 && line[1] == 126) {
    pos = 2;
    n = take(6);
  } else {
    pos = 1;
    n = take(3);
  }
  if (n > kMaxVertices) throw Graph6Error(K::kTooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));

  const long long bits = detail::graph6_bits(static_cast<int>(n));
  const std::size_t bytes = static_cast<std::size_t>((bits + 5) / 6);
  if (line.size() - pos != bytes)
    throw Graph6Error(K::kLengthMismatch, "expected " + std::to_string(bytes) + " data bytes for order " + std::to_string(n) +
                                              ", found " + std::to_string(line.size() - pos));
  Graph g(static_cast<int>(n));
  std::vector<Edge> edges;
  long long k = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = line[pos + k / 6] - 63;
      if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const int last = line.back() - 63;
    if (last & ((1 << (6 - bits % 6)) - 1)) throw Graph6Error(K::kNonzeroPadding, "padding bits are not zero");
  }
  return Graph::build(static_cast<int>(n), edges);
}

/// Shortest header, zero padding, no trailing newline.
inline auto write_graph6(const Graph& g) -> std::string {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out += static_cast<char>(63 + n);
  } else {
    out += '~';
    for (int shift = 12; shift >= 0; shift -= 6) out += static_cast<char>(63 + ((n >> shift) & 63));
  }
  int acc = 0, used = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out += static_cast<char>(63 + acc);
        acc = used = 0;
      }
    }
  if (used) out += static_cast<char>(63 + (acc << (6 - used)));
  return out;
}

}  // namespace linkirr

#endif  // LINKIRR_GRAPH6_HPP_
