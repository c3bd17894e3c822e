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

#ifndef LINKIRR_TESTS_SUPPORT_HPP_
#define LINKIRR_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "linkirr/datasets.hpp"
#include "linkirr/edge_list.hpp"
#include "linkirr/graph.hpp"

namespace linkirr::testing {

inline auto random_graph(std::mt19937_64& rng, int n, double p) -> Graph {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

inline auto random_permutation(std::mt19937_64& rng, int n) -> std::vector<int> {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline auto counterexample12() -> Graph {
  return parse_edge_list(datasets::kCounterexample12, datasets::kCounterexample12Base);
}
inline auto planar16() -> Graph { return parse_edge_list(datasets::kPlanar16, datasets::kPlanar16Base); }
inline auto planar18() -> Graph { return parse_edge_list(datasets::kPlanar18, datasets::kPlanar18Base); }
inline auto planar18_corrected() -> Graph {
  const auto [a, b] = datasets::kPlanar18ExtraEdge;
  const Edge extra{a - datasets::kPlanar18Base, b - datasets::kPlanar18Base};
  std::vector<Edge> edges;
  for (const Edge& e : planar18().edges())
    if (e != extra) edges.push_back(e);
  return Graph::build(18, edges);
}

/// Every graph on n labelled vertices whose edge mask is `mask` (bits in row-major upper-triangle order).
inline auto labelled_graph(int n, std::uint64_t mask) -> Graph {
  std::vector<Edge> edges;
  int k = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v, ++k)
      if ((mask >> k) & 1U) edges.emplace_back(u, v);
  return Graph::build(n, edges);
}

}  // namespace linkirr::testing

#endif  // LINKIRR_TESTS_SUPPORT_HPP_
