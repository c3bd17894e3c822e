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


#include "linkirr/planarity.hpp"

#include <gtest/gtest.h>

#include <unordered_map>

#include "linkirr/enumeration.hpp"
#include "linkirr/link.hpp"
#include "support.hpp"

namespace linkirr {
namespace {

void ExpectCertified(const Graph& g, const PlanarityResult& r) {
  ASSERT_NE(r.embedding.has_value(), r.obstruction.has_value());
  EXPECT_EQ(r.planar, r.embedding.has_value());
  if (r.embedding) {
    EXPECT_TRUE(embedding_is_valid(g, *r.embedding));
  }
  if (r.obstruction) {
    EXPECT_TRUE(obstruction_is_valid(g, *r.obstruction));
  }
}

TEST(IsPlanar, Kuratowski) {
  const auto k5 = is_planar(named::complete(5));
  EXPECT_FALSE(k5.planar);
  ASSERT_TRUE(k5.obstruction);
  EXPECT_EQ(k5.obstruction->kind, KuratowskiWitness::Kind::kK5);
  EXPECT_EQ(k5.obstruction->branch.size(), 5U);
  ExpectCertified(named::complete(5), k5);

  const auto k33 = is_planar(named::complete_bipartite(3, 3));
  EXPECT_FALSE(k33.planar);
  ASSERT_TRUE(k33.obstruction);
  EXPECT_EQ(k33.obstruction->kind, KuratowskiWitness::Kind::kK33);
  ExpectCertified(named::complete_bipartite(3, 3), k33);
}

TEST(IsPlanar, Subdivisions) {
  // K5 with every edge subdivided once: 15 vertices, still non-planar.
  std::vector<Edge> edges;
  int next = 5;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) {
      edges.emplace_back(u, next);
      edges.emplace_back(next++, v);
    }
  const Graph g = Graph::build(15, edges);
  const auto r = is_planar(g);
  EXPECT_FALSE(r.planar);
  ExpectCertified(g, r);
  EXPECT_EQ(r.obstruction->kind, KuratowskiWitness::Kind::kK5);
}

TEST(IsPlanar, PublishedAndNamedGraphs) {
  for (const Graph& g : {named::icosahedron(), testing::planar16(), testing::planar18(), testing::planar18_corrected(),
                         named::cycle(4), named::complete(4), named::hypercube(3), Graph(0), Graph(1), Graph(7)}) {
    const auto r = is_planar(g);
    EXPECT_TRUE(r.planar) << g.order();
    ExpectCertified(g, r);
  }
  for (const Graph& g : {testing::counterexample12(), named::complete(64), named::hypercube(6), named::complete_bipartite(3, 5)}) {
    const auto r = is_planar(g);
    EXPECT_FALSE(r.planar) << g.order();
    ExpectCertified(g, r);
  }
}

TEST(IsPlanar, DisconnectedAndCutVertices) {
  // Two K4s sharing a vertex, plus a disjoint K5 minus an edge.
  const Graph g = Graph::build(12, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {3, 4}, {3, 5}, {3, 6}, {4, 5}, {4, 6}, {5, 6},
                                    {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}});
  const auto r = is_planar(g);
  EXPECT_TRUE(r.planar);
  ExpectCertified(g, r);
  const Graph bad = Graph::build(12, {{0, 1}, {6, 7}, {7, 8}, {7, 9}, {7, 10}, {7, 11}, {8, 9}, {8, 10}, {8, 11}, {9, 10}, {9, 11}, {10, 11}});
  const auto rb = is_planar(bad);
  EXPECT_FALSE(rb.planar);
  ExpectCertified(bad, rb);
}

TEST(IsTriangulation, Examples) {
  EXPECT_TRUE(is_triangulation(named::icosahedron()));
  EXPECT_FALSE(is_triangulation(named::cycle(4)));
  EXPECT_TRUE(is_triangulation(named::complete(4)));
  EXPECT_TRUE(is_triangulation(named::complete(3)));
  EXPECT_FALSE(is_triangulation(named::complete(5)));
  EXPECT_FALSE(is_triangulation(testing::planar16()));
  EXPECT_THROW(is_triangulation(named::path(2)), GraphError);
}

TEST(PlanarEdgeBound, Examples) {
  EXPECT_TRUE(planar_edge_bound_check(testing::planar16()));
  EXPECT_FALSE(planar_edge_bound_check(named::complete(5)));
  // Circulant C10(1,2) plus the antipodal matching: 5-regular, 25 > 24 edges.
  std::vector<Edge> edges;
  for (int u = 0; u < 10; ++u)
    for (int k = 1; k <= 2; ++k) edges.emplace_back(u, (u + k) % 10);
  for (int u = 0; u < 5; ++u) edges.emplace_back(u, u + 5);
  const Graph five_regular = Graph::build(10, edges);
  ASSERT_EQ(regularity(five_regular), 5);
  EXPECT_EQ(five_regular.size(), 25);
  EXPECT_FALSE(planar_edge_bound_check(five_regular));
  EXPECT_FALSE(is_planar(five_regular).planar);
  EXPECT_THROW(planar_edge_bound_check(Graph(2)), GraphError);
}

// Non-planar iff the graph has a K5 or K3,3 minor: either it is one, or a
// single edge deletion, edge contraction or vertex deletion keeps a minor.
class MinorOracle {
 public:
  auto nonplanar(const Graph& g) -> bool {
    const CanonicalCode code = canonical_code(g);
    if (auto it = memo_.find(code); it != memo_.end()) return it->second;
    bool found = are_isomorphic(g, named::complete(5)) || are_isomorphic(g, named::complete_bipartite(3, 3));
    if (!found && g.order() > 5) {
      for (int v = 0; v < g.order() && !found; ++v) {
        std::vector<Vertex> keep;
        for (int w = 0; w < g.order(); ++w)
          if (w != v) keep.push_back(w);
        found = nonplanar(induced_subgraph(g, keep));
      }
    }
    for (const Edge& e : g.edges()) {
      if (found) break;
      std::vector<Edge> rest;
      for (const Edge& f : g.edges())
        if (f != e) rest.push_back(f);
      found = g.size() > 9 && nonplanar(Graph::build(g.order(), rest));
      if (!found && g.order() > 5) found = nonplanar(contract(g, e));
    }
    memo_.emplace(code, found);
    return found;
  }

 private:
  static auto contract(const Graph& g, Edge e) -> Graph {
    const auto [u, v] = e;
    std::vector<int> label(g.order());
    for (int w = 0, next = 0; w < g.order(); ++w) label[w] = w == v ? -1 : next++;
    label[v] = label[u];
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges())
      if (label[a] != label[b]) edges.emplace_back(label[a], label[b]);
    return Graph::build(g.order() - 1, edges);
  }

  std::unordered_map<CanonicalCode, bool, CanonicalCodeHash> memo_;
};

TEST(IsPlanar, AgreesWithMinorOracleOnSmallCatalogues) {
  MinorOracle oracle;
  for (int n = 1; n <= 7; ++n) {
    int nonplanar = 0;
    for (const Graph& g : enumerate_graphs(n)) {
      const auto r = is_planar(g);
      ExpectCertified(g, r);
      ASSERT_EQ(!r.planar, oracle.nonplanar(g)) << write_edge_list(g);
      if (r.planar && n >= 3) {
        EXPECT_TRUE(planar_edge_bound_check(g));
      }
      nonplanar += !r.planar;
    }
    if (n <= 4) {
      EXPECT_EQ(nonplanar, 0);
    }
    if (n == 5) {
      EXPECT_EQ(nonplanar, 1);
    }
  }
}

TEST(IsPlanar, EdgeDeletionKeepsPlanarity) {
  std::mt19937_64 rng(17);
  int planar_seen = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const Graph g = testing::random_graph(rng, 6 + trial % 20, 0.15 + 0.05 * (trial % 4));
    const auto r = is_planar(g);
    ExpectCertified(g, r);
    if (!r.planar || g.size() == 0) continue;
    ++planar_seen;
    const auto edges = g.edges();
    const Edge drop = edges[rng() % edges.size()];
    std::vector<Edge> rest;
    for (const Edge& e : edges)
      if (e != drop) rest.push_back(e);
    EXPECT_TRUE(is_planar(Graph::build(g.order(), rest)).planar);
  }
  EXPECT_GT(planar_seen, 50);
}

TEST(IsPlanar, RelabellingInvariance) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::random_graph(rng, 5 + trial % 15, 0.3);
    const Graph h = g.relabel(testing::random_permutation(rng, g.order()));
    EXPECT_EQ(is_planar(g).planar, is_planar(h).planar);
  }
}

}  // namespace
}  // namespace linkirr
