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


#include "linkirr/bounds.hpp"

#include <gtest/gtest.h>

#include "support.hpp"

namespace linkirr {
namespace {

TEST(GLowerBound, Examples) {
  EXPECT_EQ(g_lower_bound(3), Rational(4, 3));
  EXPECT_EQ(g_lower_bound(5), Rational(1024, 120));
  EXPECT_EQ(g_lower_bound(0), Rational(1));
  EXPECT_EQ(g_lower_bound(1), Rational(1));
  EXPECT_THROW(g_lower_bound(-1), GraphError);
}

TEST(GExact, MatchesCountsAndDominatesLowerBound) {
  const std::vector<int> counts = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (int r = 0; r <= 7; ++r) {
    EXPECT_EQ(g_exact(r), counts[r]);
    EXPECT_LE(g_lower_bound(r), Rational(g_exact(r)));
  }
  EXPECT_THROW(g_exact(kMaxEnumerationOrder + 1), LimitError);
}

TEST(EdgeBounds, Examples) {
  const auto six = edge_bounds(6);
  EXPECT_EQ(six.edge_lower, 7);
  EXPECT_EQ(six.edge_upper, 11);
  const auto seven = edge_bounds(7);
  EXPECT_EQ(seven.edge_lower, 9);
  EXPECT_EQ(seven.edge_upper, 16);
  const auto twelve = edge_bounds(12);
  EXPECT_EQ(twelve.edge_lower, 19);
  EXPECT_EQ(twelve.edge_upper, 58);
  const int e = testing::counterexample12().size();
  EXPECT_TRUE(twelve.edge_lower <= e && e <= twelve.edge_upper);
  EXPECT_TRUE(edge_bounds(277).planar_possible);
  EXPECT_FALSE(edge_bounds(278).planar_possible);
  EXPECT_FALSE(six.notes.empty());
  EXPECT_THROW(edge_bounds(5), GraphError);
}

TEST(EdgeBounds, LowerNeverExceedsUpper) {
  for (long long n = 6; n < 2000; ++n) {
    const auto r = edge_bounds(n);
    ASSERT_LE(r.edge_lower, r.edge_upper) << n;
  }
  const auto huge = edge_bounds(3'000'000'000LL);
  EXPECT_EQ(huge.edge_upper, (BigInt(2) * 3'000'000'000LL * 3'000'000'000LL - BigInt(15'000'000'000LL) + 4) / 4);
}

TEST(AsymptoticEdgeLower, Examples) {
  EXPECT_EQ(asymptotic_edge_lower(1), 1);
  EXPECT_EQ(asymptotic_edge_lower(8), 10);
  EXPECT_EQ(asymptotic_edge_lower(64), 121);
  EXPECT_EQ(asymptotic_edge_lower(6), 6);
  EXPECT_THROW(asymptotic_edge_lower(0), GraphError);
}

TEST(AsymptoticEdgeLower, IndependentEvaluation) {
  // Direct re-evaluation with doubles for moderate n.
  for (long long n = 1; n <= 5000; n += 7) {
    int k = 1;
    while (std::pow(2.0, (k + 1) * k / 2) <= static_cast<double>(n)) ++k;
    double total = static_cast<double>(k) * static_cast<double>(n);
    for (int d = 1; d < k; ++d) total -= (k - d) * std::pow(2.0, d * (d - 1) / 2);
    EXPECT_EQ(asymptotic_edge_lower(n), static_cast<long long>(std::ceil(total / 2))) << n;
  }
}

TEST(LinkDistinctnessEdgeFloor, Examples) {
  EXPECT_EQ(link_distinctness_edge_floor(278), 829);
  EXPECT_EQ(link_distinctness_edge_floor(277), 825);
  EXPECT_EQ(link_distinctness_edge_floor(209), 587);
  EXPECT_GT(link_distinctness_edge_floor(278), 3 * 278 - 6);
  EXPECT_LE(link_distinctness_edge_floor(277), 3 * 277 - 6);
  EXPECT_EQ(planar_order_threshold(), 277);
  EXPECT_THROW(link_distinctness_edge_floor(208), GraphError);
  for (long long n = 209; n < 400; ++n)
    EXPECT_EQ(link_distinctness_edge_floor(n), detail::ceil_div(BigInt(7 * n - 289), 2)) << n;
}

TEST(MomentEstimates, Examples) {
  const auto one = moment_estimates(1, 5);
  EXPECT_DOUBLE_EQ(one.expected_unique, 1.0);
  EXPECT_DOUBLE_EQ(one.variance_ratio, 0.0);
  const auto big = moment_estimates(100, BigInt(1) << 200);
  EXPECT_NEAR(big.expected_unique, 100.0, 1e-9);
  EXPECT_NEAR(big.variance_ratio, 0.0, 1e-9);
  const auto twelve = moment_estimates(12, g_exact(7));
  EXPECT_GT(twelve.expected_unique, 11.0);
  EXPECT_LT(twelve.expected_unique, 12.0);
  EXPECT_THROW(moment_estimates(0, 1), GraphError);
  EXPECT_THROW(moment_estimates(5, 0), GraphError);
}

TEST(MomentEstimates, MonotoneInG) {
  for (long long n : {2LL, 12LL, 100LL}) {
    auto prev = moment_estimates(n, 1);
    for (int g = 2; g < 500; ++g) {
      const auto cur = moment_estimates(n, g);
      EXPECT_GE(cur.expected_unique, prev.expected_unique);
      EXPECT_LE(cur.variance_ratio, prev.variance_ratio);
      EXPECT_GE(cur.expected_unique, 0.0);
      EXPECT_LE(cur.expected_unique, static_cast<double>(n));
      EXPECT_GE(cur.variance_ratio, 0.0);
      prev = cur;
    }
  }
}

// The upper bound holds for every hit; the lower bounds fail only for hits
// with an isolated vertex, which the counting argument does not cover.
TEST(EdgeBounds, EmpiricalOverSearchHits) {
  for (int n = 6; n <= 8; ++n) {
    const auto report = edge_bounds(n);
    int below = 0;
    for (const Graph& g : search_link_irregular(GenSpec{.n = n, .regularity = std::nullopt}).hits) {
      EXPECT_LE(g.size(), report.edge_upper);
      const bool low = g.size() < report.edge_lower || g.size() < report.asym_lower;
      if (!low) continue;
      ++below;
      bool isolated = false;
      for (int v = 0; v < n; ++v) isolated = isolated || g.degree(v) == 0;
      EXPECT_TRUE(isolated) << write_edge_list(g);
    }
    EXPECT_EQ(below, n == 8 ? 7 : 0) << n;
  }
}

}  // namespace
}  // namespace linkirr
