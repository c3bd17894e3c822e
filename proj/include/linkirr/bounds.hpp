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


#ifndef LINKIRR_BOUNDS_HPP_
#define LINKIRR_BOUNDS_HPP_

/**
 * Closed-form bounds on link-irregular graphs, evaluated exactly.
 *
 * Everything except MomentEstimate is integer or rational arithmetic on
 * boost::multiprecision types. The moment estimates are heuristics built on
 * exp() and use plain doubles.
 */

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "datasets.hpp"
#include "enumeration.hpp"

namespace linkirr {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline auto ceil_div(const BigInt& a, const BigInt& b) -> BigInt {
  // cpp_int division truncates toward zero; b > 0 here.
  return a >= 0 ? BigInt((a + b - 1) / b) : BigInt(-((-a) / b));
}

inline auto choose2(long long k) -> long long { return k * (k - 1) / 2; }

inline auto pow2(long long e) -> BigInt { return BigInt(1) << static_cast<unsigned>(e); }

}  // namespace detail

/// 2^C(r,2) / r!: labelled graphs on r vertices over the largest orbit size.
inline auto g_lower_bound(int r) -> Rational {
  if (r < 0) throw GraphError("degree must be non-negative");
  BigInt factorial = 1;
  for (int i = 2; i <= r; ++i) factorial *= i;
  return Rational(detail::pow2(detail::choose2(r)), factorial);
}

/// Number of graphs on r vertices up to isomorphism, by enumeration.
inline auto g_exact(int r) -> BigInt {
  if (r < 0) throw GraphError("degree must be non-negative");
  return BigInt(enumerate_graphs(r).size());
}

/// k with 2^C(k,2) <= n < 2^C(k+1,2), then ceil((kn - sum_{d<k} (k-d) 2^C(d,2)) / 2).
inline auto asymptotic_edge_lower(long long n) -> BigInt {
  if (n < 1) throw GraphError("order must be at least 1");
  long long k = 1;
  while (detail::pow2(detail::choose2(k + 1)) <= n) ++k;
  BigInt total = BigInt(k) * n;
  for (long long d = 1; d < k; ++d) total -= BigInt(k - d) * detail::pow2(detail::choose2(d));
  return detail::ceil_div(total, 2);
}

/// Edge floor once links must be pairwise distinct. A vertex whose link has d
/// vertices has degree d, so the cheapest distinct links are all graphs on
/// 1..6 vertices, then degree 7 for every remaining vertex. Like the published
/// argument, this leaves out a possible degree-0 vertex.
inline auto link_distinctness_edge_floor(long long n) -> BigInt {
  long long stock = 0;
  BigInt degree_sum = 0;
  for (std::size_t d = 0; d < datasets::kSmallGraphCounts.size(); ++d) {
    stock += datasets::kSmallGraphCounts[d];
    degree_sum += BigInt(d + 1) * datasets::kSmallGraphCounts[d];
  }
  if (n <= stock)
    throw GraphError("floor needs more than " + std::to_string(stock) + " vertices, got " + std::to_string(n));
  degree_sum += BigInt(datasets::kSmallGraphCounts.size() + 1) * (n - stock);
  return detail::ceil_div(degree_sum, 2);
}

/// Largest order at which the distinctness floor still fits under 3n - 6.
inline auto planar_order_threshold() -> long long {
  long long n = 209;
  while (link_distinctness_edge_floor(n + 1) <= 3 * (n + 1) - 6) ++n;
  return n;
}

struct BoundsReport {
  long long n = 0;
  BigInt edge_lower;  // 2n - 5
  BigInt edge_upper;  // floor((2n^2 - 5n + 4) / 4)
  BigInt asym_lower;
  bool planar_possible = true;  // necessary condition only
  std::vector<std::string> notes;
};

inline auto edge_bounds(long long n) -> BoundsReport {
  if (n < 6) throw GraphError("no link-irregular graphs below 6 vertices; bounds are vacuous for n = " + std::to_string(n));
  BoundsReport r;
  r.n = n;
  r.edge_lower = BigInt(2) * n - 5;
  r.edge_upper = (BigInt(2) * n * n - BigInt(5) * n + 4) / 4;
  r.asym_lower = asymptotic_edge_lower(n);
  const long long threshold = planar_order_threshold();
  r.planar_possible = n <= threshold;
  r.notes.push_back("edge_lower: e >= 2n - 5; the counting argument assumes no isolated vertex");
  r.notes.push_back("edge_upper: floor((2n^2 - 5n + 4) / 4)");
  r.notes.push_back("asym_lower: k n - sum (k - d) 2^C(d,2), halved and rounded up");
  r.notes.push_back("planar_possible: necessary condition only; non-planar for n > " + std::to_string(threshold));
  return r;
}

struct MomentEstimate {
  long long n = 0;
  BigInt g;
  double expected_unique = 0.0;  // n e^{-(n-1)/g}
  double variance_ratio = 0.0;   // (e^{(n-1)/g} - 1) / n
};

inline auto moment_estimates(long long n, const BigInt& g) -> MomentEstimate {
  if (n < 1) throw GraphError("order must be at least 1");
  if (g < 1) throw GraphError("link-type count must be at least 1");
  const double x = static_cast<double>(Rational(n - 1, g));
  MomentEstimate m;
  m.n = n;
  m.g = g;
  m.expected_unique = static_cast<double>(n) * std::exp(-x);
  m.variance_ratio = std::expm1(x) / static_cast<double>(n);
  return m;
}

}  // namespace linkirr

#endif  // LINKIRR_BOUNDS_HPP_
