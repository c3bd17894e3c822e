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

#ifndef LINKIRR_DATASETS_HPP_
#define LINKIRR_DATASETS_HPP_

// Published edge sets, kept byte-for-byte as printed (including the repeated
// pairs in the 18-vertex list). Deduplication is the parser's job.

#include <array>
#include <string_view>
#include <utility>
#include <vector>

namespace linkirr::datasets {

/// 7-regular link-irregular graph on 12 vertices, 0-based.
inline constexpr std::string_view kCounterexample12 = R"({ (3, 4), (3, 7), (3, 1), (3, 9), (3, 5), (3, 11), (3, 2),
(4, 6), (4, 5), (4, 8), (4, 11), (4, 2), (4, 0),
(7, 10), (7, 2), (7, 9), (7, 1), (7, 11), (7, 8),
(6, 1), (6, 11), (6, 5), (6, 10), (6, 0), (6, 9),
(0, 2), (0, 5), (0, 11), (0, 10), (0, 9),
(2, 8), (2, 1), (2, 9), (5, 10), (5, 11), (5, 8),
(10, 9), (10, 8), (10, 1), (1, 9), (1, 8), (11, 8) }
)";
inline constexpr int kCounterexample12Base = 0;

/// 5-regular planar graph on 16 vertices, 1-based.
inline constexpr std::string_view kPlanar16 = R"({(1,2), (1,3), (1,4), (1,5), (1,6),
(2,6), (2,7), (2,8), (2,3),
(3,8), (3,9), (3,4),
(4,10), (4,11), (4,5),
(5,11), (5,12), (5,6),
(6,12), (6,7),
(7,13), (7,14), (7,8),
(8,14), (8,9),
(9,14), (9,15), (9,10),
(10,15), (10,16), (10,11),
(11,16), (11,12),
(12,16), (12,13),
(13,16), (13,15), (13,14),
(14,15),
(15,16)}
)";
inline constexpr int kPlanar16Base = 1;

/// 5-regular planar graph on 18 vertices, 1-based.
inline constexpr std::string_view kPlanar18 = R"({(1,2), (1,3), (1,4), (1,5), (1,6),
(2,6), (2,7), (2,8), (2,9),
(3,9), (3,10), (3,11), (3,4),
(4,11), (4,12), (4,5),
(5,12), (5,13), (5,6),
(6,13), (6,14), (6,7),
(7,14), (7,15), (7,8),
(8,15), (8,16), (8,9),
(9,16), (9,10),
(10,16), (10,17), (10,11),
(11,17), (11,12),
(12,17), (12,13),
(13,17), (13,18), (13,14),
(14,18), (14,15),
(15,18), (15,16),
(16,18),
(17,10), (17,18), (17,12), (17,11),
(18,13), (18,17), (18,16), (18,15), (18,14)}
)";
inline constexpr int kPlanar18Base = 1;

/// The printed 18-vertex list has 46 distinct edges; vertices 6 and 13 end up
/// with degree 6. Dropping this edge (1-based) is the only single deletion that
/// leaves a 5-regular graph.
inline constexpr std::pair<int, int> kPlanar18ExtraEdge = {6, 13};

/// Published link degree multisets of the 12-vertex counterexample, L(0)..L(11).
inline const std::array<std::vector<int>, 12> kCounterexample12LinkDegrees = {{
    {2, 3, 3, 3, 4, 4, 5},
    {2, 3, 3, 4, 4, 4, 5},
    {2, 3, 3, 4, 4, 4, 4},
    {2, 3, 3, 3, 3, 4, 4},
    {3, 3, 3, 3, 4, 5, 5},
    {2, 3, 3, 4, 4, 5, 5},
    {2, 3, 3, 3, 4, 4, 5},
    {2, 3, 4, 4, 4, 4, 5},
    {3, 3, 3, 3, 3, 3, 4},
    {3, 3, 3, 4, 4, 4, 5},
    {3, 3, 3, 3, 4, 4, 4},
    {2, 3, 3, 3, 3, 5, 5},
}};

/// Isomorphism-class counts of graphs on 1..6 vertices.
inline constexpr std::array<long, 6> kSmallGraphCounts = {1, 2, 4, 11, 34, 156};

}  // namespace linkirr::datasets

#endif  // LINKIRR_DATASETS_HPP_
