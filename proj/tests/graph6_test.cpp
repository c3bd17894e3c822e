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


#include "linkirr/graph6.hpp"

#include <gtest/gtest.h>

#include "linkirr/enumeration.hpp"
#include "support.hpp"

namespace linkirr {
namespace {

// Reference encodings produced by an independent graph6 writer.
TEST(Graph6, KnownEncodings) {
  EXPECT_EQ(write_graph6(named::complete(5)), "D~{");
  EXPECT_EQ(write_graph6(named::path(4)), "Ch");
  EXPECT_EQ(write_graph6(Graph(1)), "@");
  EXPECT_EQ(write_graph6(Graph(0)), "?");
  const Graph petersen = Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  EXPECT_EQ(write_graph6(petersen), "IheA@GUAo");
  EXPECT_EQ(parse_graph6("IheA@GUAo"), petersen);
}

TEST(Graph6, LongHeader) {
  const std::string c63 = "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????????o?????????G";
  EXPECT_EQ(write_graph6(named::cycle(63)), c63);
  EXPECT_EQ(parse_graph6(c63), named::cycle(63));
  const Graph k64 = named::complete(64);
  const std::string s = write_graph6(k64);
  EXPECT_EQ(s.substr(0, 4), "~?@?");
  EXPECT_EQ(s.size(), 4U + (64 * 63 / 2 + 5) / 6);
  EXPECT_EQ(parse_graph6(s), k64);
}

TEST(Graph6, AcceptsPrefixNewlineAndLongFormHeader) {
  EXPECT_EQ(parse_graph6(">>graph6<<D~{\n"), named::complete(5));
  // Non-shortest 4-byte header for n = 5.
  EXPECT_EQ(parse_graph6("~??D~{").order(), 5);
}

TEST(Graph6, ErrorsAreDistinct) {
  const auto kind_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return e.kind();
    }
    ADD_FAILURE() << "accepted " << s;
    return Graph6Error::Kind::kTooLarge;
  };
  EXPECT_EQ(kind_of(""), Graph6Error::Kind::kMalformedHeader);
  EXPECT_EQ(kind_of("~?"), Graph6Error::Kind::kMalformedHeader);
  EXPECT_EQ(kind_of("D~"), Graph6Error::Kind::kLengthMismatch);
  EXPECT_EQ(kind_of("D~{?"), Graph6Error::Kind::kLengthMismatch);
  EXPECT_EQ(kind_of("D~~"), Graph6Error::Kind::kNonzeroPadding);  // K5 needs 10 bits; low 2 bits of byte 2 set
  EXPECT_EQ(kind_of("D ~{"), Graph6Error::Kind::kInvalidCharacter);
  EXPECT_EQ(kind_of("~?@@"), Graph6Error::Kind::kTooLarge);
  EXPECT_THROW(parse_graph6("?x"), GraphError);
}

TEST(Graph6, CatalogueRoundTripIsByteExact) {
  for (int n = 0; n <= 6; ++n) {
    for (const Graph& g : enumerate_graphs(n)) {
      const std::string s = write_graph6(g);
      const Graph back = parse_graph6(s);
      EXPECT_EQ(back, g);
      EXPECT_EQ(write_graph6(back), s);
    }
  }
}

TEST(Graph6, RandomRoundTrip) {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 1000; ++trial) {
    const Graph g = testing::random_graph(rng, static_cast<int>(rng() % 65), (trial % 9 + 1) / 10.0);
    EXPECT_EQ(parse_graph6(write_graph6(g)), g);
  }
}

}  // namespace
}  // namespace linkirr
