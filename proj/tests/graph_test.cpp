// Copyright 2026 The circorbit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "circorbit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <string>

#include "gtest/gtest.h"

#include "circorbit/errors.hpp"

namespace circorbit {
namespace {

std::size_t count_edges(const std::string& dot) {
  std::size_t edges = 0;
  for (std::size_t pos = dot.find("->"); pos != std::string::npos; pos = dot.find("->", pos + 2)) {
    ++edges;
  }
  return edges;
}

TEST(CirculantGraph, Construction) {
  const auto pentagon = new_circulant(5, 1, 4);
  EXPECT_TRUE(pentagon.strongly_connected());
  EXPECT_EQ(pentagon.d(), 3);
  EXPECT_EQ(pentagon.g(), 1);

  const auto split = new_circulant(12, 2, 4);
  EXPECT_FALSE(split.strongly_connected());
  EXPECT_EQ(split.g(), 2);
  EXPECT_THROW(split.require_connected(), DisconnectedGraph);

  EXPECT_THROW(new_circulant(5, 4, 1), RejectedParameters);
  EXPECT_THROW(new_circulant(5, 0, 1), RejectedParameters);
  EXPECT_THROW(new_circulant(5, 1, 5), RejectedParameters);
  EXPECT_THROW(new_circulant(5, 2, 2), RejectedParameters);

  const auto g = new_circulant(21, 4, 10);
  EXPECT_EQ(g.d(), 6);
  EXPECT_EQ(g.g(), 2);
  EXPECT_EQ(g.name(), "C_21(4,10)");
}

TEST(CirculantGraph, ConnectivityIsGcdTest) {
  EXPECT_FALSE(is_strongly_connected(new_circulant(12, 2, 4)));
  EXPECT_TRUE(is_strongly_connected(new_circulant(5, 1, 4)));
  EXPECT_TRUE(is_strongly_connected(new_circulant(9, 1, 4)));
  for (std::int64_t n = 3; n <= 30; ++n) {
    for (std::int64_t a = 1; a < n; ++a) {
      for (std::int64_t b = a + 1; b < n; ++b) {
        const auto g = new_circulant(n, a, b);
        // Reachability from 0 by breadth-first search.
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::vector<Vertex> frontier{0};
        seen[0] = true;
        while (!frontier.empty()) {
          const Vertex v = frontier.back();
          frontier.pop_back();
          for (Letter c : {Letter::a, Letter::b}) {
            const Vertex u = Bond{v, c}.terminus(g);
            if (!seen[static_cast<std::size_t>(u)]) {
              seen[static_cast<std::size_t>(u)] = true;
              frontier.push_back(u);
            }
          }
        }
        const bool all = std::all_of(seen.begin(), seen.end(), [](bool x) { return x; });
        ASSERT_EQ(g.strongly_connected(), all) << g.name();
      }
    }
  }
}

TEST(TransitDistance, Examples) {
  const auto c9 = new_circulant(9, 1, 4);
  EXPECT_EQ(transit_distance(c9, Word::parse("114114114", c9.alphabet())), 18);
  const auto c21 = new_circulant(21, 4, 10);
  EXPECT_EQ(transit_distance(c21, Word::sorted(15, 4)), 84);
  EXPECT_EQ(transit_distance(c21, Word::parse("a")), 4);
}

TEST(WindingNumber, Examples) {
  const auto c9 = new_circulant(9, 1, 4);
  EXPECT_EQ(winding_number(c9, Word::parse("114114114", c9.alphabet())), 2);
  const auto c5 = new_circulant(5, 1, 4);
  EXPECT_EQ(winding_number(c5, Word::parse("ab")), 1);
  EXPECT_FALSE(winding_number(c5, Word::parse("a")).has_value());
}

TEST(PathFrom, Examples) {
  const auto c9 = new_circulant(9, 1, 4);
  EXPECT_EQ(path_from(c9, 0, Word::parse("114", c9.alphabet())), (std::vector<Vertex>{0, 1, 2, 6}));
  const auto c5 = new_circulant(5, 1, 4);
  EXPECT_EQ(path_from(c5, 3, Word::parse("ab")), (std::vector<Vertex>{3, 4, 3}));
  EXPECT_EQ(path_from(c5, 2, Word{}), (std::vector<Vertex>{2}));
}

TEST(PathFrom, EndpointAndClosureProperties) {
  const auto g = new_circulant(11, 3, 7);
  for (int l = 1; l <= 10; ++l) {
    for (std::uint32_t mask = 0; mask < (1u << l); ++mask) {
      std::vector<Letter> letters;
      for (int i = 0; i < l; ++i) letters.push_back(mask >> i & 1u ? Letter::b : Letter::a);
      const Word w(letters);
      const std::int64_t delta = transit_distance(g, w);
      const bool closes = winding_number(g, w).has_value();
      for (Vertex v = 0; v < g.n(); ++v) {
        const auto path = path_from(g, v, w);
        ASSERT_EQ(path.back(), (v + delta) % g.n());
        ASSERT_EQ(path.back() == v, closes);
      }
      for (int s = 0; s < l; ++s) ASSERT_EQ(transit_distance(g, rotate(w, s)), delta);
    }
  }
}

TEST(Circuit, RequiresClosure) {
  const auto c5 = new_circulant(5, 1, 4);
  const Circuit c(c5, 7, Word::parse("ab"));
  EXPECT_EQ(c.start(), 2);
  EXPECT_EQ(c.winding(), 1);
  EXPECT_THROW(Circuit(c5, 0, Word::parse("a")), DoesNotClose);
  EXPECT_THROW(Circuit(c5, 0, Word{}), InvalidArgument);
}

TEST(Dot, FigureGraphs) {
  const std::string pentagon = to_dot(validate_steps(5, {1, 4}));
  EXPECT_EQ(count_edges(pentagon), 10u);
  EXPECT_NE(pentagon.find("0 -> 1 [label=\"a\""), std::string::npos);
  EXPECT_NE(pentagon.find("0 -> 4 [label=\"b\""), std::string::npos);
  EXPECT_NE(pentagon.find("layout=circo"), std::string::npos);

  const std::string octagon = to_dot(validate_steps(8, {1, 2, 3}));
  EXPECT_EQ(count_edges(octagon), 24u);
  EXPECT_NE(octagon.find("7 -> 2 [label=\"3\""), std::string::npos);

  const auto split = validate_steps(12, {2, 4});
  EXPECT_EQ(component_count(split), 2);
  const std::string dodecagon = to_dot(split);
  EXPECT_EQ(count_edges(dodecagon), 24u);
  EXPECT_NE(dodecagon.find("2 strongly connected components"), std::string::npos);

  EXPECT_EQ(to_dot(new_circulant(5, 1, 4)), pentagon);
}

TEST(Dot, RejectsBadStepLists) {
  EXPECT_THROW(validate_steps(5, {}), RejectedParameters);
  EXPECT_THROW(validate_steps(5, {2, 1}), RejectedParameters);
  EXPECT_THROW(validate_steps(5, {1, 5}), RejectedParameters);
  EXPECT_THROW(validate_steps(5, {0, 2}), RejectedParameters);
}

}  // namespace
}  // namespace circorbit
