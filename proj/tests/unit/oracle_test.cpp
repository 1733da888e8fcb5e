// Copyright 2026 The exmatch Authors
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

#include <set>

#include <gtest/gtest.h>

#include "exmatch/errors.hpp"
#include "exmatch/generators.hpp"
#include "exmatch/oracle.hpp"
#include "test_graphs.hpp"

namespace exmatch {
namespace {

using testing::c4;
using testing::complete;
using testing::make_graph;

ColoredGraph complement_of(int n, const std::set<Edge>& h) {
  std::vector<ColoredEdge> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!h.count(Edge(a, b))) edges.push_back({Edge(a, b), Color::kBlue});
    }
  }
  return ColoredGraph(n, std::move(edges));
}

// Largest independent set by trying every subset.
int subset_alpha(const ColoredGraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    bool ok = true;
    for (const auto& ce : g.edges()) {
      if ((s >> ce.edge.u & 1) && (s >> ce.edge.v & 1)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

TEST(Enumerate, K4HasThree) {
  const auto pms = enumerate_perfect_matchings(complete(4, Color::kBlue));
  ASSERT_EQ(pms.size(), 3u);
  const ColoredGraph g = complete(4, Color::kBlue);
  EXPECT_EQ(pms[0], PerfectMatching(g, {{0, 1}, {2, 3}}));
  EXPECT_EQ(pms[1], PerfectMatching(g, {{0, 2}, {1, 3}}));
  EXPECT_EQ(pms[2], PerfectMatching(g, {{0, 3}, {1, 2}}));
}

TEST(Enumerate, C4HasTwo) { EXPECT_EQ(enumerate_perfect_matchings(c4()).size(), 2u); }

TEST(Enumerate, OddIsEmpty) {
  EXPECT_TRUE(enumerate_perfect_matchings(complete(5, Color::kBlue)).empty());
}

TEST(Enumerate, CapIsEnforced) {
  OracleLimits limits;
  limits.max_enumerate_n = 6;
  EXPECT_THROW(enumerate_perfect_matchings(complete(8, Color::kBlue), limits), OracleCapError);
  limits.max_count_n = 6;
  EXPECT_THROW(count_perfect_matchings(complete(8, Color::kBlue), limits), OracleCapError);
}

TEST(Enumerate, MatchesSubsetEnumeration) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ColoredGraph g = testing::random_graph(8, 0.5, 0.5, seed);
    std::set<std::vector<Edge>> expected;
    for (auto pm : testing::subset_perfect_matchings(g)) expected.insert(pm);
    std::vector<std::vector<Edge>> got;
    for (const auto& pm : enumerate_perfect_matchings(g)) {
      got.emplace_back(pm.edges().begin(), pm.edges().end());
    }
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    EXPECT_EQ(std::set<std::vector<Edge>>(got.begin(), got.end()), expected);
    EXPECT_EQ(got.size(), expected.size());
    EXPECT_EQ(count_perfect_matchings(g), expected.size());
  }
}

TEST(Count, CompleteGraphs) {
  EXPECT_EQ(count_perfect_matchings(complete(4, Color::kBlue)), 3u);
  EXPECT_EQ(count_perfect_matchings(complete(6, Color::kBlue)), 15u);
  std::uint64_t dfact = 1;
  for (int m = 1; m <= 5; ++m) {
    dfact *= 2 * m - 1;
    const ColoredGraph g = complete(2 * m, Color::kRed);
    EXPECT_EQ(count_perfect_matchings(g), dfact);
    EXPECT_EQ(enumerate_perfect_matchings(g).size(), dfact);
  }
}

TEST(Count, OddComponentGivesZero) {
  const ColoredGraph g = make_graph(6, {{0, 1, 'r'}, {1, 2, 'r'}, {0, 2, 'b'}, {3, 4, 'b'},
                                        {4, 5, 'b'}, {3, 5, 'b'}});
  EXPECT_EQ(count_perfect_matchings(g), 0u);
}

TEST(Decide, Examples) {
  const ColoredGraph red = complete(4, Color::kRed);
  EXPECT_TRUE(em_decide_bruteforce(red, 2).has_value());
  EXPECT_FALSE(em_decide_bruteforce(red, 1).has_value());
  const ColoredGraph g = c4();
  const auto w = em_decide_bruteforce(g, 0);
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(*w, PerfectMatching(g, {{1, 2}, {0, 3}}));
}

TEST(Decide, PresentIffAchievable) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ColoredGraph g = testing::random_graph(8, 0.55, 0.5, seed);
    std::set<int> counts;
    for (const auto& pm : testing::subset_perfect_matchings(g)) {
      counts.insert(testing::reds(g, pm));
    }
    const auto ach = achievable_red_counts(g);
    EXPECT_EQ(std::set<int>(ach.begin(), ach.end()), counts);
    for (int k = 0; k <= 4; ++k) {
      const auto w = em_decide_bruteforce(g, k);
      EXPECT_EQ(w.has_value(), counts.count(k) == 1);
      if (w) EXPECT_EQ(w->red_count(), k);
    }
  }
}

TEST(Independence, CompleteGraphIsOne) {
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(independence_number(complete(n, Color::kBlue)), 1);
}

TEST(Independence, FiveCycleIsTwo) {
  const ColoredGraph g =
      make_graph(5, {{0, 1, 'b'}, {1, 2, 'b'}, {2, 3, 'b'}, {3, 4, 'b'}, {4, 0, 'r'}});
  EXPECT_EQ(independence_number(g), 2);
}

TEST(Independence, MatchesSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    const int n = 3 + static_cast<int>(seed % 10);
    const ColoredGraph g = testing::random_graph(n, 0.1 * (1 + seed % 9), 0.5, seed);
    EXPECT_EQ(independence_number(g), subset_alpha(g)) << "seed " << seed;
  }
}

TEST(Independence, ComplementOfTriangleFreeIsAtMostTwo) {
  // Complement of C5 and of even cycles, all triangle-free.
  for (int n = 4; n <= 14; ++n) {
    std::set<Edge> h;
    for (int i = 0; i < n; ++i) h.insert(Edge(i, (i + 1) % n));
    EXPECT_LE(independence_number(complement_of(n, h)), 2);
  }
}

TEST(BipartiteIndependence, CompleteBipartiteIsZero) {
  const ColoredGraph g = testing::random_bipartite(3, 1.0, 0.5, 1);
  EXPECT_EQ(bipartite_independence_number(g), 0);
}

TEST(BipartiteIndependence, OneMissingEdgeIsOne) {
  std::vector<std::tuple<int, int, char>> edges;
  for (int a = 0; a < 3; ++a) {
    for (int b = 3; b < 6; ++b) {
      if (!(a == 0 && b == 3)) edges.emplace_back(a, b, 'b');
    }
  }
  const ColoredGraph g = make_graph(
      6, edges, std::vector<Side>{Side::kA, Side::kA, Side::kA, Side::kB, Side::kB, Side::kB});
  EXPECT_EQ(bipartite_independence_number(g), 1);
}

TEST(BipartiteIndependence, RequiresBipartition) {
  EXPECT_THROW(bipartite_independence_number(c4()), InputError);
}

TEST(BipartiteIndependence, MatchesSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int s = 2 + static_cast<int>(seed % 4);
    const ColoredGraph g = testing::random_bipartite(s, 0.2 + 0.1 * (seed % 7), 0.5, seed);
    int best = 0;
    for (std::uint32_t x = 0; x < (1u << (2 * s)); ++x) {
      int in_a = 0, in_b = 0;
      bool ok = true;
      for (int v = 0; v < 2 * s; ++v) {
        if (x >> v & 1) (v < s ? in_a : in_b)++;
      }
      if (in_a != in_b) continue;
      for (const auto& ce : g.edges()) {
        if ((x >> ce.edge.u & 1) && (x >> ce.edge.v & 1)) ok = false;
      }
      if (ok) best = std::max(best, in_a);
    }
    EXPECT_EQ(bipartite_independence_number(g), best) << "seed " << seed;
  }
}

}  // namespace
}  // namespace exmatch
