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
#include <string>

#include <gtest/gtest.h>

#include "exmatch/errors.hpp"
#include "exmatch/graph.hpp"
#include "exmatch/io.hpp"
#include "test_graphs.hpp"

namespace exmatch {
namespace {

using testing::c4;
using testing::complete;
using testing::make_graph;

TEST(EdgeWeight, BlueIsZero) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(edge_weight(g, m, Edge(1, 2)), 0);
  EXPECT_EQ(edge_weight(g, m, Edge(0, 3)), 0);
}

TEST(EdgeWeight, RedInMatchingIsMinusOne) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(edge_weight(g, m, Edge(1, 0)), -1);
}

TEST(EdgeWeight, RedOutsideMatchingIsPlusOne) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{1, 2}, {0, 3}});
  EXPECT_EQ(edge_weight(g, m, Edge(0, 1)), 1);
}

TEST(EdgeWeight, UnknownEdgeThrows) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  EXPECT_THROW(edge_weight(g, m, Edge(0, 2)), InputError);
}

TEST(SymmetricDifference, IdenticalMatchingsGiveEmptySet) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  const CycleSet s = symmetric_difference(g, m, m);
  EXPECT_TRUE(s.empty());
  EXPECT_EQ(s.total_weight, 0);
}

TEST(SymmetricDifference, FourCycle) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  const PerfectMatching m2(g, {{1, 2}, {0, 3}});
  const CycleSet s = symmetric_difference(g, m, m2);
  ASSERT_EQ(s.cycles.size(), 1u);
  EXPECT_EQ(s.cycles[0].length(), 4);
  EXPECT_EQ(testing::edge_set(s.cycles[0].edges),
            (std::set<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  EXPECT_EQ(s.total_weight, -2);
}

TEST(SymmetricDifference, K8SplitsIntoTwoFourCycles) {
  const ColoredGraph g = complete(8, Color::kBlue);
  const PerfectMatching m(g, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const PerfectMatching m2(g, {{1, 2}, {0, 3}, {5, 6}, {4, 7}});
  const CycleSet s = symmetric_difference(g, m, m2);
  ASSERT_EQ(s.cycles.size(), 2u);
  std::set<Vertex> seen;
  for (const auto& c : s.cycles) {
    EXPECT_EQ(c.length(), 4);
    for (Vertex v : c.vertices) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(SymmetricDifference, CanonicalOrientation) {
  const ColoredGraph g = complete(6, Color::kRed);
  const PerfectMatching m(g, {{0, 5}, {1, 2}, {3, 4}});
  const PerfectMatching m2(g, {{0, 1}, {2, 3}, {4, 5}});
  const CycleSet s = symmetric_difference(g, m, m2);
  ASSERT_EQ(s.cycles.size(), 1u);
  EXPECT_EQ(s.cycles[0].vertices, (std::vector<Vertex>{0, 1, 2, 3, 4, 5}));
}

TEST(ApplyCycles, EmptySetIsIdentity) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(apply_cycles(g, m, CycleSet{}), m);
}

TEST(ApplyCycles, FourCycleSwitchesMatching) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  const PerfectMatching m2(g, {{1, 2}, {0, 3}});
  const CycleSet s = symmetric_difference(g, m, m2);
  const PerfectMatching out = apply_cycles(g, m, s);
  EXPECT_EQ(out, m2);
  EXPECT_EQ(out.red_count(), 0);
  EXPECT_EQ(out.red_count(), m.red_count() + s.total_weight);
}

TEST(ApplyCycles, Involution) {
  const ColoredGraph g = c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  const PerfectMatching m2(g, {{1, 2}, {0, 3}});
  const CycleSet s = symmetric_difference(g, m, m2);
  const PerfectMatching once = apply_cycles(g, m, s);
  // The same cycle, now read against `once`.
  CycleSet again;
  again.cycles.push_back(make_alternating_cycle(g, once, s.cycles[0].vertices));
  again.normalize();
  EXPECT_EQ(apply_cycles(g, once, again), m);
}

TEST(ApplyCycles, RejectsNonAlternatingCycle) {
  const ColoredGraph g = complete(6, Color::kBlue);
  const PerfectMatching m(g, {{0, 1}, {2, 3}, {4, 5}});
  const PerfectMatching other(g, {{0, 2}, {1, 4}, {3, 5}});
  CycleSet s;
  s.cycles.push_back(make_alternating_cycle(g, other, std::vector<Vertex>{0, 2, 1, 4, 3, 5}));
  EXPECT_THROW(apply_cycles(g, m, s), InputError);
}

TEST(MakeAlternatingCycle, RejectsBadSequences) {
  const ColoredGraph g = complete(6, Color::kBlue);
  const PerfectMatching m(g, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_THROW(make_alternating_cycle(g, m, std::vector<Vertex>{0, 1, 2}), InputError);
  EXPECT_THROW(make_alternating_cycle(g, m, std::vector<Vertex>{0, 1, 1, 2}), InputError);
  EXPECT_THROW(make_alternating_cycle(g, m, std::vector<Vertex>{0, 2, 1, 3}), InputError);
}

TEST(Validation, PerfectMatchingChecks) {
  const ColoredGraph k4 = complete(4, Color::kBlue);
  EXPECT_TRUE(is_perfect_matching(k4, std::vector<Edge>{{0, 1}, {2, 3}}));
  EXPECT_FALSE(is_perfect_matching(k4, std::vector<Edge>{{0, 1}, {1, 2}}));
  EXPECT_THROW(PerfectMatching(k4, {{0, 1}, {1, 2}}), InputError);
}

TEST(Validation, RedCount) {
  const ColoredGraph g = complete(4, Color::kRed);
  EXPECT_EQ(PerfectMatching(g, {{0, 1}, {2, 3}}).red_count(), 2);
  EXPECT_EQ(red_count(g, std::vector<Edge>{{0, 1}, {2, 3}}), 2);
}

TEST(ColoredGraph, RejectsMalformedEdges) {
  EXPECT_THROW(make_graph(3, {{0, 0, 'r'}}), InputError);
  EXPECT_THROW(make_graph(3, {{0, 3, 'r'}}), InputError);
  EXPECT_THROW(make_graph(3, {{0, 1, 'r'}, {1, 0, 'b'}}), InputError);
  EXPECT_THROW(make_graph(2, {{0, 1, 'r'}}, std::vector<Side>{Side::kA, Side::kA}), InputError);
}

TEST(ColoredGraph, Lookup) {
  const ColoredGraph g = c4();
  EXPECT_EQ(g.edge_count(), 4);
  EXPECT_EQ(g.color(1, 0), Color::kRed);
  EXPECT_EQ(g.color(2, 1), Color::kBlue);
  EXPECT_FALSE(g.color(0, 2).has_value());
  EXPECT_EQ(g.count(Color::kRed), 2);
  const auto nb = g.neighbors(0);
  EXPECT_EQ(std::vector<Vertex>(nb.begin(), nb.end()), (std::vector<Vertex>{1, 3}));
}

// r(M') = r(M) + w_M(M xor M'), and the cycles cover M xor M' exactly.
TEST(GraphProperties, RedCountIdentityOnRandomPairs) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const ColoredGraph g = testing::random_graph(8, 0.6, 0.5, seed);
    const auto pms = testing::subset_perfect_matchings(g);
    for (std::size_t i = 0; i < pms.size(); i += 3) {
      for (std::size_t j = 0; j < pms.size(); j += 2) {
        const PerfectMatching m(g, pms[i]);
        const PerfectMatching m2(g, pms[j]);
        const CycleSet s = symmetric_difference(g, m, m2);
        EXPECT_EQ(m2.red_count(), m.red_count() + s.total_weight);

        std::set<Edge> expected;
        for (const Edge& e : pms[i]) expected.insert(e);
        for (const Edge& e : pms[j]) {
          if (!expected.erase(e)) expected.insert(e);
        }
        std::set<Edge> got;
        std::set<Vertex> verts;
        int weight_sum = 0;
        for (const auto& c : s.cycles) {
          EXPECT_EQ(c.length() % 2, 0);
          EXPECT_TRUE(testing::is_single_alternating_cycle(testing::edge_set(c.edges),
                                                           testing::matching_set(m)));
          EXPECT_TRUE(testing::is_single_alternating_cycle(testing::edge_set(c.edges),
                                                           testing::matching_set(m2)));
          for (Vertex v : c.vertices) EXPECT_TRUE(verts.insert(v).second);
          for (const Edge& e : c.edges) {
            got.insert(e);
            weight_sum += edge_weight(g, m, e);
          }
        }
        EXPECT_EQ(got, expected);
        EXPECT_EQ(weight_sum, m2.red_count() - m.red_count());
        EXPECT_EQ(apply_cycles(g, m, s), m2);
      }
    }
  }
}

TEST(Io, ParsesJsonC4) {
  const ColoredGraph g = parse_graph(
      R"({"n":4,"edges":[[0,1,"red"],[2,3,"red"],[1,2,"blue"],[3,0,"blue"]]})",
      GraphFormat::kJson);
  EXPECT_EQ(g, c4());
}

TEST(Io, SelfLoopIsParseError) {
  try {
    parse_graph(R"({"n":2,"edges":[[0,0,"red"]]})", GraphFormat::kJson);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("self-loop"), std::string::npos);
  }
}

TEST(Io, MalformedInputsAreParseErrors) {
  EXPECT_THROW(parse_graph("{", GraphFormat::kJson), ParseError);
  EXPECT_THROW(parse_graph(R"({"n":2,"edges":[[0,1,"green"]]})", GraphFormat::kJson),
               ParseError);
  EXPECT_THROW(parse_graph(R"({"n":2,"edges":[[0,1,"red"],[1,0,"red"]]})", GraphFormat::kJson),
               ParseError);
  EXPECT_THROW(
      parse_graph(R"({"n":2,"edges":[[0,1,"red"]],"bipartition":[[0,1],[]]})",
                  GraphFormat::kJson),
      ParseError);
  EXPECT_THROW(parse_graph("graph G { 0 -- 1 [color=\"red\"]", GraphFormat::kDot), ParseError);
}

TEST(Io, DotIgnoresUnknownAttributes) {
  const ColoredGraph g = parse_graph(
      "graph G {\n  0 -- 1 [color=\"red\", penwidth=2];\n  2 -- 3 [color=red];\n"
      "  1 -- 2 [color=\"blue\"];\n  3 -- 0 [color=\"blue\" label=\"x\"];\n}\n",
      GraphFormat::kDot);
  EXPECT_EQ(g, c4());
  EXPECT_EQ(serialize_graph(g, GraphFormat::kDot).find("penwidth"), std::string::npos);
}

TEST(Io, RoundTripRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const ColoredGraph g = testing::random_graph(7, 0.4, 0.5, seed);
    const ColoredGraph b = testing::random_bipartite(4, 0.5, 0.3, seed);
    for (GraphFormat f : {GraphFormat::kJson, GraphFormat::kDot}) {
      EXPECT_EQ(parse_graph(serialize_graph(g, f), f), g);
      EXPECT_EQ(parse_graph(serialize_graph(b, f), f), b);
    }
  }
}

TEST(Io, IsolatedVerticesSurviveDot) {
  const ColoredGraph g = make_graph(5, {{0, 1, 'b'}});
  EXPECT_EQ(parse_graph(serialize_graph(g, GraphFormat::kDot), GraphFormat::kDot), g);
}

TEST(Io, EdgeListRoundTrip) {
  const std::vector<Edge> edges{{0, 3}, {1, 2}};
  EXPECT_EQ(parse_edge_list(serialize_edge_list(edges)), edges);
  EXPECT_THROW(parse_edge_list("[[0]]"), ParseError);
}

}  // namespace
}  // namespace exmatch
