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
#include "exmatch/skip.hpp"
#include "test_graphs.hpp"

namespace exmatch {
namespace {

using testing::make_graph;

std::vector<EdgePair> labeled(std::initializer_list<int> labels) {
  std::vector<EdgePair> out;
  int i = 0;
  for (int l : labels) {
    out.push_back({Edge(2 * i, 2 * i + 1), Edge(2 * i + 1, 2 * i + 2), l, 2 * i});
    ++i;
  }
  return out;
}

// Plain 2L-cycle 0..2L-1 with M = {(0,1), (2,3), ...}.
ColoredGraph cycle_graph(int len, const std::string& colors) {
  std::vector<std::tuple<int, int, char>> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len, colors[i]);
  return make_graph(len, edges);
}

PerfectMatching even_matching(const ColoredGraph& g, int len) {
  std::vector<Edge> es;
  for (int i = 0; i < len; i += 2) es.emplace_back(i, i + 1);
  return PerfectMatching(g, es);
}

AlternatingCycle around(const ColoredGraph& g, const PerfectMatching& m, int len) {
  std::vector<Vertex> vs(len);
  for (int i = 0; i < len; ++i) vs[i] = i;
  return make_alternating_cycle(g, m, vs);
}

TEST(PairDecomposition, AllBlueIsAllZero) {
  const ColoredGraph g = cycle_graph(6, "bbbbbb");
  const PerfectMatching m = even_matching(g, 6);
  const auto pairs = pair_decomposition(g, m, around(g, m, 6));
  ASSERT_EQ(pairs.size(), 3u);
  for (const auto& p : pairs) EXPECT_EQ(p.label, 0);
}

TEST(PairDecomposition, RedMatchingThenBlueIsMinusOne) {
  const ColoredGraph g = cycle_graph(6, "rbbbbb");
  const PerfectMatching m = even_matching(g, 6);
  const auto pairs = pair_decomposition(g, m, around(g, m, 6));
  ASSERT_EQ(pairs.size(), 3u);
  EXPECT_EQ(pairs[0].matching_edge, Edge(0, 1));
  EXPECT_EQ(pairs[0].nonmatching_edge, Edge(1, 2));
  EXPECT_EQ(pairs[0].label, -1);
}

TEST(PairDecomposition, LabelsSumToCycleWeight) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = testing::random_cycle_instance(4 + 2 * (seed % 6), 0, 0.0, 0.5, false, seed);
    const auto pairs = pair_decomposition(inst.g, inst.m, inst.c);
    ASSERT_EQ(static_cast<int>(pairs.size()), inst.c.length() / 2);
    int sum = 0;
    std::set<Edge> covered;
    for (const auto& p : pairs) {
      EXPECT_TRUE(inst.m.contains(p.matching_edge));
      EXPECT_FALSE(inst.m.contains(p.nonmatching_edge));
      EXPECT_EQ(p.label, edge_weight(inst.g, inst.m, p.matching_edge) +
                             edge_weight(inst.g, inst.m, p.nonmatching_edge));
      covered.insert(p.matching_edge);
      covered.insert(p.nonmatching_edge);
      sum += p.label;
    }
    EXPECT_EQ(sum, inst.c.weight);
    EXPECT_EQ(covered, testing::edge_set(inst.c.edges));
  }
}

TEST(PairDecomposition, RejectsCycleOfAnotherMatching) {
  const ColoredGraph h = make_graph(6, {{0, 1, 'b'}, {1, 2, 'b'}, {2, 3, 'b'}, {3, 4, 'b'},
                                        {4, 5, 'b'}, {0, 5, 'b'}, {0, 3, 'b'}});
  const PerfectMatching hm(h, {{0, 1}, {2, 3}, {4, 5}});
  const PerfectMatching hn(h, {{0, 3}, {1, 2}, {4, 5}});
  const auto c = make_alternating_cycle(h, hm, std::vector<Vertex>{0, 1, 2, 3, 4, 5});
  EXPECT_THROW(pair_decomposition(h, hn, c), InputError);
}

TEST(Bundles, PlusZeroPlus) {
  const auto pairs = labeled({1, 0, 1});
  const auto b = find_bundles(pairs);
  ASSERT_EQ(b.size(), 1u);
  EXPECT_EQ(b[0].sign, 1);
  EXPECT_EQ(b[0].first_pair, 0);
  EXPECT_EQ(b[0].second_pair, 2);
  EXPECT_EQ(b[0].path.size(), 3u);
  EXPECT_EQ(b[0].weight(), 2);
}

TEST(Bundles, AlternatingSignsHaveNone) {
  const auto pairs = labeled({1, -1, 1, -1});
  EXPECT_TRUE(find_bundles(pairs).empty());
  const auto saps = find_saps(pairs);
  ASSERT_EQ(saps.size(), 1u);
  EXPECT_EQ(saps[0].nonzero_count, 4);
  EXPECT_EQ(saps[0].weight, 0);
}

TEST(Bundles, AllZero) {
  const auto pairs = labeled({0, 0, 0, 0});
  EXPECT_TRUE(find_bundles(pairs).empty());
  const auto saps = find_saps(pairs);
  ASSERT_EQ(saps.size(), 1u);
  EXPECT_EQ(saps[0].weight, 0);
  EXPECT_EQ(saps[0].nonzero_count, 0);
}

TEST(Bundles, MixedSequence) {
  const auto pairs = labeled({1, 0, 1, -1, 0, -1, 1, -1});
  const auto b = find_bundles(pairs);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_EQ(b[0].sign, 1);
  EXPECT_EQ(b[1].sign, -1);
  EXPECT_EQ(b[1].first_pair, 3);
  EXPECT_EQ(b[1].second_pair, 5);
}

// Bundles are disjoint, well formed, and maximal; SAP weights lie in [-1, 1].
TEST(Bundles, PropertiesOnRandomLabelings) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-1, 1);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<EdgePair> pairs = labeled({});
    const int len = 1 + trial % 20;
    for (int i = 0; i < len; ++i) pairs.push_back({Edge(0, 1), Edge(1, 2), d(rng), 2 * i});
    const auto bundles = find_bundles(pairs);
    std::vector<char> used(len, 0);
    for (const auto& b : bundles) {
      ASSERT_LT(b.first_pair, b.second_pair);
      EXPECT_EQ(pairs[b.first_pair].label, b.sign);
      EXPECT_EQ(pairs[b.second_pair].label, b.sign);
      int w = 0;
      for (int i = b.first_pair; i <= b.second_pair; ++i) {
        if (i != b.first_pair && i != b.second_pair) EXPECT_EQ(pairs[i].label, 0);
        EXPECT_FALSE(used[i]);
        used[i] = 1;
        w += pairs[i].label;
      }
      EXPECT_EQ(w, b.weight());
    }
    // No further bundle fits among unused pairs.
    for (int i = 0; i < len; ++i) {
      if (used[i] || pairs[i].label == 0) continue;
      int j = i + 1;
      while (j < len && pairs[j].label == 0 && !used[j]) ++j;
      if (j < len && !used[j]) EXPECT_NE(pairs[j].label, pairs[i].label) << "trial " << trial;
    }
    for (const auto& sap : find_saps(pairs)) {
      EXPECT_GE(sap.weight, -1);
      EXPECT_LE(sap.weight, 1);
    }
  }
}

TEST(WeightFilter, Membership) {
  EXPECT_TRUE(WeightFilter{}.empty());
  EXPECT_EQ(WeightFilter::negative().values(), (std::vector<int>{-4, -3, -2, -1}));
  EXPECT_TRUE(WeightFilter::any().contains(0));
  EXPECT_FALSE(WeightFilter::positive().contains(0));
  EXPECT_FALSE(WeightFilter::any().contains(5));
  EXPECT_EQ((WeightFilter{1} | WeightFilter{-1}).values(), (std::vector<int>{-1, 1}));
  EXPECT_EQ(WeightFilter::for_path_weight(2).values(), WeightFilter::negative().values());
  EXPECT_EQ(WeightFilter::for_path_weight(1).values(), (std::vector<int>{-4, -3, -2, -1, 0}));
  EXPECT_EQ(WeightFilter::for_path_weight(0).values(), (std::vector<int>{0, 1, 2, 3, 4}));
  EXPECT_EQ(WeightFilter::for_path_weight(-1).values(), WeightFilter::positive().values());
}

TEST(FindSkip, ChordlessCycleHasNone) {
  const ColoredGraph g = cycle_graph(8, "rbrbrbrb");
  const PerfectMatching m = even_matching(g, 8);
  EXPECT_FALSE(find_skip(g, m, around(g, m, 8), WeightFilter::any()).has_value());
}

TEST(FindSkip, EmptyFilterHasNone) {
  const auto inst = testing::random_cycle_instance(10, 0, 0.8, 0.5, false, 1);
  EXPECT_FALSE(find_skip(inst.g, inst.m, inst.c, WeightFilter{}).has_value());
}

TEST(FindSkip, ConstructedTenCycle) {
  // 10-cycle 0..9, M = {01, 23, 45, 67, 89}; chords 1-5 and 2-8 cross and
  // cut out 1-2 and 5-6-7-8, leaving the 8-cycle 1-5-4-3-2-8-9-0-1.
  std::vector<std::tuple<int, int, char>> edges;
  for (int i = 0; i < 10; ++i) edges.emplace_back(i, (i + 1) % 10, i == 6 ? 'r' : 'b');
  edges.emplace_back(1, 5, 'r');
  edges.emplace_back(2, 8, 'b');
  const ColoredGraph g = make_graph(10, edges);
  const PerfectMatching m = even_matching(g, 10);
  const AlternatingCycle c = around(g, m, 10);
  const auto naive = testing::naive_skips(g, m, c);
  ASSERT_EQ(naive.size(), 1u);
  const auto s = find_skip(g, m, c, WeightFilter::any());
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(testing::check_skip(g, m, c, *s), "");
  EXPECT_EQ(s->shortcut.length(), 8);
  // Drops red M edge 6-7 (-1) and adds red 1-5 (+1).
  EXPECT_EQ(s->weight, 2);
  EXPECT_EQ(s->weight, s->shortcut.weight - c.weight);
  EXPECT_EQ(*naive.begin(), (testing::ShortcutKey{testing::edge_set(s->shortcut.edges), 2}));
  EXPECT_FALSE(find_skip(g, m, c, WeightFilter::negative()).has_value());
}

TEST(FindSkip, ReturnsOnlyFilteredWeights) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = testing::random_cycle_instance(12, 1, 0.3, 0.5, false, seed);
    for (int w = -4; w <= 4; ++w) {
      const auto s = find_skip(inst.g, inst.m, inst.c, WeightFilter{w});
      if (s) EXPECT_EQ(s->weight, w);
    }
  }
}

TEST(EnumerateSkips, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int len = 6 + 2 * static_cast<int>(seed % 5);
    const auto inst = testing::random_cycle_instance(len, seed % 2, 0.25, 0.5, false, seed);
    std::set<testing::ShortcutKey> got;
    const auto skips = enumerate_skips(inst.g, inst.m, inst.c, WeightFilter::any());
    for (const auto& s : skips) {
      ASSERT_EQ(testing::check_skip(inst.g, inst.m, inst.c, s), "") << "seed " << seed;
      got.insert({testing::edge_set(s.shortcut.edges), s.weight});
    }
    EXPECT_EQ(got, testing::naive_skips(inst.g, inst.m, inst.c)) << "seed " << seed;
    const auto first = find_skip(inst.g, inst.m, inst.c, WeightFilter::any());
    ASSERT_EQ(first.has_value(), !skips.empty());
    if (first) EXPECT_EQ(first->shortcut, skips.front().shortcut);
  }
}

TEST(ApplySkip, ZeroSkipKeepsRedCount) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200 && seen < 10; ++seed) {
    const auto inst = testing::random_cycle_instance(12, 1, 0.3, 0.5, false, seed);
    const auto s = find_skip(inst.g, inst.m, inst.c, WeightFilter{0});
    if (!s) continue;
    ++seen;
    const CycleSet ctx = symmetric_difference(inst.g, inst.m, inst.m2);
    const auto [m2p, ctxp] = apply_skip(inst.g, inst.m, *s, ctx);
    EXPECT_EQ(m2p.red_count(), inst.m2.red_count());
    EXPECT_LT(ctxp.edge_count(), ctx.edge_count());
  }
  EXPECT_GT(seen, 0);
}

TEST(ApplySkip, NegativeOneSkipDropsRedCount) {
  int seen = 0;
  for (std::uint64_t seed = 0; seed < 200 && seen < 10; ++seed) {
    const auto inst = testing::random_cycle_instance(12, 1, 0.3, 0.5, false, seed);
    const auto s = find_skip(inst.g, inst.m, inst.c, WeightFilter{-1});
    if (!s) continue;
    ++seen;
    const CycleSet ctx = symmetric_difference(inst.g, inst.m, inst.m2);
    const auto [m2p, ctxp] = apply_skip(inst.g, inst.m, *s, ctx);
    EXPECT_EQ(m2p.red_count(), inst.m2.red_count() - 1);
  }
  EXPECT_GT(seen, 0);
}

TEST(ApplySkip, PostStateIsConsistent) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto inst = testing::random_cycle_instance(10, 2, 0.3, 0.5, false, seed);
    const CycleSet ctx = symmetric_difference(inst.g, inst.m, inst.m2);
    for (const auto& s : enumerate_skips(inst.g, inst.m, inst.c, WeightFilter::any())) {
      const auto [m2p, ctxp] = apply_skip(inst.g, inst.m, s, ctx);
      EXPECT_TRUE(is_perfect_matching(inst.g, m2p.edges()));
      EXPECT_EQ(m2p.red_count(), inst.m2.red_count() + s.weight);
      const CycleSet again = symmetric_difference(inst.g, inst.m, m2p);
      ASSERT_EQ(again.cycles.size(), ctxp.cycles.size());
      for (std::size_t i = 0; i < again.cycles.size(); ++i) {
        EXPECT_EQ(again.cycles[i], ctxp.cycles[i]);
      }
      EXPECT_EQ(again.total_weight, ctxp.total_weight);
    }
  }
}

TEST(ApplySkip, MismatchedContextThrows) {
  const auto a = testing::random_cycle_instance(10, 0, 0.5, 0.5, false, 3);
  const auto s = find_skip(a.g, a.m, a.c, WeightFilter::any());
  ASSERT_TRUE(s.has_value());
  EXPECT_THROW(apply_skip(a.g, a.m, *s, CycleSet{}), InputError);
}

TEST(Orient, DirectionRule) {
  // Sides: 0, 2 in A; 1, 3 in B.
  const ColoredGraph g = make_graph(4, {{0, 1, 'r'}, {1, 2, 'b'}, {2, 3, 'r'}, {0, 3, 'b'}},
                                    std::vector<Side>{Side::kA, Side::kB, Side::kA, Side::kB});
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  const DirectedView gm = orient(g, m);
  EXPECT_TRUE(gm.has_arc(0, 1));
  EXPECT_FALSE(gm.has_arc(1, 0));
  EXPECT_TRUE(gm.has_arc(1, 2));
  EXPECT_TRUE(gm.has_arc(3, 0));
  EXPECT_EQ(gm.arc(*g.find_edge(0, 3)), (Arc{3, 0}));
  const auto c = make_alternating_cycle(g, m, std::vector<Vertex>{0, 1, 2, 3});
  EXPECT_EQ(gm.directed_order(c), (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(Orient, RequiresBipartition) {
  const ColoredGraph g = testing::c4();
  const PerfectMatching m(g, {{0, 1}, {2, 3}});
  EXPECT_THROW(orient(g, m), InputError);
}

TEST(Orient, AlternatingCyclesAreDirected) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const auto inst = testing::random_cycle_instance(8 + 2 * (seed % 4), 1, 0.3, 0.5, true, seed);
    const DirectedView gm(inst.g, inst.m);
    const auto order = gm.directed_order(inst.c);
    for (std::size_t i = 0; i < order.size(); ++i) {
      EXPECT_TRUE(gm.has_arc(order[i], order[(i + 1) % order.size()]));
    }
    for (int id = 0; id < inst.g.edge_count(); ++id) {
      const Arc a = gm.arc(id);
      const bool in_m = inst.m.contains(Edge(a.tail, a.head));
      EXPECT_EQ(inst.g.side(a.tail), in_m ? Side::kA : Side::kB);
    }
  }
}

TEST(FindBiskip, ChordlessCycleHasNone) {
  const auto inst = testing::random_cycle_instance(12, 0, 0.0, 0.5, true, 9);
  EXPECT_FALSE(find_biskip(DirectedView(inst.g, inst.m), inst.c, WeightFilter::any()));
}

TEST(FindBiskip, ConstructedSplit) {
  // 10-cycle 0..9 with even vertices in A and M = {01, 23, 45, 67, 89}.
  // M edges point A->B and the rest B->A, so C runs 0->1->...->9->0. Arcs
  // 3->0 and 7->4 split off 0-1-2-3 and 4-5-6-7.
  std::vector<std::tuple<int, int, char>> edges;
  for (int i = 0; i < 10; ++i) edges.emplace_back(i, (i + 1) % 10, i == 1 || i == 5 ? 'r' : 'b');
  edges.emplace_back(0, 3, 'r');
  edges.emplace_back(4, 7, 'b');
  std::vector<Side> sides(10);
  for (int i = 0; i < 10; ++i) sides[i] = i % 2 == 0 ? Side::kA : Side::kB;
  const ColoredGraph g = make_graph(10, edges, sides);
  const PerfectMatching m = even_matching(g, 10);
  const AlternatingCycle c = around(g, m, 10);
  const DirectedView gm(g, m);
  const auto s = find_biskip(gm, c, WeightFilter::any());
  ASSERT_TRUE(s.has_value());
  EXPECT_EQ(testing::check_biskip(g, m, c, *s), "");
  EXPECT_EQ(s->first.length() + s->second.length(), 8);
  // Only the new red arc 3->0 changes the weight.
  EXPECT_EQ(s->weight, 1);
  EXPECT_EQ(testing::naive_biskips(g, m, c).size(), 1u);
  EXPECT_FALSE(find_biskip(gm, c, WeightFilter::negative()).has_value());
}

TEST(EnumerateBiskips, MatchesNaiveEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const int len = 8 + 2 * static_cast<int>(seed % 4);
    const auto inst = testing::random_cycle_instance(len, seed % 2, 0.3, 0.5, true, seed);
    const DirectedView gm(inst.g, inst.m);
    std::set<testing::SplitKey> got;
    const auto all = enumerate_biskips(gm, inst.c, WeightFilter::any());
    for (const auto& s : all) {
      ASSERT_EQ(testing::check_biskip(inst.g, inst.m, inst.c, s), "") << "seed " << seed;
      auto c1 = testing::edge_set(s.first.edges), c2 = testing::edge_set(s.second.edges);
      if (c2 < c1) std::swap(c1, c2);
      got.insert({c1, c2, s.weight});
    }
    EXPECT_EQ(got, testing::naive_biskips(inst.g, inst.m, inst.c)) << "seed " << seed;
    const auto first = find_biskip(gm, inst.c, WeightFilter::any());
    ASSERT_EQ(first.has_value(), !all.empty());
  }
}

TEST(ApplyBiskip, PreservesMatchingAndShiftsRedCount) {
  int applied = 0;
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto inst = testing::random_cycle_instance(12, 1, 0.3, 0.5, true, seed);
    const DirectedView gm(inst.g, inst.m);
    const CycleSet ctx = symmetric_difference(inst.g, inst.m, inst.m2);
    for (const auto& s : enumerate_biskips(gm, inst.c, WeightFilter::any())) {
      const auto [m2p, ctxp] = apply_biskip(inst.g, inst.m, s, ctx);
      ++applied;
      EXPECT_TRUE(is_perfect_matching(inst.g, m2p.edges()));
      EXPECT_EQ(m2p.red_count(), inst.m2.red_count() + s.weight);
      EXPECT_LT(ctxp.edge_count(), ctx.edge_count());
      EXPECT_EQ(ctxp.cycles.size(), ctx.cycles.size() + 1);
      const CycleSet again = symmetric_difference(inst.g, inst.m, m2p);
      EXPECT_EQ(again.total_weight, ctxp.total_weight);
      EXPECT_EQ(again.edge_count(), ctxp.edge_count());
    }
  }
  EXPECT_GT(applied, 0);
}

}  // namespace
}  // namespace exmatch
