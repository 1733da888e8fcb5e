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

#include "exmatch/reductions.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>

#include "exmatch/errors.hpp"

namespace exmatch {

ColoredGraph lift_to_dense(const ColoredGraph& g) {
  const int n = g.vertex_count();
  const Vertex u = n;
  const Vertex v = n + 1;
  std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
  edges.push_back({Edge(u, v), Color::kBlue});
  for (Vertex x = 0; x < n; ++x) edges.push_back({Edge(u, x), Color::kBlue});
  std::optional<std::vector<Side>> sides;
  return ColoredGraph(n + 2, std::move(edges), sides);
}

ColoredGraph lift_to_dense_bipartite(const ColoredGraph& g) {
  if (!g.has_bipartition()) throw InputError("bipartite lift requires a bipartition");
  const int n = g.vertex_count();
  const Vertex u = n, u2 = n + 1, v = n + 2, v2 = n + 3;
  std::vector<Side> sides = *g.bipartition();
  sides.insert(sides.end(), {Side::kA, Side::kA, Side::kB, Side::kB});
  std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
  for (Vertex x = 0; x < n; ++x) {
    if (sides[x] == Side::kB) {
      edges.push_back({Edge(u, x), Color::kBlue});
    } else {
      edges.push_back({Edge(v, x), Color::kBlue});
    }
  }
  edges.push_back({Edge(u, v2), Color::kBlue});
  edges.push_back({Edge(v, u2), Color::kBlue});
  edges.push_back({Edge(u, v), Color::kBlue});
  return ColoredGraph(n + 4, std::move(edges), std::move(sides));
}

std::vector<Edge> forced_edges(const ColoredGraph& original, bool bipartite) {
  const int n = original.vertex_count();
  if (!bipartite) return {Edge(n, n + 1)};
  return {Edge(n, n + 3), Edge(n + 2, n + 1)};
}

PerfectMatching pullback_matching(const ColoredGraph& original, const ColoredGraph& lifted,
                                  const PerfectMatching& lifted_pm) {
  const int extra = lifted.vertex_count() - original.vertex_count();
  if (extra != 2 && extra != 4) throw InputError("graph is not a lift of the original");
  if (!is_perfect_matching(lifted, lifted_pm.edges())) {
    throw InputError("matching is not a perfect matching of the lifted graph");
  }
  const auto forced = forced_edges(original, extra == 4);
  for (const Edge& e : forced) {
    if (!lifted_pm.contains(e)) {
      throw InputError("lifted matching is missing forced edge " + to_string(e));
    }
  }
  std::vector<Edge> kept;
  for (const Edge& e : lifted_pm.edges()) {
    if (std::find(forced.begin(), forced.end(), e) == forced.end()) kept.push_back(e);
  }
  return PerfectMatching(original, std::move(kept));
}

int distance_independence_number(const ColoredGraph& g, int d, int max_n) {
  const int n = g.vertex_count();
  if (n > max_n || n > 63) {
    throw OracleCapError("instance too large for distance-d oracle: n=" + std::to_string(n));
  }
  if (n == 0) return 0;
  constexpr int kInf = std::numeric_limits<int>::max();
  // conflict[x]: vertices closer than d to x.
  std::vector<std::uint64_t> conflict(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    std::vector<int> dist(n, kInf);
    std::queue<Vertex> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const Vertex x = q.front();
      q.pop();
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kInf) {
          dist[y] = dist[x] + 1;
          q.push(y);
        }
      }
    }
    for (Vertex t = 0; t < n; ++t) {
      if (t != s && dist[t] < d) conflict[s] |= 1ULL << t;
    }
  }
  int best = 0;
  const std::uint64_t all = (1ULL << n) - 1;
  // Exhaustive include/exclude search over the remaining candidates.
  auto rec = [&](auto&& self, std::uint64_t candidates, int size) -> void {
    if (size + std::popcount(candidates) <= best) return;
    if (candidates == 0) {
      best = std::max(best, size);
      return;
    }
    const int x = std::countr_zero(candidates);
    const std::uint64_t rest = candidates & ~(1ULL << x);
    self(self, rest & ~conflict[x], size + 1);
    self(self, rest, size);
  };
  rec(rec, all, 0);
  return best;
}

}  // namespace exmatch
