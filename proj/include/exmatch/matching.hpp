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

// Exact matching engines.
//
//  * BlossomMatcher: maximum-weight matching on general graphs with integer
//    weights (primal-dual blossom algorithm, O(n^3)). In max-cardinality mode
//    it returns a maximum-weight matching among the maximum-cardinality ones.
//  * HungarianMatcher: minimum-cost perfect assignment for bipartite graphs.
//  * CardinalityMatcher: maximum-cardinality matching (Edmonds, O(n^3)).
//
// Each engine keeps scratch buffers between calls; use one instance per
// thread.

#ifndef EXMATCH_MATCHING_HPP
#define EXMATCH_MATCHING_HPP

#include <optional>
#include <span>
#include <vector>

#include "exmatch/graph.hpp"

namespace exmatch {

struct WeightedEdge {
  Vertex u = 0;
  Vertex v = 0;
  long long weight = 0;
};

/// Weight per edge id of a ColoredGraph.
using WeightAssignment = std::vector<int>;

class BlossomMatcher {
 public:
  /// Returns mate[v] (or -1) for a maximum-weight matching.
  std::vector<Vertex> solve(int vertex_count, std::span<const WeightedEdge> edges,
                            bool max_cardinality);

 private:
  long long slack(int k) const;
  void blossom_leaves(int b, std::vector<int>& out) const;
  void assign_label(int w, int t, int p);
  int scan_blossom(int v, int w);
  void add_blossom(int base, int k);
  void expand_blossom(int b, bool endstage);
  void augment_blossom(int b, int v);
  void augment_matching(int k);

  int nvertex_ = 0;
  int nedge_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<int> endpoint_;
  std::vector<std::vector<int>> neighbend_;
  std::vector<int> mate_;
  std::vector<int> label_;
  std::vector<int> labelend_;
  std::vector<int> inblossom_;
  std::vector<int> blossomparent_;
  std::vector<std::vector<int>> blossomchilds_;
  std::vector<int> blossombase_;
  std::vector<std::vector<int>> blossomendps_;
  std::vector<int> bestedge_;
  std::vector<std::vector<int>> blossombestedges_;
  std::vector<char> has_bestedges_;
  std::vector<int> unusedblossoms_;
  std::vector<long long> dualvar_;
  std::vector<char> allowedge_;
  std::vector<int> queue_;
};

class HungarianMatcher {
 public:
  /// Minimum-cost perfect matching between `left[i]` and `right[j]` using the
  /// given edges (each joins a left and a right vertex). Returns mate[] over
  /// all vertex ids < vertex_count, or nullopt if no perfect matching exists.
  std::optional<std::vector<Vertex>> solve_min_cost(int vertex_count,
                                                    std::span<const Vertex> left,
                                                    std::span<const Vertex> right,
                                                    std::span<const WeightedEdge> edges);

 private:
  std::vector<long long> cost_;
  std::vector<long long> u_, v_, minv_;
  std::vector<int> p_, way_;
  std::vector<char> used_, real_;
};

class CardinalityMatcher {
 public:
  /// mate[v] (or -1) of a maximum-cardinality matching.
  std::vector<Vertex> solve(int vertex_count, std::span<const Edge> edges);

  /// True iff the graph has a perfect matching; fills `out` with its edges.
  bool perfect_matching(int vertex_count, std::span<const Edge> edges, std::vector<Edge>* out);

 private:
  int find_path(int root);
  int lca(int a, int b);
  void mark_path(int v, int b, int child);

  int n_ = 0;
  std::vector<std::vector<int>> adj_;
  std::vector<int> match_, parent_, base_;
  std::vector<char> used_, blossom_, lca_mark_;
  std::vector<int> queue_;
};

/// Red edges get `red_weight`, blue edges 0.
WeightAssignment red_weights(const ColoredGraph& g, int red_weight);

long long matching_weight(const ColoredGraph& g, std::span<const int> weights,
                          const PerfectMatching& m);

/// Exact maximum-weight perfect matching, or nullopt if g has none. Uses the
/// Hungarian engine when g carries a bipartition, the blossom engine
/// otherwise.
std::optional<PerfectMatching> max_weight_perfect_matching(const ColoredGraph& g,
                                                           std::span<const int> weights);

/// Forces the general (blossom) engine.
std::optional<PerfectMatching> max_weight_perfect_matching_general(const ColoredGraph& g,
                                                                   std::span<const int> weights);

/// Forces the bipartite (Hungarian) engine. Throws InputError without a
/// bipartition.
std::optional<PerfectMatching> max_weight_perfect_matching_bipartite(
    const ColoredGraph& g, std::span<const int> weights);

/// Perfect matchings with the fewest / most red edges.
std::optional<PerfectMatching> min_red_pm(const ColoredGraph& g);
std::optional<PerfectMatching> max_red_pm(const ColoredGraph& g);

}  // namespace exmatch

#endif  // EXMATCH_MATCHING_HPP
