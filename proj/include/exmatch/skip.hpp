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

// Structural operations on a single alternating cycle C of M xor M2:
// edge pairs, bundles, sign-alternating pieces, skips and biskips.
//
// Skip: crossing chords e1 = (v1, v2), e2 = (v1', v2') of C with v1, v1',
// v2, v2' in this order along C. Removing C[v1, v1'] and C[v2, v2'] and
// adding the chords gives a shorter alternating cycle C'.
//
// Biskip: on a bipartite graph, C is traversed in the direction of G_M
// (matching edges from A to B, the rest from B to A). Arcs a1 = (v1, v2),
// a2 = (v1', v2') with v1, v2', v1', v2 in this order split C into the two
// directed cycles C[v2, v1] + a1 and C[v2', v1'] + a2.
//
// Weights of both are taken w.r.t. the reference matching M and must lie in
// [-4, 4].

#ifndef EXMATCH_SKIP_HPP
#define EXMATCH_SKIP_HPP

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "exmatch/graph.hpp"

namespace exmatch {

struct EdgePair {
  Edge matching_edge;
  Edge nonmatching_edge;
  int label = 0;     // w(matching_edge) + w(nonmatching_edge)
  int position = 0;  // index of matching_edge in AlternatingCycle::edges

  friend bool operator==(const EdgePair&, const EdgePair&) = default;
};

/// Two same-sign non-zero pairs with only 0 pairs between them.
struct Bundle {
  int sign = 0;
  int first_pair = 0;   // indices into the pair sequence
  int second_pair = 0;
  std::vector<EdgePair> path;  // first..second inclusive

  int weight() const { return 2 * sign; }
};

/// A run of pairs containing no bundle, left over once the bundles' non-zero
/// pairs are deleted.
struct SignAlternatingPath {
  std::vector<EdgePair> pairs;
  int weight = 0;
  int nonzero_count = 0;
};

/// Set of admissible skip weights, a subset of [-4, 4].
class WeightFilter {
 public:
  WeightFilter() = default;
  WeightFilter(std::initializer_list<int> weights);

  static WeightFilter negative() { return {-1, -2, -3, -4}; }
  static WeightFilter positive() { return {1, 2, 3, 4}; }
  static WeightFilter any() { return {-4, -3, -2, -1, 0, 1, 2, 3, 4}; }

  /// Filter guaranteed to be hit by a cycle carrying enough disjoint
  /// sub-paths of weight x, for x in {-1, 0, 1, 2}.
  static WeightFilter for_path_weight(int x);

  bool contains(int w) const;
  bool empty() const { return mask_ == 0; }
  WeightFilter operator|(const WeightFilter& other) const;
  std::vector<int> values() const;

 private:
  std::uint16_t mask_ = 0;
};

struct Skip {
  Edge e1;
  Edge e2;
  Vertex v1 = 0, v1_prime = 0, v2 = 0, v2_prime = 0;
  int weight = 0;
  AlternatingCycle cycle;     // C
  AlternatingCycle shortcut;  // C'
};

struct Arc {
  Vertex tail = 0;
  Vertex head = 0;

  friend bool operator==(const Arc&, const Arc&) = default;
};

struct Biskip {
  Arc a1;
  Arc a2;
  Vertex v1 = 0, v2 = 0, v1_prime = 0, v2_prime = 0;
  int weight = 0;
  AlternatingCycle cycle;  // C
  AlternatingCycle first;  // C[v2, v1] + a1
  AlternatingCycle second; // C[v2', v1'] + a2
};

/// The orientation G_M of a bipartite graph.
class DirectedView {
 public:
  /// Throws InputError if g has no bipartition.
  DirectedView(const ColoredGraph& g, const PerfectMatching& m);

  const ColoredGraph& graph() const { return *graph_; }
  const PerfectMatching& matching() const { return *matching_; }

  /// Orientation of edge `id`.
  Arc arc(int id) const;
  bool has_arc(Vertex tail, Vertex head) const;
  std::span<const Vertex> out_neighbors(Vertex v) const;

  /// Vertices of C listed in the direction of its arcs, starting at
  /// C.vertices[0].
  std::vector<Vertex> directed_order(const AlternatingCycle& c) const;

 private:
  const ColoredGraph* graph_;
  const PerfectMatching* matching_;
  std::vector<Vertex> tail_;  // per edge id
  std::vector<int> out_offsets_;
  std::vector<Vertex> out_;
};

inline DirectedView orient(const ColoredGraph& g, const PerfectMatching& m) {
  return DirectedView(g, m);
}

/// |C| / 2 pairs starting at the first matching edge of C's canonical
/// orientation. Throws InputError if C does not alternate w.r.t. m.
std::vector<EdgePair> pair_decomposition(const ColoredGraph& g, const PerfectMatching& m,
                                         const AlternatingCycle& c);

/// Maximum set of disjoint bundles along the pair sequence, read as a path.
std::vector<Bundle> find_bundles(std::span<const EdgePair> pairs);

/// Pieces left after deleting the non-zero pairs of find_bundles(pairs).
std::vector<SignAlternatingPath> find_saps(std::span<const EdgePair> pairs);

/// First skip of C whose weight lies in `filter`. Chord pairs are scanned in
/// lexicographic edge order; for each crossing pair both ways of choosing
/// the removed paths are tried.
std::optional<Skip> find_skip(const ColoredGraph& g, const PerfectMatching& m,
                              const AlternatingCycle& c, const WeightFilter& filter);

/// All skips of C, in the order find_skip scans them.
std::vector<Skip> enumerate_skips(const ColoredGraph& g, const PerfectMatching& m,
                                  const AlternatingCycle& c, const WeightFilter& filter);

std::optional<Biskip> find_biskip(const DirectedView& gm, const AlternatingCycle& c,
                                  const WeightFilter& filter);

std::vector<Biskip> enumerate_biskips(const DirectedView& gm, const AlternatingCycle& c,
                                      const WeightFilter& filter);

/// Uses `s` on `context` = M xor M2. Returns the new M2 and the new context.
/// Throws InputError if the skip's cycle is not in the context.
std::pair<PerfectMatching, CycleSet> apply_skip(const ColoredGraph& g, const PerfectMatching& m,
                                                const Skip& s, const CycleSet& context);

std::pair<PerfectMatching, CycleSet> apply_biskip(const ColoredGraph& g,
                                                  const PerfectMatching& m, const Biskip& s,
                                                  const CycleSet& context);

}  // namespace exmatch

#endif  // EXMATCH_SKIP_HPP
