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

// Red/blue edge-colored graphs, perfect matchings, and the alternating-cycle
// view of the symmetric difference of two perfect matchings.
//
// Every edge e gets a weight relative to a reference perfect matching M:
//
//   w_M(e) =  0  if e is blue,
//            -1  if e is red and e in M,
//            +1  if e is red and e not in M.
//
// With these weights r(M') = r(M) + w_M(M xor M') for any two perfect
// matchings M, M', where r counts red edges.

#ifndef EXMATCH_GRAPH_HPP
#define EXMATCH_GRAPH_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace exmatch {

using Vertex = int;

enum class Color : std::uint8_t { kBlue = 0, kRed = 1 };
enum class Side : std::uint8_t { kA = 0, kB = 1 };

std::string_view to_string(Color c);
Color other(Color c);

/// Undirected edge stored in canonical (min, max) form.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return x == u || x == v; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }
  constexpr bool shares_vertex(const Edge& e) const {
    return touches(e.u) || touches(e.v);
  }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

std::string to_string(const Edge& e);

struct ColoredEdge {
  Edge edge;
  Color color = Color::kBlue;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple undirected graph with a color per edge and an optional bipartition.
///
/// Immutable after construction. Edges are kept sorted, so edge ids are the
/// positions in lexicographic edge order.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  /// Throws InputError on out-of-range endpoints, self-loops, duplicate edges,
  /// or an edge inside one side of the bipartition.
  ColoredGraph(int vertex_count, std::vector<ColoredEdge> edges,
               std::optional<std::vector<Side>> sides = std::nullopt);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const ColoredEdge> edges() const { return edges_; }
  const ColoredEdge& edge(int id) const { return edges_[id]; }

  std::optional<int> find_edge(Vertex a, Vertex b) const;
  bool has_edge(Vertex a, Vertex b) const { return find_edge(a, b).has_value(); }
  std::optional<Color> color(Vertex a, Vertex b) const;

  /// Sorted neighbor list; incident_edges(v)[i] is the id of (v, neighbors(v)[i]).
  std::span<const Vertex> neighbors(Vertex v) const;
  std::span<const int> incident_edges(Vertex v) const;

  bool has_bipartition() const { return sides_.has_value(); }
  const std::optional<std::vector<Side>>& bipartition() const { return sides_; }
  Side side(Vertex v) const { return (*sides_)[v]; }
  std::vector<Vertex> side_vertices(Side s) const;

  int count(Color c) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_ &&
           a.sides_ == b.sides_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<ColoredEdge> edges_;
  std::optional<std::vector<Side>> sides_;
  std::vector<int> offsets_;          // CSR offsets, size n + 1
  std::vector<Vertex> adjacency_;     // neighbor per slot, sorted per vertex
  std::vector<int> adjacency_edges_;  // edge id per slot
};

bool is_perfect_matching(const ColoredGraph& g, std::span<const Edge> edges);
int red_count(const ColoredGraph& g, std::span<const Edge> edges);

/// A perfect matching of a specific graph, valid by construction.
class PerfectMatching {
 public:
  PerfectMatching() = default;

  /// Throws InputError if `edges` is not a perfect matching of `g`.
  PerfectMatching(const ColoredGraph& g, std::vector<Edge> edges);

  std::span<const Edge> edges() const { return edges_; }
  int size() const { return static_cast<int>(edges_.size()); }
  int red_count() const { return red_count_; }
  Vertex mate(Vertex v) const { return mate_[v]; }
  bool contains(const Edge& e) const;

  friend bool operator==(const PerfectMatching& a, const PerfectMatching& b) {
    return a.edges_ == b.edges_;
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Vertex> mate_;
  int red_count_ = 0;
};

/// w_M(e) in {-1, 0, +1}. Throws InputError if e is not an edge of g.
int edge_weight(const ColoredGraph& g, const PerfectMatching& m, const Edge& e);

/// A cycle alternating between edges of a reference matching M and edges
/// outside M.
///
/// Canonical orientation: vertices[0] is the smallest vertex and vertices[1]
/// the smaller of its two cycle neighbors. edges[i] joins vertices[i] and
/// vertices[i + 1] (cyclically).
struct AlternatingCycle {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<bool> in_reference;  // edges[i] belongs to M
  int weight = 0;                  // w_M(C)

  int length() const { return static_cast<int>(edges.size()); }
  Vertex min_vertex() const { return vertices.front(); }

  friend bool operator==(const AlternatingCycle& a, const AlternatingCycle& b) {
    return a.vertices == b.vertices;
  }
};

/// Builds the canonical alternating cycle through `cyclic_vertices` (in either
/// direction, from any start). Throws InputError unless the sequence is a
/// simple even cycle of length >= 4 in g whose edges alternate w.r.t. m.
AlternatingCycle make_alternating_cycle(const ColoredGraph& g,
                                        const PerfectMatching& m,
                                        std::span<const Vertex> cyclic_vertices);

struct CycleSet {
  std::vector<AlternatingCycle> cycles;  // sorted by min_vertex
  int total_weight = 0;

  int edge_count() const;
  bool empty() const { return cycles.empty(); }

  /// Sorts cycles and recomputes total_weight.
  void normalize();
};

/// Cycle decomposition of M xor M2, weights taken w.r.t. `m`.
CycleSet symmetric_difference(const ColoredGraph& g, const PerfectMatching& m,
                              const PerfectMatching& m2);

/// M xor (union of the cycles). Throws InputError if a cycle does not
/// alternate w.r.t. m or two cycles overlap.
PerfectMatching apply_cycles(const ColoredGraph& g, const PerfectMatching& m,
                             const CycleSet& cycles);

}  // namespace exmatch

#endif  // EXMATCH_GRAPH_HPP
