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

#include "exmatch/graph.hpp"

#include <numeric>

#include "exmatch/errors.hpp"

namespace exmatch {

std::string_view to_string(Color c) {
  return c == Color::kRed ? "red" : "blue";
}

Color other(Color c) { return c == Color::kRed ? Color::kBlue : Color::kRed; }

std::string to_string(const Edge& e) {
  return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

ColoredGraph::ColoredGraph(int vertex_count, std::vector<ColoredEdge> edges,
                           std::optional<std::vector<Side>> sides)
    : vertex_count_(vertex_count), edges_(std::move(edges)), sides_(std::move(sides)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  if (sides_ && static_cast<int>(sides_->size()) != vertex_count_) {
    throw InputError("bipartition must assign a side to every vertex");
  }
  for (auto& ce : edges_) {
    // Re-canonicalize in case the caller filled the fields directly.
    ce.edge = Edge(ce.edge.u, ce.edge.v);
    const Edge& e = ce.edge;
    if (e.u < 0 || e.v >= vertex_count_) {
      throw InputError("edge " + to_string(e) + ": vertex out of range");
    }
    if (e.u == e.v) {
      throw InputError("edge " + to_string(e) + ": self-loop");
    }
    if (sides_ && (*sides_)[e.u] == (*sides_)[e.v]) {
      throw InputError("edge " + to_string(e) + ": bipartition violation");
    }
  }
  std::sort(edges_.begin(), edges_.end(),
            [](const ColoredEdge& a, const ColoredEdge& b) { return a.edge < b.edge; });
  for (std::size_t i = 1; i < edges_.size(); ++i) {
    if (edges_[i].edge == edges_[i - 1].edge) {
      throw InputError("edge " + to_string(edges_[i].edge) + ": duplicate edge");
    }
  }

  std::vector<int> degree(vertex_count_, 0);
  for (const auto& ce : edges_) {
    ++degree[ce.edge.u];
    ++degree[ce.edge.v];
  }
  offsets_.assign(vertex_count_ + 1, 0);
  for (int v = 0; v < vertex_count_; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adjacency_.resize(offsets_.back());
  adjacency_edges_.resize(offsets_.back());
  std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
  for (int id = 0; id < edge_count(); ++id) {
    const Edge& e = edges_[id].edge;
    adjacency_[fill[e.u]] = e.v;
    adjacency_edges_[fill[e.u]++] = id;
    adjacency_[fill[e.v]] = e.u;
    adjacency_edges_[fill[e.v]++] = id;
  }
  for (int v = 0; v < vertex_count_; ++v) {
    const int lo = offsets_[v];
    const int hi = offsets_[v + 1];
    std::vector<std::pair<Vertex, int>> slots;
    slots.reserve(hi - lo);
    for (int i = lo; i < hi; ++i) slots.emplace_back(adjacency_[i], adjacency_edges_[i]);
    std::sort(slots.begin(), slots.end());
    for (int i = lo; i < hi; ++i) {
      adjacency_[i] = slots[i - lo].first;
      adjacency_edges_[i] = slots[i - lo].second;
    }
  }
}

std::optional<int> ColoredGraph::find_edge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_ || a == b) {
    return std::nullopt;
  }
  const auto nb = neighbors(a);
  const auto it = std::lower_bound(nb.begin(), nb.end(), b);
  if (it == nb.end() || *it != b) return std::nullopt;
  return adjacency_edges_[offsets_[a] + static_cast<int>(it - nb.begin())];
}

std::optional<Color> ColoredGraph::color(Vertex a, Vertex b) const {
  const auto id = find_edge(a, b);
  if (!id) return std::nullopt;
  return edges_[*id].color;
}

std::span<const Vertex> ColoredGraph::neighbors(Vertex v) const {
  return std::span<const Vertex>(adjacency_).subspan(offsets_[v],
                                                     offsets_[v + 1] - offsets_[v]);
}

std::span<const int> ColoredGraph::incident_edges(Vertex v) const {
  return std::span<const int>(adjacency_edges_)
      .subspan(offsets_[v], offsets_[v + 1] - offsets_[v]);
}

std::vector<Vertex> ColoredGraph::side_vertices(Side s) const {
  std::vector<Vertex> out;
  if (!sides_) return out;
  for (int v = 0; v < vertex_count_; ++v) {
    if ((*sides_)[v] == s) out.push_back(v);
  }
  return out;
}

int ColoredGraph::count(Color c) const {
  return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                        [c](const ColoredEdge& e) { return e.color == c; }));
}

bool is_perfect_matching(const ColoredGraph& g, std::span<const Edge> edges) {
  const int n = g.vertex_count();
  if (n % 2 != 0 || static_cast<int>(edges.size()) * 2 != n) return false;
  std::vector<char> covered(n, 0);
  for (const Edge& raw : edges) {
    const Edge e(raw.u, raw.v);
    if (!g.has_edge(e.u, e.v)) return false;
    if (covered[e.u] || covered[e.v]) return false;
    covered[e.u] = covered[e.v] = 1;
  }
  return true;
}

int red_count(const ColoredGraph& g, std::span<const Edge> edges) {
  int r = 0;
  for (const Edge& e : edges) {
    if (g.color(e.u, e.v) == Color::kRed) ++r;
  }
  return r;
}

PerfectMatching::PerfectMatching(const ColoredGraph& g, std::vector<Edge> edges) {
  for (auto& e : edges) e = Edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  if (!is_perfect_matching(g, edges)) {
    throw InputError("edge set is not a perfect matching of the graph");
  }
  mate_.assign(g.vertex_count(), -1);
  for (const Edge& e : edges) {
    mate_[e.u] = e.v;
    mate_[e.v] = e.u;
  }
  red_count_ = exmatch::red_count(g, edges);
  edges_ = std::move(edges);
}

bool PerfectMatching::contains(const Edge& e) const {
  const Edge c(e.u, e.v);
  return c.u >= 0 && c.u < static_cast<int>(mate_.size()) && mate_[c.u] == c.v;
}

int edge_weight(const ColoredGraph& g, const PerfectMatching& m, const Edge& e) {
  const auto c = g.color(e.u, e.v);
  if (!c) throw InputError("edge " + to_string(Edge(e.u, e.v)) + " is not in the graph");
  if (*c == Color::kBlue) return 0;
  return m.contains(e) ? -1 : 1;
}

AlternatingCycle make_alternating_cycle(const ColoredGraph& g,
                                        const PerfectMatching& m,
                                        std::span<const Vertex> cyclic_vertices) {
  const int len = static_cast<int>(cyclic_vertices.size());
  if (len < 4 || len % 2 != 0) {
    throw InputError("alternating cycle must have even length >= 4");
  }
  std::vector<char> seen(g.vertex_count(), 0);
  for (Vertex v : cyclic_vertices) {
    if (v < 0 || v >= g.vertex_count()) throw InputError("cycle vertex out of range");
    if (seen[v]) throw InputError("cycle repeats vertex " + std::to_string(v));
    seen[v] = 1;
  }
  const int start = static_cast<int>(
      std::min_element(cyclic_vertices.begin(), cyclic_vertices.end()) -
      cyclic_vertices.begin());
  const Vertex next = cyclic_vertices[(start + 1) % len];
  const Vertex prev = cyclic_vertices[(start + len - 1) % len];
  const int step = next < prev ? 1 : len - 1;

  AlternatingCycle c;
  c.vertices.reserve(len);
  for (int i = 0, p = start; i < len; ++i, p = (p + step) % len) {
    c.vertices.push_back(cyclic_vertices[p]);
  }
  c.edges.reserve(len);
  c.in_reference.reserve(len);
  for (int i = 0; i < len; ++i) {
    const Edge e(c.vertices[i], c.vertices[(i + 1) % len]);
    if (!g.has_edge(e.u, e.v)) {
      throw InputError("cycle edge " + to_string(e) + " is not in the graph");
    }
    c.edges.push_back(e);
    c.in_reference.push_back(m.contains(e));
    c.weight += edge_weight(g, m, e);
  }
  for (int i = 0; i < len; ++i) {
    if (c.in_reference[i] == c.in_reference[(i + 1) % len]) {
      throw InputError("cycle does not alternate at vertex " +
                       std::to_string(c.vertices[(i + 1) % len]));
    }
  }
  return c;
}

int CycleSet::edge_count() const {
  int total = 0;
  for (const auto& c : cycles) total += c.length();
  return total;
}

void CycleSet::normalize() {
  std::sort(cycles.begin(), cycles.end(),
            [](const AlternatingCycle& a, const AlternatingCycle& b) {
              return a.min_vertex() < b.min_vertex();
            });
  total_weight = 0;
  for (const auto& c : cycles) total_weight += c.weight;
}

CycleSet symmetric_difference(const ColoredGraph& g, const PerfectMatching& m,
                              const PerfectMatching& m2) {
  const int n = g.vertex_count();
  if (m.size() * 2 != n || m2.size() * 2 != n) {
    throw InputError("matchings do not belong to this graph");
  }
  CycleSet out;
  std::vector<char> visited(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (visited[s] || m.mate(s) == m2.mate(s)) continue;
    // Walk alternately along m and m2 until we return to s.
    std::vector<Vertex> walk;
    Vertex v = s;
    bool use_first = true;
    do {
      visited[v] = 1;
      walk.push_back(v);
      v = use_first ? m.mate(v) : m2.mate(v);
      use_first = !use_first;
    } while (v != s);
    out.cycles.push_back(make_alternating_cycle(g, m, walk));
  }
  out.normalize();
  return out;
}

PerfectMatching apply_cycles(const ColoredGraph& g, const PerfectMatching& m,
                             const CycleSet& cycles) {
  const int n = g.vertex_count();
  std::vector<Vertex> mate(n);
  for (Vertex v = 0; v < n; ++v) mate[v] = m.mate(v);
  std::vector<char> touched(n, 0);
  for (const auto& c : cycles.cycles) {
    const int len = c.length();
    for (int i = 0; i < len; ++i) {
      if (m.contains(c.edges[i]) == m.contains(c.edges[(i + 1) % len])) {
        throw InputError("cycle does not alternate with respect to the matching");
      }
    }
    for (Vertex v : c.vertices) {
      if (touched[v]) throw InputError("cycles in a cycle set must be vertex-disjoint");
      touched[v] = 1;
    }
    for (int i = 0; i < len; ++i) {
      const Edge& e = c.edges[i];
      if (!m.contains(e)) {
        mate[e.u] = e.v;
        mate[e.v] = e.u;
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(n / 2);
  for (Vertex v = 0; v < n; ++v) {
    if (v < mate[v]) edges.emplace_back(v, mate[v]);
  }
  return PerfectMatching(g, std::move(edges));
}

}  // namespace exmatch
