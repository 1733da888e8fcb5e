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

#include "exmatch/skip.hpp"

#include <algorithm>
#include <array>

#include "exmatch/errors.hpp"

namespace exmatch {

WeightFilter::WeightFilter(std::initializer_list<int> weights) {
  for (int w : weights) {
    if (w < -4 || w > 4) throw InputError("skip weight filter values must lie in [-4, 4]");
    mask_ |= static_cast<std::uint16_t>(1u << (w + 4));
  }
}

WeightFilter WeightFilter::for_path_weight(int x) {
  switch (x) {
    case 2:
      return negative();
    case 1:
      return negative() | WeightFilter{0};
    case 0:
      return positive() | WeightFilter{0};
    case -1:
      return positive();
    default:
      throw InputError("path weight must be one of -1, 0, 1, 2");
  }
}

bool WeightFilter::contains(int w) const {
  return w >= -4 && w <= 4 && (mask_ >> (w + 4)) & 1u;
}

WeightFilter WeightFilter::operator|(const WeightFilter& other) const {
  WeightFilter out;
  out.mask_ = mask_ | other.mask_;
  return out;
}

std::vector<int> WeightFilter::values() const {
  std::vector<int> out;
  for (int w = -4; w <= 4; ++w) {
    if (contains(w)) out.push_back(w);
  }
  return out;
}

namespace {

// Per-cycle lookup tables shared by the skip and biskip scans. `order` is the
// traversal used for positions; edge i joins order[i] and order[i + 1].
struct CycleIndex {
  std::vector<Vertex> order;
  std::vector<int> pos;          // per vertex, -1 off the cycle
  std::vector<char> matching;    // edge i is in M
  std::vector<int> prefix;       // prefix[i] = weight of edges 0..i-1
  int len = 0;

  CycleIndex(const ColoredGraph& g, const PerfectMatching& m, std::vector<Vertex> seq)
      : order(std::move(seq)), pos(g.vertex_count(), -1) {
    len = static_cast<int>(order.size());
    matching.resize(len);
    prefix.assign(len + 1, 0);
    for (int i = 0; i < len; ++i) pos[order[i]] = i;
    for (int i = 0; i < len; ++i) {
      const Edge e(order[i], order[(i + 1) % len]);
      matching[i] = m.contains(e);
      prefix[i + 1] = prefix[i] + edge_weight(g, m, e);
    }
  }

  // Path from position a forward to position b (a != b), wrapping.
  int arc_length(int a, int b) const { return ((b - a) % len + len) % len; }
  int arc_weight(int a, int b) const {
    if (a <= b) return prefix[b] - prefix[a];
    return prefix[len] - prefix[a] + prefix[b];
  }
  bool first_edge_matching(int a) const { return matching[a]; }
  bool last_edge_matching(int b) const { return matching[(b - 1 + len) % len]; }
  // Vertices from position a forward to position b inclusive.
  void append_forward(int a, int b, std::vector<Vertex>& out) const {
    for (int p = a;; p = (p + 1) % len) {
      out.push_back(order[p]);
      if (p == b) break;
    }
  }
  void append_backward(int a, int b, std::vector<Vertex>& out) const {
    for (int p = a;; p = (p - 1 + len) % len) {
      out.push_back(order[p]);
      if (p == b) break;
    }
  }
};

// Edges of g with both endpoints on C that are not edges of C, in id order.
std::vector<int> chords(const ColoredGraph& g, const AlternatingCycle& c,
                        const std::vector<int>& pos) {
  std::vector<Edge> cycle_edges = c.edges;
  std::sort(cycle_edges.begin(), cycle_edges.end());
  std::vector<int> out;
  for (Vertex x : c.vertices) {
    const auto nb = g.neighbors(x);
    const auto ids = g.incident_edges(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex y = nb[i];
      if (y < x || pos[y] < 0) continue;
      if (std::binary_search(cycle_edges.begin(), cycle_edges.end(), Edge(x, y))) continue;
      out.push_back(ids[i]);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void check_alternating(const PerfectMatching& m, const AlternatingCycle& c) {
  const int len = c.length();
  if (len < 4 || len % 2 != 0) throw InputError("cycle must have even length >= 4");
  for (int i = 0; i < len; ++i) {
    if (m.contains(c.edges[i]) == m.contains(c.edges[(i + 1) % len])) {
      throw InputError("cycle does not alternate with respect to the matching");
    }
  }
}

template <typename Visit>
void scan_skips(const ColoredGraph& g, const PerfectMatching& m, const AlternatingCycle& c,
                const WeightFilter& filter, Visit&& visit) {
  check_alternating(m, c);
  if (filter.empty()) return;
  const CycleIndex idx(g, m, c.vertices);
  const auto ids = chords(g, c, idx.pos);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const ColoredEdge& ce1 = g.edge(ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const ColoredEdge& ce2 = g.edge(ids[j]);
      if (ce1.edge.shares_vertex(ce2.edge)) continue;
      // Sort the four endpoints along C; the chords must interleave.
      std::array<Vertex, 4> q = {ce1.edge.u, ce1.edge.v, ce2.edge.u, ce2.edge.v};
      std::sort(q.begin(), q.end(),
                [&](Vertex a, Vertex b) { return idx.pos[a] < idx.pos[b]; });
      const Edge d0(q[0], q[2]);
      if (d0 != ce1.edge && d0 != ce2.edge) continue;
      const int chord_weight = (ce1.color == Color::kRed) + (ce2.color == Color::kRed);
      for (int option = 0; option < 2; ++option) {
        const Vertex v1 = q[option];
        const Vertex v1p = q[option + 1];
        const Vertex v2 = q[option + 2];
        const Vertex v2p = q[(option + 3) % 4];
        const int p1 = idx.pos[v1], p1p = idx.pos[v1p], p2 = idx.pos[v2], p2p = idx.pos[v2p];
        // Removed paths C[v1, v1'] and C[v2, v2'] start and end with
        // non-matching edges, so the chords attach to matching edges.
        if (idx.first_edge_matching(p1) || idx.last_edge_matching(p1p) ||
            idx.first_edge_matching(p2) || idx.last_edge_matching(p2p)) {
          continue;
        }
        if (idx.arc_length(p1, p1p) + idx.arc_length(p2, p2p) <= 2) continue;
        const int weight = chord_weight - idx.arc_weight(p1, p1p) - idx.arc_weight(p2, p2p);
        if (!filter.contains(weight)) continue;
        Skip s;
        s.e1 = Edge(v1, v2);
        s.e2 = Edge(v1p, v2p);
        s.v1 = v1;
        s.v1_prime = v1p;
        s.v2 = v2;
        s.v2_prime = v2p;
        s.weight = weight;
        s.cycle = c;
        std::vector<Vertex> seq;
        idx.append_forward(p1p, p2, seq);
        idx.append_backward(p1, p2p, seq);
        s.shortcut = make_alternating_cycle(g, m, seq);
        if (!visit(std::move(s))) return;
      }
    }
  }
}

template <typename Visit>
void scan_biskips(const DirectedView& gm, const AlternatingCycle& c, const WeightFilter& filter,
                  Visit&& visit) {
  const ColoredGraph& g = gm.graph();
  const PerfectMatching& m = gm.matching();
  check_alternating(m, c);
  if (filter.empty()) return;
  const CycleIndex idx(g, m, gm.directed_order(c));
  const auto ids = chords(g, c, idx.pos);
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const Arc a1 = gm.arc(ids[i]);
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      const Arc a2 = gm.arc(ids[j]);
      if (g.edge(ids[i]).edge.shares_vertex(g.edge(ids[j]).edge)) continue;
      // Required order v1, v2', v1', v2 measured forward from v1. Swapping
      // the roles of a1 and a2 yields a rotation of the same order.
      const int p1 = idx.pos[a1.tail], p2 = idx.pos[a1.head];
      const int p1p = idx.pos[a2.tail], p2p = idx.pos[a2.head];
      const int d2p = idx.arc_length(p1, p2p);
      const int d1p = idx.arc_length(p1, p1p);
      const int d2 = idx.arc_length(p1, p2);
      if (!(d2p < d1p && d1p < d2)) continue;
      // Removed paths C[v1, v2'] and C[v1', v2].
      if (idx.arc_length(p1, p2p) + idx.arc_length(p1p, p2) <= 2) continue;
      const int chord_weight =
          (g.edge(ids[i]).color == Color::kRed) + (g.edge(ids[j]).color == Color::kRed);
      const int weight = chord_weight - idx.arc_weight(p1, p2p) - idx.arc_weight(p1p, p2);
      if (!filter.contains(weight)) continue;
      Biskip s;
      s.a1 = a1;
      s.a2 = a2;
      s.v1 = a1.tail;
      s.v2 = a1.head;
      s.v1_prime = a2.tail;
      s.v2_prime = a2.head;
      s.weight = weight;
      s.cycle = c;
      std::vector<Vertex> seq;
      idx.append_forward(p2, p1, seq);
      s.first = make_alternating_cycle(g, m, seq);
      seq.clear();
      idx.append_forward(p2p, p1p, seq);
      s.second = make_alternating_cycle(g, m, seq);
      if (!visit(std::move(s))) return;
    }
  }
}

CycleSet replace_cycle(const CycleSet& context, const AlternatingCycle& old,
                       std::initializer_list<const AlternatingCycle*> replacements) {
  CycleSet out;
  bool found = false;
  for (const auto& c : context.cycles) {
    if (!found && c == old) {
      found = true;
      continue;
    }
    out.cycles.push_back(c);
  }
  if (!found) throw InputError("skip does not belong to a cycle of the context");
  for (const auto* r : replacements) out.cycles.push_back(*r);
  out.normalize();
  return out;
}

}  // namespace

DirectedView::DirectedView(const ColoredGraph& g, const PerfectMatching& m)
    : graph_(&g), matching_(&m) {
  if (!g.has_bipartition()) throw InputError("orientation requires a bipartition");
  if (m.size() * 2 != g.vertex_count()) {
    throw InputError("matching does not belong to this graph");
  }
  const int n = g.vertex_count();
  tail_.resize(g.edge_count());
  std::vector<int> degree(n, 0);
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id).edge;
    const Vertex a = g.side(e.u) == Side::kA ? e.u : e.v;
    const Vertex b = e.other(a);
    tail_[id] = m.contains(e) ? a : b;
    ++degree[tail_[id]];
  }
  out_offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) out_offsets_[v + 1] = out_offsets_[v] + degree[v];
  out_.resize(out_offsets_.back());
  std::vector<int> fill(out_offsets_.begin(), out_offsets_.end() - 1);
  for (int id = 0; id < g.edge_count(); ++id) {
    out_[fill[tail_[id]]++] = g.edge(id).edge.other(tail_[id]);
  }
  for (int v = 0; v < n; ++v) {
    std::sort(out_.begin() + out_offsets_[v], out_.begin() + out_offsets_[v + 1]);
  }
}

Arc DirectedView::arc(int id) const {
  const Edge& e = graph_->edge(id).edge;
  return {tail_[id], e.other(tail_[id])};
}

bool DirectedView::has_arc(Vertex tail, Vertex head) const {
  const auto id = graph_->find_edge(tail, head);
  return id && tail_[*id] == tail;
}

std::span<const Vertex> DirectedView::out_neighbors(Vertex v) const {
  return std::span<const Vertex>(out_).subspan(out_offsets_[v],
                                               out_offsets_[v + 1] - out_offsets_[v]);
}

std::vector<Vertex> DirectedView::directed_order(const AlternatingCycle& c) const {
  std::vector<Vertex> order = c.vertices;
  if (!has_arc(order[0], order[1])) std::reverse(order.begin() + 1, order.end());
  const int len = static_cast<int>(order.size());
  for (int i = 0; i < len; ++i) {
    if (!has_arc(order[i], order[(i + 1) % len])) {
      throw InputError("cycle is not a directed cycle of the orientation");
    }
  }
  return order;
}

std::vector<EdgePair> pair_decomposition(const ColoredGraph& g, const PerfectMatching& m,
                                         const AlternatingCycle& c) {
  check_alternating(m, c);
  const int len = c.length();
  const int start = m.contains(c.edges[0]) ? 0 : 1;
  std::vector<EdgePair> pairs;
  pairs.reserve(len / 2);
  for (int i = 0; i < len / 2; ++i) {
    const int p = (start + 2 * i) % len;
    EdgePair pr;
    pr.matching_edge = c.edges[p];
    pr.nonmatching_edge = c.edges[(p + 1) % len];
    pr.label = edge_weight(g, m, pr.matching_edge) + edge_weight(g, m, pr.nonmatching_edge);
    pr.position = p;
    pairs.push_back(pr);
  }
  return pairs;
}

std::vector<Bundle> find_bundles(std::span<const EdgePair> pairs) {
  std::vector<Bundle> out;
  int pending = -1;
  for (int i = 0; i < static_cast<int>(pairs.size()); ++i) {
    if (pairs[i].label == 0) continue;
    if (pending >= 0 && pairs[pending].label == pairs[i].label) {
      Bundle b;
      b.sign = pairs[i].label;
      b.first_pair = pending;
      b.second_pair = i;
      b.path.assign(pairs.begin() + pending, pairs.begin() + i + 1);
      out.push_back(std::move(b));
      pending = -1;
    } else {
      pending = i;
    }
  }
  return out;
}

std::vector<SignAlternatingPath> find_saps(std::span<const EdgePair> pairs) {
  std::vector<char> removed(pairs.size(), 0);
  for (const auto& b : find_bundles(pairs)) removed[b.first_pair] = removed[b.second_pair] = 1;
  std::vector<SignAlternatingPath> out;
  SignAlternatingPath cur;
  auto flush = [&] {
    if (!cur.pairs.empty()) out.push_back(std::move(cur));
    cur = {};
  };
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    if (removed[i]) {
      flush();
      continue;
    }
    cur.pairs.push_back(pairs[i]);
    cur.weight += pairs[i].label;
    if (pairs[i].label != 0) ++cur.nonzero_count;
  }
  flush();
  return out;
}

std::optional<Skip> find_skip(const ColoredGraph& g, const PerfectMatching& m,
                              const AlternatingCycle& c, const WeightFilter& filter) {
  std::optional<Skip> found;
  scan_skips(g, m, c, filter, [&](Skip s) {
    found = std::move(s);
    return false;
  });
  return found;
}

std::vector<Skip> enumerate_skips(const ColoredGraph& g, const PerfectMatching& m,
                                  const AlternatingCycle& c, const WeightFilter& filter) {
  std::vector<Skip> out;
  scan_skips(g, m, c, filter, [&](Skip s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::optional<Biskip> find_biskip(const DirectedView& gm, const AlternatingCycle& c,
                                  const WeightFilter& filter) {
  std::optional<Biskip> found;
  scan_biskips(gm, c, filter, [&](Biskip s) {
    found = std::move(s);
    return false;
  });
  return found;
}

std::vector<Biskip> enumerate_biskips(const DirectedView& gm, const AlternatingCycle& c,
                                      const WeightFilter& filter) {
  std::vector<Biskip> out;
  scan_biskips(gm, c, filter, [&](Biskip s) {
    out.push_back(std::move(s));
    return true;
  });
  return out;
}

std::pair<PerfectMatching, CycleSet> apply_skip(const ColoredGraph& g, const PerfectMatching& m,
                                                const Skip& s, const CycleSet& context) {
  CycleSet next = replace_cycle(context, s.cycle, {&s.shortcut});
  PerfectMatching m2 = apply_cycles(g, m, next);
  return {std::move(m2), std::move(next)};
}

std::pair<PerfectMatching, CycleSet> apply_biskip(const ColoredGraph& g,
                                                  const PerfectMatching& m, const Biskip& s,
                                                  const CycleSet& context) {
  CycleSet next = replace_cycle(context, s.cycle, {&s.first, &s.second});
  PerfectMatching m2 = apply_cycles(g, m, next);
  return {std::move(m2), std::move(next)};
}

}  // namespace exmatch
