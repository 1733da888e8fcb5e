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

#include "exmatch/oracle.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "exmatch/errors.hpp"

namespace exmatch {
namespace {

void check_cap(const ColoredGraph& g, int cap, const char* what) {
  if (g.vertex_count() > cap) {
    throw OracleCapError(std::string("instance too large for oracle (") + what + "): n=" +
                         std::to_string(g.vertex_count()) + " exceeds cap " +
                         std::to_string(cap));
  }
}

class Enumerator {
 public:
  Enumerator(const ColoredGraph& g, const std::function<bool(std::span<const Edge>)>& visit)
      : g_(g), visit_(visit), covered_(g.vertex_count(), 0) {}

  // Returns false once the visitor asked to stop.
  bool run(Vertex from) {
    const int n = g_.vertex_count();
    while (from < n && covered_[from]) ++from;
    if (from == n) return visit_(current_);
    covered_[from] = 1;
    for (Vertex w : g_.neighbors(from)) {
      if (w < from || covered_[w]) continue;
      covered_[w] = 1;
      current_.emplace_back(from, w);
      const bool go_on = run(from + 1);
      current_.pop_back();
      covered_[w] = 0;
      if (!go_on) return false;
    }
    covered_[from] = 0;
    return true;
  }

 private:
  const ColoredGraph& g_;
  const std::function<bool(std::span<const Edge>)>& visit_;
  std::vector<char> covered_;
  std::vector<Edge> current_;
};

std::uint64_t count_rec(const std::vector<std::uint64_t>& adj, std::uint64_t full,
                        std::uint64_t covered,
                        std::unordered_map<std::uint64_t, std::uint64_t>& memo) {
  if (covered == full) return 1;
  const auto it = memo.find(covered);
  if (it != memo.end()) return it->second;
  const int v = std::countr_one(covered);
  std::uint64_t options = adj[v] & ~covered & full;
  std::uint64_t total = 0;
  while (options) {
    const int w = std::countr_zero(options);
    options &= options - 1;
    total += count_rec(adj, full, covered | (1ULL << v) | (1ULL << w), memo);
  }
  memo.emplace(covered, total);
  return total;
}

std::vector<std::uint64_t> adjacency_masks(const ColoredGraph& g) {
  std::vector<std::uint64_t> adj(g.vertex_count(), 0);
  for (const auto& ce : g.edges()) {
    adj[ce.edge.u] |= 1ULL << ce.edge.v;
    adj[ce.edge.v] |= 1ULL << ce.edge.u;
  }
  return adj;
}

// Maximum independent set by branch and bound. Candidates are greedily
// covered by cliques of g; an independent set meets each clique at most
// once, so the number of cliques bounds what the candidates can add.
class IndependentSetSearch {
 public:
  explicit IndependentSetSearch(const ColoredGraph& g) : adj_(adjacency_masks(g)) {}

  int solve() {
    const int n = static_cast<int>(adj_.size());
    const std::uint64_t all = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    best_ = 0;
    expand(0, all);
    return best_;
  }

 private:
  void expand(int size, std::uint64_t candidates) {
    if (candidates == 0) {
      best_ = std::max(best_, size);
      return;
    }
    std::vector<int> order;
    std::vector<int> bound;
    cover(candidates, order, bound);
    for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
      if (size + bound[i] <= best_) return;
      const int v = order[i];
      expand(size + 1, candidates & ~adj_[v] & ~(1ULL << v));
      candidates &= ~(1ULL << v);
    }
    best_ = std::max(best_, size);
  }

  // Lists candidates class by class; bound[i] is the number of cliques used
  // up to and including order[i].
  void cover(std::uint64_t candidates, std::vector<int>& order, std::vector<int>& bound) const {
    int cliques = 0;
    std::uint64_t left = candidates;
    while (left) {
      ++cliques;
      std::uint64_t open = left;
      while (open) {
        const int v = std::countr_zero(open);
        open &= adj_[v];
        left &= ~(1ULL << v);
        order.push_back(v);
        bound.push_back(cliques);
      }
    }
  }

  std::vector<std::uint64_t> adj_;
  int best_ = 0;
};

class BalancedIndependentSearch {
 public:
  BalancedIndependentSearch(const ColoredGraph& g, const std::vector<Vertex>& a,
                            const std::vector<Vertex>& b)
      : a_(a) {
    std::vector<int> index_b(g.vertex_count(), -1);
    for (int j = 0; j < static_cast<int>(b.size()); ++j) index_b[b[j]] = j;
    nbr_.assign(a.size(), 0);
    for (int i = 0; i < static_cast<int>(a.size()); ++i) {
      for (Vertex w : g.neighbors(a[i])) nbr_[i] |= 1ULL << index_b[w];
    }
    b_all_ = b.size() == 64 ? ~0ULL : ((1ULL << b.size()) - 1);
  }

  int solve() {
    best_ = 0;
    search(0, 0, b_all_);
    return best_;
  }

 private:
  // free_b: vertices of B with no neighbor in the chosen subset of A.
  void search(int next, int chosen, std::uint64_t free_b) {
    const int free_count = std::popcount(free_b);
    best_ = std::max(best_, std::min(chosen, free_count));
    const int remaining = static_cast<int>(a_.size()) - next;
    if (std::min(chosen + remaining, free_count) <= best_) return;
    if (next == static_cast<int>(a_.size())) return;
    search(next + 1, chosen + 1, free_b & ~nbr_[next]);
    search(next + 1, chosen, free_b);
  }

  std::vector<Vertex> a_;
  std::vector<std::uint64_t> nbr_;
  std::uint64_t b_all_ = 0;
  int best_ = 0;
};

}  // namespace

void for_each_perfect_matching(const ColoredGraph& g,
                               const std::function<bool(std::span<const Edge>)>& visit,
                               const OracleLimits& limits) {
  check_cap(g, limits.max_enumerate_n, "enumeration");
  if (g.vertex_count() % 2 != 0) return;
  Enumerator e(g, visit);
  e.run(0);
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const ColoredGraph& g,
                                                         const OracleLimits& limits) {
  std::vector<PerfectMatching> out;
  for_each_perfect_matching(
      g,
      [&](std::span<const Edge> edges) {
        out.emplace_back(g, std::vector<Edge>(edges.begin(), edges.end()));
        return true;
      },
      limits);
  return out;
}

std::uint64_t count_perfect_matchings(const ColoredGraph& g, const OracleLimits& limits) {
  check_cap(g, std::min(limits.max_count_n, 63), "counting");
  const int n = g.vertex_count();
  if (n % 2 != 0) return 0;
  const auto adj = adjacency_masks(g);
  const std::uint64_t full = (1ULL << n) - 1;
  std::unordered_map<std::uint64_t, std::uint64_t> memo;
  return count_rec(adj, full, 0, memo);
}

std::optional<PerfectMatching> em_decide_bruteforce(const ColoredGraph& g, int k,
                                                    const OracleLimits& limits) {
  std::optional<PerfectMatching> found;
  for_each_perfect_matching(
      g,
      [&](std::span<const Edge> edges) {
        if (red_count(g, edges) != k) return true;
        found.emplace(g, std::vector<Edge>(edges.begin(), edges.end()));
        return false;
      },
      limits);
  return found;
}

std::vector<int> achievable_red_counts(const ColoredGraph& g, const OracleLimits& limits) {
  std::vector<char> seen(g.vertex_count() / 2 + 1, 0);
  for_each_perfect_matching(
      g,
      [&](std::span<const Edge> edges) {
        seen[red_count(g, edges)] = 1;
        return true;
      },
      limits);
  std::vector<int> out;
  for (int r = 0; r < static_cast<int>(seen.size()); ++r) {
    if (seen[r]) out.push_back(r);
  }
  return out;
}

int independence_number(const ColoredGraph& g, const OracleLimits& limits) {
  check_cap(g, std::min(limits.max_independence_n, 64), "independence number");
  if (g.vertex_count() == 0) return 0;
  return IndependentSetSearch(g).solve();
}

int bipartite_independence_number(const ColoredGraph& g, const OracleLimits& limits) {
  if (!g.has_bipartition()) {
    throw InputError("bipartite independence number requires a bipartition");
  }
  check_cap(g, std::min(limits.max_independence_n, 128), "bipartite independence number");
  auto a = g.side_vertices(Side::kA);
  auto b = g.side_vertices(Side::kB);
  if (a.size() > 64 || b.size() > 64) {
    throw OracleCapError("instance too large for oracle: a side exceeds 64 vertices");
  }
  // Branch over the smaller side.
  if (a.size() > b.size()) std::swap(a, b);
  return BalancedIndependentSearch(g, a, b).solve();
}

}  // namespace exmatch
