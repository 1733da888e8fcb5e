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

#include "exmatch/solver.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <thread>

#include "exmatch/errors.hpp"
#include "exmatch/matching.hpp"
#include "exmatch/skip.hpp"
#include "json.hpp"

namespace exmatch {

BigInt t_alpha(int alpha) {
  if (alpha < 1) throw InputError("t_alpha requires alpha >= 1");
  return BigInt(256) * boost::multiprecision::pow(BigInt(4), 2 * alpha);
}

BigInt f_alpha(int alpha) {
  return BigInt(1000) * boost::multiprecision::pow(t_alpha(alpha), 6);
}

BigInt t_beta(int beta) {
  if (beta < 1) throw InputError("t_beta requires beta >= 1");
  return BigInt(256) * boost::multiprecision::pow(BigInt(4), 4 * beta + 4);
}

BigInt f_beta(int beta) {
  return BigInt(1000) * boost::multiprecision::pow(t_beta(beta), 6);
}

namespace {

constexpr long long kHuge = std::numeric_limits<long long>::max() / 4;

// 2 * 4^e, saturated.
long long two_times_four_to(int e) {
  long long v = 2;
  for (int i = 0; i < e; ++i) {
    if (v > kHuge / 4) return kHuge;
    v *= 4;
  }
  return v;
}

void check_instance(const ColoredGraph& g, int k) {
  const int n = g.vertex_count();
  if (n % 2 != 0) throw InputError("vertex count must be even");
  if (k < 0 || k > n / 2) throw InputError("k must lie in [0, n/2]");
}

int resolve_parameter(const ColoredGraph& g, const SolverParams& params, bool bipartite) {
  const auto& hint = bipartite ? params.beta : params.alpha;
  int value;
  if (hint) {
    if (*hint < 0) throw ConfigError(bipartite ? "beta must be >= 0" : "alpha must be >= 0");
    value = *hint;
  } else if (g.vertex_count() <= params.oracle.max_independence_n) {
    value = bipartite ? bipartite_independence_number(g, params.oracle)
                      : independence_number(g, params.oracle);
  } else {
    throw ConfigError(std::string(bipartite ? "beta" : "alpha") +
                      " is required for graphs with more than " +
                      std::to_string(params.oracle.max_independence_n) + " vertices");
  }
  // Both thresholds grow with the parameter, so raising 0 to 1 is safe.
  return std::max(value, 1);
}

ApproxResult approx_impl(const ColoredGraph& g, int k, const SolverParams& params,
                         bool bipartite) {
  check_instance(g, k);
  if (bipartite && !g.has_bipartition()) {
    throw InputError("bipartite solver requires a bipartition");
  }
  ApproxResult out;
  out.bipartite = bipartite;
  out.parameter = resolve_parameter(g, params, bipartite);
  out.threshold = params.t_override ? *params.t_override
                                    : two_times_four_to(bipartite ? 2 * out.parameter + 2
                                                                  : out.parameter);
  auto m1 = min_red_pm(g);
  if (!m1) return out;
  auto m2 = max_red_pm(g);
  const long long t = out.threshold;
  const int n = g.vertex_count();
  int gap = m2->red_count() - m1->red_count();
  while (m1->red_count() <= k - t && m2->red_count() > k) {
    if (++out.iterations > n) throw Error("phase 1 exceeded its iteration bound");
    const CycleSet context = symmetric_difference(g, *m1, *m2);
    const auto it = std::find_if(context.cycles.begin(), context.cycles.end(),
                                 [](const AlternatingCycle& c) { return c.weight > 0; });
    if (it == context.cycles.end()) throw Error("phase 1 found no positive cycle");
    const AlternatingCycle& c = *it;
    if (c.weight <= t) {
      CycleSet single;
      single.cycles.push_back(c);
      single.normalize();
      m1 = apply_cycles(g, *m1, single);
    } else if (bipartite) {
      const DirectedView gm(g, *m1);
      const auto s = find_biskip(gm, c, WeightFilter::negative());
      if (!s) {
        throw ParameterTooSmallError("no negative biskip on a cycle of weight " +
                                     std::to_string(c.weight) + "; beta=" +
                                     std::to_string(out.parameter) + " is too small");
      }
      m2 = apply_biskip(g, *m1, *s, context).first;
    } else {
      const auto s = find_skip(g, *m1, c, WeightFilter::negative());
      if (!s) {
        throw ParameterTooSmallError("no negative skip on a cycle of weight " +
                                     std::to_string(c.weight) + "; alpha=" +
                                     std::to_string(out.parameter) + " is too small");
      }
      m2 = apply_skip(g, *m1, *s, context).first;
    }
    const int next_gap = m2->red_count() - m1->red_count();
    if (next_gap >= gap) throw Error("phase 1 failed to make progress");
    gap = next_gap;
  }
  out.matching = m2->red_count() <= k ? std::move(m2) : std::move(m1);
  return out;
}

// Completes R' (edges of `color`, already known to be a matching) with a
// perfect matching in the other color on the vertices R' leaves uncovered.
std::optional<PerfectMatching> complete(const ColoredGraph& g, std::span<const Edge> fixed,
                                        Color color, CardinalityMatcher& engine) {
  const int n = g.vertex_count();
  std::vector<char> covered(n, 0);
  for (const Edge& e : fixed) covered[e.u] = covered[e.v] = 1;
  // Covered vertices keep only their fixed edge, so any perfect matching of
  // this edge set extends `fixed`.
  std::vector<Edge> edges(fixed.begin(), fixed.end());
  const Color fill = other(color);
  for (const auto& ce : g.edges()) {
    if (ce.color == fill && !covered[ce.edge.u] && !covered[ce.edge.v]) edges.push_back(ce.edge);
  }
  std::vector<Edge> pm;
  if (!engine.perfect_matching(n, edges, &pm)) return std::nullopt;
  return PerfectMatching(g, std::move(pm));
}

int target_size(const ColoredGraph& g, Color color, int k) {
  return color == Color::kRed ? k : g.vertex_count() / 2 - k;
}

// Depth-first enumeration of guesses of one size in lexicographic order.
// A guess S splits into A (edges outside M) and D (edges of M); S succeeds
// only if A is a matching, every M edge of the class touching A is in D,
// and |A| - |D| closes the gap to the target size.
class GuessSearch {
 public:
  GuessSearch(const ColoredGraph& g, const PerfectMatching& m, Color color, int k)
      : g_(g), m_(m), color_(color), k_(k), m_edge_at_(g.vertex_count(), -1),
        a_cover_(g.vertex_count(), 0) {
    for (int id = 0; id < g.edge_count(); ++id) {
      if (g.edge(id).color != color) continue;
      const int ci = static_cast<int>(class_.size());
      class_.push_back(g.edge(id).edge);
      const bool in_m = m.contains(g.edge(id).edge);
      in_m_.push_back(in_m);
      if (in_m) {
        m_edge_at_[g.edge(id).edge.u] = ci;
        m_edge_at_[g.edge(id).edge.v] = ci;
        ++class_in_m_;
      }
    }
    chosen_.assign(class_.size(), 0);
    required_.assign(class_.size(), 0);
  }

  int class_size() const { return static_cast<int>(class_.size()); }

  /// Sets up the counts for guesses of size s; false if none can succeed.
  bool prepare(int s) {
    const int twice_a = s + target_size(g_, color_, k_) - class_in_m_;
    if (twice_a < 0 || twice_a % 2 != 0 || twice_a / 2 > s) return false;
    want_a_ = twice_a / 2;
    want_d_ = s - want_a_;
    return want_d_ <= class_in_m_ && want_a_ <= class_size() - class_in_m_;
  }

  /// First success among guesses whose smallest index is `first` (or the
  /// empty guess when first == -1).
  std::optional<PerfectMatching> run(int first) {
    result_.reset();
    if (first < 0) {
      if (want_a_ == 0 && want_d_ == 0) leaf();
      return std::move(result_);
    }
    if (try_choose(first)) {
      dfs(first + 1);
      unchoose(first);
    }
    return std::move(result_);
  }

 private:
  bool try_choose(int j) {
    if (in_m_[j]) {
      if (nd_ >= want_d_) return false;
      ++nd_;
      chosen_[j] = 1;
      if (required_[j] > 0) --unmet_;
      return true;
    }
    if (na_ >= want_a_) return false;
    const Edge e = class_[j];
    if (a_cover_[e.u] || a_cover_[e.v]) return false;
    for (Vertex x : {e.u, e.v}) {
      const int r = m_edge_at_[x];
      if (r >= 0 && r < j && !chosen_[r]) return false;
    }
    ++na_;
    chosen_[j] = 1;
    a_cover_[e.u] = a_cover_[e.v] = 1;
    for (Vertex x : {e.u, e.v}) {
      const int r = m_edge_at_[x];
      if (r >= 0 && required_[r]++ == 0 && !chosen_[r]) ++unmet_;
    }
    return true;
  }

  void unchoose(int j) {
    chosen_[j] = 0;
    if (in_m_[j]) {
      --nd_;
      if (required_[j] > 0) ++unmet_;
      return;
    }
    --na_;
    const Edge e = class_[j];
    a_cover_[e.u] = a_cover_[e.v] = 0;
    for (Vertex x : {e.u, e.v}) {
      const int r = m_edge_at_[x];
      if (r >= 0 && --required_[r] == 0 && !chosen_[r]) --unmet_;
    }
  }

  void dfs(int pos) {
    if (result_) return;
    if (na_ == want_a_ && nd_ == want_d_) {
      if (unmet_ == 0) leaf();
      return;
    }
    const int left = (want_a_ - na_) + (want_d_ - nd_);
    for (int j = pos; j + left <= class_size(); ++j) {
      // Skipping a required edge can never be repaired later.
      if (j > pos && required_[j - 1] > 0 && !chosen_[j - 1]) return;
      if (try_choose(j)) {
        dfs(j + 1);
        unchoose(j);
        if (result_) return;
      }
    }
  }

  void leaf() {
    std::vector<Edge> fixed;
    for (const Edge& e : m_.edges()) {
      if (g_.color(e.u, e.v) == color_) {
        const int ci = m_edge_at_[e.u];
        if (!chosen_[ci]) fixed.push_back(e);
      }
    }
    for (int j = 0; j < class_size(); ++j) {
      if (chosen_[j] && !in_m_[j]) fixed.push_back(class_[j]);
    }
    result_ = complete(g_, fixed, color_, engine_);
  }

  const ColoredGraph& g_;
  const PerfectMatching& m_;
  Color color_;
  int k_;
  std::vector<Edge> class_;
  std::vector<char> in_m_;
  std::vector<int> m_edge_at_;  // class index of the M edge of this color at v
  int class_in_m_ = 0;

  int want_a_ = 0, want_d_ = 0;
  int na_ = 0, nd_ = 0, unmet_ = 0;
  std::vector<char> chosen_;
  std::vector<int> required_;
  std::vector<char> a_cover_;
  CardinalityMatcher engine_;
  std::optional<PerfectMatching> result_;
};

// First success among all guesses of size s, in lexicographic order.
std::optional<PerfectMatching> search_size(const ColoredGraph& g, const PerfectMatching& m,
                                           int k, int s, Color color,
                                           const SolverParams& params) {
  GuessSearch probe(g, m, color, k);
  if (!probe.prepare(s)) return std::nullopt;
  if (s == 0) return probe.run(-1);
  const int width = probe.class_size();
  const int threads = std::max(1, std::min(params.threads, width));
  if (threads == 1) {
    for (int first = 0; first < width; ++first) {
      if (auto r = probe.run(first)) return r;
    }
    return std::nullopt;
  }
  // Workers claim first indices in increasing order; the smallest successful
  // first index wins, which is the sequential answer.
  std::atomic<int> next{0};
  std::atomic<int> best{width};
  std::mutex mu;
  std::optional<PerfectMatching> best_result;
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      GuessSearch local(g, m, color, k);
      local.prepare(s);
      while (true) {
        const int first = next.fetch_add(1);
        if (first >= width || first >= best.load()) return;
        auto r = local.run(first);
        if (!r) continue;
        std::lock_guard<std::mutex> lock(mu);
        if (first < best.load()) {
          best.store(first);
          best_result = std::move(r);
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  return best_result;
}

}  // namespace

ApproxResult approx_em(const ColoredGraph& g, int k, const SolverParams& params) {
  return approx_impl(g, k, params, /*bipartite=*/false);
}

ApproxResult approx_em_bipartite(const ColoredGraph& g, int k, const SolverParams& params) {
  return approx_impl(g, k, params, /*bipartite=*/true);
}

std::optional<PerfectMatching> recover_from_color_guess(const ColoredGraph& g,
                                                        const PerfectMatching& m,
                                                        std::span<const Edge> guess, Color color,
                                                        int k) {
  std::vector<Edge> current;
  for (const Edge& e : m.edges()) {
    if (g.color(e.u, e.v) == color) current.push_back(e);
  }
  std::vector<Edge> g_sorted;
  for (const Edge& raw : guess) {
    const Edge e(raw.u, raw.v);
    const auto c = g.color(e.u, e.v);
    if (!c) throw InputError("guess edge " + to_string(e) + " is not in the graph");
    if (*c != color) {
      throw InputError("guess edge " + to_string(e) + " is not " + std::string(to_string(color)));
    }
    g_sorted.push_back(e);
  }
  std::sort(g_sorted.begin(), g_sorted.end());
  g_sorted.erase(std::unique(g_sorted.begin(), g_sorted.end()), g_sorted.end());
  std::vector<Edge> fixed;
  std::set_symmetric_difference(current.begin(), current.end(), g_sorted.begin(), g_sorted.end(),
                                std::back_inserter(fixed));
  if (static_cast<int>(fixed.size()) != target_size(g, color, k)) return std::nullopt;
  std::vector<char> covered(g.vertex_count(), 0);
  for (const Edge& e : fixed) {
    if (covered[e.u] || covered[e.v]) return std::nullopt;
    covered[e.u] = covered[e.v] = 1;
  }
  CardinalityMatcher engine;
  return complete(g, fixed, color, engine);
}

std::optional<PerfectMatching> small_diff_search(const ColoredGraph& g, const PerfectMatching& m,
                                                 int k, int L, Color color,
                                                 const SolverParams& params) {
  check_instance(g, k);
  for (int s = 0; s <= L; ++s) {
    if (auto r = search_size(g, m, k, s, color, params)) return r;
  }
  return std::nullopt;
}

namespace {

std::optional<PerfectMatching> search_both(const ColoredGraph& g, const PerfectMatching& m, int k,
                                           int L, const SolverParams& params, int* size) {
  for (int s = 0; s <= L; ++s) {
    for (Color c : {Color::kRed, Color::kBlue}) {
      if (auto r = search_size(g, m, k, s, c, params)) {
        if (size) *size = s;
        return r;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PerfectMatching> small_diff_search(const ColoredGraph& g, const PerfectMatching& m,
                                                 int k, int L, const SolverParams& params) {
  check_instance(g, k);
  return search_both(g, m, k, L, params, nullptr);
}

std::string to_string(Verdict::Kind kind) {
  switch (kind) {
    case Verdict::Kind::kYes:
      return "yes";
    case Verdict::Kind::kNoCertified:
      return "no";
    case Verdict::Kind::kUnknown:
      return "unknown";
  }
  return "unknown";
}

Verdict solve_em(const ColoredGraph& g, int k, const SolverParams& params) {
  Verdict v;
  const int n = g.vertex_count();
  if (params.L_cap && *params.L_cap < 0) throw ConfigError("L_cap must be >= 0");
  if (params.threads < 1) throw ConfigError("threads must be >= 1");
  if (n % 2 != 0 || k < 0 || k > n / 2) {
    v.kind = Verdict::Kind::kNoCertified;
    v.reason = n % 2 != 0 ? "odd vertex count" : "k outside [0, n/2]";
    return v;
  }
  bool bipartite = false;
  switch (params.mode) {
    case SolverMode::kAuto:
      bipartite = g.has_bipartition();
      break;
    case SolverMode::kGeneral:
      break;
    case SolverMode::kBipartite:
      bipartite = true;
      break;
  }
  const ApproxResult phase1 = bipartite ? approx_em_bipartite(g, k, params)
                                        : approx_em(g, k, params);
  v.bipartite = bipartite;
  v.parameter = phase1.parameter;
  v.iterations = phase1.iterations;
  if (!phase1.matching) {
    v.kind = Verdict::Kind::kNoCertified;
    v.reason = "no perfect matching";
    return v;
  }
  const PerfectMatching& m = *phase1.matching;
  v.phase1_r = m.red_count();
  auto accept = [&](PerfectMatching w) {
    if (!is_perfect_matching(g, w.edges()) || w.red_count() != k) {
      throw Error("internal error: witness failed verification");
    }
    v.kind = Verdict::Kind::kYes;
    v.witness = std::move(w);
  };
  if (m.red_count() == k) {
    accept(m);
    return v;
  }
  const BigInt f_bound = bipartite ? f_beta(phase1.parameter) : f_alpha(phase1.parameter);
  int L = params.L_cap ? std::min(*params.L_cap, n) : n;
  if (f_bound < L) L = static_cast<int>(f_bound);
  v.L_used = L;
  if (auto w = search_both(g, m, k, L, params, &v.L_used)) {
    accept(std::move(*w));
    return v;
  }
  const BigInt needed = std::min(BigInt(n), f_bound);
  if (BigInt(L) >= needed) {
    v.kind = Verdict::Kind::kNoCertified;
    v.reason = "search radius covers every solution";
  } else {
    v.kind = Verdict::Kind::kUnknown;
    v.reason = "phase-2 budget L=" + std::to_string(L) + " exhausted below the certified radius";
  }
  return v;
}

std::string verdict_to_json(const Verdict& v) {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(v.kind);
  if (v.witness) {
    auto arr = nlohmann::json::array();
    for (const Edge& e : v.witness->edges()) arr.push_back({e.u, e.v});
    j["witness"] = arr;
  }
  j["L_used"] = v.L_used;
  j["phase1_r"] = v.phase1_r;
  j["iterations"] = v.iterations;
  return j.dump();
}

}  // namespace exmatch
