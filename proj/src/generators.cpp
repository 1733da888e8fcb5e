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

#include "exmatch/generators.hpp"

#include <charconv>

#include "exmatch/errors.hpp"
#include "exmatch/matching.hpp"

namespace exmatch {
namespace {

constexpr int kRejectionBudget = 200;
constexpr int kPlantBudget = 200;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) throw InputError(std::string(name) + " must lie in [0, 1]");
}

Color draw_color(Rng& rng, double red_prob) {
  return rng.bernoulli(red_prob) ? Color::kRed : Color::kBlue;
}

ColoredGraph complete_graph(int n, double red_prob, Rng& rng) {
  std::vector<ColoredEdge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) edges.push_back({Edge(a, b), draw_color(rng, red_prob)});
  }
  return ColoredGraph(n, std::move(edges));
}

std::vector<Side> split_sides(int s) {
  std::vector<Side> sides(2 * s, Side::kB);
  std::fill(sides.begin(), sides.begin() + s, Side::kA);
  return sides;
}

}  // namespace

ColoredGraph gnp(int n, double p, double red_prob, std::uint64_t seed) {
  if (n < 0) throw InputError("n must be >= 0");
  check_probability(p, "edge probability");
  check_probability(red_prob, "red probability");
  Rng rng(seed);
  std::vector<ColoredEdge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const bool keep = rng.bernoulli(p);
      const Color c = draw_color(rng, red_prob);
      if (keep) edges.push_back({Edge(a, b), c});
    }
  }
  return ColoredGraph(n, std::move(edges));
}

ColoredGraph gen_bounded_alpha(int n, int alpha_max, double edge_keep_prob, double red_prob,
                               std::uint64_t seed, const OracleLimits& limits) {
  if (n < 0 || n % 2 != 0) throw InputError("n must be even and non-negative");
  if (alpha_max < 1) throw InputError("alpha_max must be >= 1");
  check_probability(edge_keep_prob, "edge keep probability");
  check_probability(red_prob, "red probability");
  Rng rng(seed);
  if (alpha_max == 1) return complete_graph(n, red_prob, rng);
  if (alpha_max == 2) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    }
    rng.shuffle(pairs);
    // H is kept triangle-free; G is its complement.
    std::vector<std::vector<char>> h(n, std::vector<char>(n, 0));
    for (const auto& [a, b] : pairs) {
      if (!rng.bernoulli(1.0 - edge_keep_prob)) continue;
      bool triangle = false;
      for (Vertex c = 0; c < n && !triangle; ++c) triangle = h[a][c] && h[b][c];
      if (!triangle) h[a][b] = h[b][a] = 1;
    }
    std::vector<ColoredEdge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (!h[a][b]) edges.push_back({Edge(a, b), draw_color(rng, red_prob)});
      }
    }
    return ColoredGraph(n, std::move(edges));
  }
  if (n > limits.max_independence_n) {
    throw OracleCapError("rejection sampling needs n <= " +
                         std::to_string(limits.max_independence_n));
  }
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    ColoredGraph g = gnp(n, edge_keep_prob, red_prob, rng.next());
    if (independence_number(g, limits) <= alpha_max) return g;
  }
  throw ConfigError("rejection budget exhausted generating a graph with alpha <= " +
                    std::to_string(alpha_max));
}

ColoredGraph gen_bounded_beta(int n_per_side, int beta_max, double red_prob, std::uint64_t seed,
                              const OracleLimits& limits) {
  if (n_per_side < 0) throw InputError("n_per_side must be >= 0");
  if (beta_max < 1) throw InputError("beta_max must be >= 1");
  check_probability(red_prob, "red probability");
  Rng rng(seed);
  const int s = n_per_side;
  auto build = [&](const std::vector<std::vector<char>>& present) {
    std::vector<ColoredEdge> edges;
    for (Vertex a = 0; a < s; ++a) {
      for (Vertex b = 0; b < s; ++b) {
        if (present[a][b]) edges.push_back({Edge(a, s + b), draw_color(rng, red_prob)});
      }
    }
    return ColoredGraph(2 * s, std::move(edges), split_sides(s));
  };
  if (beta_max == 1) {
    return build(std::vector<std::vector<char>>(s, std::vector<char>(s, 1)));
  }
  if (beta_max == 2) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < s; ++a) {
      for (Vertex b = 0; b < s; ++b) pairs.emplace_back(a, b);
    }
    rng.shuffle(pairs);
    // H is kept C4-free: adding (a, b) must not close a' - b' with a' ~ b
    // and b' ~ a.
    std::vector<std::vector<char>> h(s, std::vector<char>(s, 0));
    for (const auto& [a, b] : pairs) {
      if (!rng.bernoulli(0.5)) continue;
      bool c4 = false;
      for (Vertex a2 = 0; a2 < s && !c4; ++a2) {
        if (a2 == a || !h[a2][b]) continue;
        for (Vertex b2 = 0; b2 < s && !c4; ++b2) c4 = b2 != b && h[a][b2] && h[a2][b2];
      }
      if (!c4) h[a][b] = 1;
    }
    for (auto& row : h) {
      for (auto& x : row) x = !x;
    }
    return build(h);
  }
  if (2 * s > limits.max_independence_n) {
    throw OracleCapError("rejection sampling needs n <= " +
                         std::to_string(limits.max_independence_n));
  }
  for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
    std::vector<std::vector<char>> present(s, std::vector<char>(s, 0));
    for (auto& row : present) {
      for (auto& x : row) x = rng.bernoulli(0.75);
    }
    ColoredGraph g = build(present);
    if (bipartite_independence_number(g, limits) <= beta_max) return g;
  }
  throw ConfigError("rejection budget exhausted generating a graph with beta <= " +
                    std::to_string(beta_max));
}

GeneratorSpec parse_family(std::string_view text) {
  GeneratorSpec spec;
  const auto colon = text.find(':');
  const std::string_view name = text.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? "" : text.substr(colon + 1);
  auto need_arg = [&] {
    if (arg.empty()) throw ConfigError("family '" + std::string(name) + "' needs an argument");
  };
  if (name == "complete") {
    if (!arg.empty()) throw ConfigError("family 'complete' takes no argument");
    spec.family = GeneratorSpec::Family::kComplete;
    return spec;
  }
  if (name == "gnp") {
    need_arg();
    try {
      std::size_t used = 0;
      spec.p = std::stod(std::string(arg), &used);
      if (used != arg.size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw ConfigError("bad probability in family '" + std::string(text) + "'");
    }
    if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ConfigError("gnp probability must be in [0, 1]");
    spec.family = GeneratorSpec::Family::kGnp;
    return spec;
  }
  if (name == "alpha" || name == "beta") {
    need_arg();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), value);
    if (ec != std::errc() || ptr != arg.data() + arg.size() || value < 1) {
      throw ConfigError("bad parameter in family '" + std::string(text) + "'");
    }
    spec.family = name == "alpha" ? GeneratorSpec::Family::kAlpha : GeneratorSpec::Family::kBeta;
    spec.parameter = value;
    return spec;
  }
  throw ConfigError("unknown family '" + std::string(text) +
                    "' (expected complete, gnp:<p>, alpha:<a>, beta:<b>)");
}

std::string to_string(const GeneratorSpec& spec) {
  switch (spec.family) {
    case GeneratorSpec::Family::kComplete:
      return "complete";
    case GeneratorSpec::Family::kGnp: {
      char buf[32];
      const auto res = std::to_chars(buf, buf + sizeof buf, spec.p);
      return "gnp:" + std::string(buf, res.ptr);
    }
    case GeneratorSpec::Family::kAlpha:
      return "alpha:" + std::to_string(spec.parameter);
    case GeneratorSpec::Family::kBeta:
      return "beta:" + std::to_string(spec.parameter);
  }
  return "complete";
}

ColoredGraph generate(const GeneratorSpec& spec, int n, std::uint64_t seed,
                      const OracleLimits& limits) {
  switch (spec.family) {
    case GeneratorSpec::Family::kComplete:
      return gen_bounded_alpha(n, 1, 1.0, spec.red_prob, seed, limits);
    case GeneratorSpec::Family::kGnp:
      return gnp(n, spec.p, spec.red_prob, seed);
    case GeneratorSpec::Family::kAlpha:
      return gen_bounded_alpha(n, spec.parameter, spec.p, spec.red_prob, seed, limits);
    case GeneratorSpec::Family::kBeta:
      if (n % 2 != 0) throw InputError("bipartite families need an even n");
      return gen_bounded_beta(n / 2, spec.parameter, spec.red_prob, seed, limits);
  }
  throw InputError("unknown generator family");
}

std::pair<ColoredGraph, PerfectMatching> gen_planted_yes(int n, int k, const GeneratorSpec& base,
                                                         std::uint64_t seed,
                                                         const OracleLimits& limits) {
  if (n < 0 || n % 2 != 0) throw InputError("n must be even and non-negative");
  if (k < 0 || k > n / 2) throw InputError("k must lie in [0, n/2]");
  Rng rng(seed);
  for (int attempt = 0; attempt < kPlantBudget; ++attempt) {
    const ColoredGraph g = generate(base, n, rng.next(), limits);
    // Random positive weights pick a seeded perfect matching.
    WeightAssignment w(g.edge_count());
    for (int& x : w) x = 1 + static_cast<int>(rng.below(1000));
    const auto pm = max_weight_perfect_matching(g, w);
    if (!pm) continue;
    std::vector<Edge> chosen(pm->edges().begin(), pm->edges().end());
    rng.shuffle(chosen);
    std::vector<Edge> red(chosen.begin(), chosen.begin() + k);
    std::sort(red.begin(), red.end());
    std::vector<ColoredEdge> edges(g.edges().begin(), g.edges().end());
    for (auto& ce : edges) {
      if (pm->contains(ce.edge)) {
        ce.color = std::binary_search(red.begin(), red.end(), ce.edge) ? Color::kRed
                                                                       : Color::kBlue;
      }
    }
    ColoredGraph planted(n, std::move(edges), g.bipartition());
    PerfectMatching witness(planted, std::vector<Edge>(pm->edges().begin(), pm->edges().end()));
    return {std::move(planted), std::move(witness)};
  }
  throw ConfigError("family " + to_string(base) + " produced no perfect matching within budget");
}

}  // namespace exmatch
