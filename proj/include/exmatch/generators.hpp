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

// Seeded instance generators. All randomness comes from a std::mt19937_64
// seeded with the given value; a probability test draws 53 bits and
// compares the resulting double in [0, 1) against p.

#ifndef EXMATCH_GENERATORS_HPP
#define EXMATCH_GENERATORS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exmatch/graph.hpp"
#include "exmatch/oracle.hpp"

namespace exmatch {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool bernoulli(double p) { return uniform() < p; }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// alpha_max = 1: colored K_n. alpha_max = 2: complement of a random
/// triangle-free graph whose pairs are proposed with probability
/// 1 - edge_keep_prob. Larger values: G(n, edge_keep_prob) resampled until
/// the independence number is at most alpha_max.
ColoredGraph gen_bounded_alpha(int n, int alpha_max, double edge_keep_prob, double red_prob,
                               std::uint64_t seed, const OracleLimits& limits = {});

/// Bipartite graph with sides 0..s-1 (A) and s..2s-1 (B). beta_max = 1:
/// complete bipartite. beta_max = 2: bipartite complement of a random
/// C4-free graph. Larger values: random bipartite graphs resampled until
/// the bipartite independence number is at most beta_max.
ColoredGraph gen_bounded_beta(int n_per_side, int beta_max, double red_prob, std::uint64_t seed,
                              const OracleLimits& limits = {});

ColoredGraph gnp(int n, double p, double red_prob, std::uint64_t seed);

struct GeneratorSpec {
  enum class Family { kComplete, kGnp, kAlpha, kBeta };

  Family family = Family::kComplete;
  double p = 0.5;            // gnp edge probability, or edge_keep_prob for kAlpha
  int parameter = 1;         // alpha_max or beta_max
  double red_prob = 0.5;

  bool bipartite() const { return family == Family::kBeta; }
};

/// "complete", "gnp:<p>", "alpha:<a>", "beta:<b>". Throws ConfigError.
GeneratorSpec parse_family(std::string_view text);
std::string to_string(const GeneratorSpec& spec);

/// n vertices (n/2 per side for bipartite families).
ColoredGraph generate(const GeneratorSpec& spec, int n, std::uint64_t seed,
                      const OracleLimits& limits = {});

/// Base graph plus a seeded perfect matching recolored to have exactly k red
/// edges; only the matching's edges change color.
std::pair<ColoredGraph, PerfectMatching> gen_planted_yes(int n, int k, const GeneratorSpec& base,
                                                         std::uint64_t seed,
                                                         const OracleLimits& limits = {});

}  // namespace exmatch

#endif  // EXMATCH_GENERATORS_HPP
