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

// Exact Matching: does G have a perfect matching with exactly k red edges?
//
// solve_em runs two phases. Phase 1 (approx_em) moves from the min-red and
// max-red perfect matchings towards the target and stops at a matching M with
// k - T <= r(M) <= k on yes-instances, where T = 2 * 4^alpha (general) or
// 2 * 4^(2 beta + 2) (bipartite). Phase 2 (small_diff_search) guesses the
// edges of one color class of M xor M* for an unknown solution M*, smallest
// guesses first, and completes each guess with a one-color perfect matching.

#ifndef EXMATCH_SOLVER_HPP
#define EXMATCH_SOLVER_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "exmatch/graph.hpp"
#include "exmatch/oracle.hpp"

namespace exmatch {

using BigInt = boost::multiprecision::cpp_int;

BigInt t_alpha(int alpha);  // 256 * 4^(2 alpha)
BigInt f_alpha(int alpha);  // 1000 * t_alpha^6
BigInt t_beta(int beta);    // 256 * 4^(4 beta + 4)
BigInt f_beta(int beta);    // 1000 * t_beta^6

enum class SolverMode {
  kAuto,       // bipartite iff the graph carries a bipartition
  kGeneral,
  kBipartite,
};

struct SolverParams {
  std::optional<int> alpha;  // measured when absent and n is within the oracle cap
  std::optional<int> beta;
  SolverMode mode = SolverMode::kAuto;
  std::optional<int> L_cap;  // phase-2 subset size limit; none means n
  std::optional<long long> t_override;  // replaces the phase-1 threshold T
  bool deterministic = true;
  int threads = 1;
  OracleLimits oracle;
};

struct ApproxResult {
  std::optional<PerfectMatching> matching;  // absent iff G has no PM
  int iterations = 0;
  long long threshold = 0;  // T
  int parameter = 0;        // effective alpha or beta
  bool bipartite = false;
};

/// Phase 1 on general graphs. Throws InputError unless n is even and
/// 0 <= k <= n/2, ConfigError if alpha is unknown and cannot be measured,
/// ParameterTooSmallError if a heavy cycle has no negative skip.
ApproxResult approx_em(const ColoredGraph& g, int k, const SolverParams& params = {});

/// Phase 1 on bipartite graphs, using biskips.
ApproxResult approx_em_bipartite(const ColoredGraph& g, int k, const SolverParams& params = {});

/// Completes a guess for the `color` edges of M xor M*. For red: R' = R(M)
/// xor guess must be a matching of size k, and the vertices it leaves
/// uncovered must have a blue perfect matching. Blue is symmetric with
/// |B'| = n/2 - k. Throws InputError if a guess edge is missing from g or
/// has the other color.
std::optional<PerfectMatching> recover_from_color_guess(const ColoredGraph& g,
                                                        const PerfectMatching& m,
                                                        std::span<const Edge> guess, Color color,
                                                        int k);

/// Tries every guess of at most L edges of `color`, by increasing size and
/// lexicographically within a size, and returns the first completion.
std::optional<PerfectMatching> small_diff_search(const ColoredGraph& g, const PerfectMatching& m,
                                                 int k, int L, Color color,
                                                 const SolverParams& params = {});

/// Both colors, interleaved by size: red then blue for each size 0..L.
std::optional<PerfectMatching> small_diff_search(const ColoredGraph& g, const PerfectMatching& m,
                                                 int k, int L, const SolverParams& params = {});

struct Verdict {
  enum class Kind { kYes, kNoCertified, kUnknown };

  Kind kind = Kind::kUnknown;
  std::optional<PerfectMatching> witness;
  int L_used = 0;     // guess size of the witness, else the exhausted budget
  int phase1_r = -1;  // -1 when phase 1 did not run
  int iterations = 0;
  bool bipartite = false;
  int parameter = 0;
  std::string reason;
};

std::string to_string(Verdict::Kind kind);  // "yes", "no", "unknown"

Verdict solve_em(const ColoredGraph& g, int k, const SolverParams& params = {});

/// {"verdict", "witness"?, "L_used", "phase1_r", "iterations"}.
std::string verdict_to_json(const Verdict& v);

}  // namespace exmatch

#endif  // EXMATCH_SOLVER_HPP
