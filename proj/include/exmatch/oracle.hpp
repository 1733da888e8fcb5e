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

// Brute-force ground truth for small instances. Every function checks the
// vertex count against a cap and throws OracleCapError rather than running
// for an unbounded time.

#ifndef EXMATCH_ORACLE_HPP
#define EXMATCH_ORACLE_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "exmatch/graph.hpp"

namespace exmatch {

struct OracleLimits {
  int max_enumerate_n = 20;
  int max_count_n = 24;
  int max_independence_n = 64;
};

/// Calls `visit` with the sorted edge list of every perfect matching, in
/// lexicographic order. Stops early when `visit` returns false.
void for_each_perfect_matching(const ColoredGraph& g,
                               const std::function<bool(std::span<const Edge>)>& visit,
                               const OracleLimits& limits = {});

std::vector<PerfectMatching> enumerate_perfect_matchings(const ColoredGraph& g,
                                                         const OracleLimits& limits = {});

/// Memoized count over sets of covered vertices; does not enumerate.
std::uint64_t count_perfect_matchings(const ColoredGraph& g, const OracleLimits& limits = {});

/// First perfect matching (in enumeration order) with exactly k red edges.
std::optional<PerfectMatching> em_decide_bruteforce(const ColoredGraph& g, int k,
                                                    const OracleLimits& limits = {});

/// Sorted distinct red counts over all perfect matchings.
std::vector<int> achievable_red_counts(const ColoredGraph& g, const OracleLimits& limits = {});

/// Exact independence number.
int independence_number(const ColoredGraph& g, const OracleLimits& limits = {});

/// Largest b such that b vertices of each side are pairwise non-adjacent.
/// Throws InputError without a bipartition.
int bipartite_independence_number(const ColoredGraph& g, const OracleLimits& limits = {});

}  // namespace exmatch

#endif  // EXMATCH_ORACLE_HPP
