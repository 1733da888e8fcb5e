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

// Lifts that make the distance-d independence number constant while keeping
// every Exact Matching answer. New vertices take the highest indices, so the
// original vertex ids are unchanged.
//
//   lift_to_dense:            u = n, v = n+1; blue (u, v) and (u, x) for all x.
//                             Every perfect matching contains (u, v).
//   lift_to_dense_bipartite:  u = n, u' = n+1 join side A; v = n+2, v' = n+3
//                             join side B. Blue edges from u to B + {v'} and
//                             from v to A + {u'}. Every perfect matching
//                             contains (u, v') and (v, u').

#ifndef EXMATCH_REDUCTIONS_HPP
#define EXMATCH_REDUCTIONS_HPP

#include <vector>

#include "exmatch/graph.hpp"

namespace exmatch {

ColoredGraph lift_to_dense(const ColoredGraph& g);

/// Throws InputError without a bipartition.
ColoredGraph lift_to_dense_bipartite(const ColoredGraph& g);

/// Edges every perfect matching of the lift must contain.
std::vector<Edge> forced_edges(const ColoredGraph& original, bool bipartite);

/// Strips the forced edges from a perfect matching of the lift. Throws
/// InputError if one is missing or the matching is not a PM of the lift.
PerfectMatching pullback_matching(const ColoredGraph& original, const ColoredGraph& lifted,
                                  const PerfectMatching& lifted_pm);

/// Largest vertex set with pairwise distance >= d (unreachable counts as
/// infinite). Brute force; throws OracleCapError above `max_n` vertices.
int distance_independence_number(const ColoredGraph& g, int d, int max_n = 20);

}  // namespace exmatch

#endif  // EXMATCH_REDUCTIONS_HPP
