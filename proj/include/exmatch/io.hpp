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

// Graph and matching file formats.
//
// JSON:
//   {"n": 4, "edges": [[0, 1, "red"], [1, 2, "blue"], ...],
//    "bipartition": [[0, 2], [1, 3]]}          // optional
//
// DOT (undirected):
//   graph G {
//     0 [side="A"];                             // side optional, all-or-none
//     0 -- 1 [color="red"];
//   }
//
// Unknown DOT attributes are ignored on read and never written. The vertex
// count of a DOT graph is one more than the largest vertex id mentioned;
// the writer emits a node statement for every vertex so isolated vertices
// survive a round trip.
//
// Matchings are JSON arrays of vertex pairs: [[0, 1], [2, 3]].

#ifndef EXMATCH_IO_HPP
#define EXMATCH_IO_HPP

#include <string>
#include <string_view>
#include <vector>

#include "exmatch/graph.hpp"

namespace exmatch {

enum class GraphFormat { kJson, kDot };

/// Throws ParseError naming the offending element.
ColoredGraph parse_graph(std::string_view text, GraphFormat format);
std::string serialize_graph(const ColoredGraph& g, GraphFormat format);

/// Picks a format from a file extension (".json" or ".dot"/".gv").
GraphFormat format_from_path(std::string_view path);

ColoredGraph read_graph_file(const std::string& path);
void write_graph_file(const ColoredGraph& g, const std::string& path);

std::vector<Edge> parse_edge_list(std::string_view json_text);
std::string serialize_edge_list(std::span<const Edge> edges);
PerfectMatching read_matching_file(const ColoredGraph& g, const std::string& path);

}  // namespace exmatch

#endif  // EXMATCH_IO_HPP
