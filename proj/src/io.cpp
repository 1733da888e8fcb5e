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

#include "exmatch/io.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "exmatch/errors.hpp"
#include "json.hpp"

namespace exmatch {
namespace {

using nlohmann::json;

Color parse_color(const std::string& s, const std::string& where) {
  if (s == "red") return Color::kRed;
  if (s == "blue") return Color::kBlue;
  throw ParseError(where + ": unknown color \"" + s + "\"");
}

// Shared structural validation so both readers report the same messages.
void check_edges(int n, const std::vector<ColoredEdge>& edges,
                 const std::vector<std::string>& labels) {
  std::set<Edge> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i].edge;
    if (e.u < 0 || e.v >= n) {
      throw ParseError(labels[i] + ": vertex out of range (n=" + std::to_string(n) + ")");
    }
    if (e.u == e.v) throw ParseError(labels[i] + ": self-loop at vertex " + std::to_string(e.u));
    if (!seen.insert(e).second) throw ParseError(labels[i] + ": duplicate edge " + to_string(e));
  }
}

void check_sides(const std::vector<ColoredEdge>& edges, const std::vector<Side>& sides,
                 const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i].edge;
    if (sides[e.u] == sides[e.v]) {
      throw ParseError(labels[i] + ": bipartition violation, both endpoints on side " +
                       (sides[e.u] == Side::kA ? "A" : "B"));
    }
  }
}

ColoredGraph parse_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("graph JSON must be an object");
  if (!doc.contains("n") || !doc["n"].is_number_integer()) {
    throw ParseError("\"n\" must be an integer");
  }
  const long long n_raw = doc["n"].get<long long>();
  if (n_raw < 0 || n_raw > (1 << 24)) throw ParseError("\"n\" out of range");
  const int n = static_cast<int>(n_raw);
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("\"edges\" must be an array");
  }
  std::vector<ColoredEdge> edges;
  std::vector<std::string> labels;
  const auto& arr = doc["edges"];
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& item = arr[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_string()) {
      throw ParseError(where + ": expected [u, v, \"red\"|\"blue\"]");
    }
    const long long a = item[0].get<long long>();
    const long long b = item[1].get<long long>();
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw ParseError(where + ": vertex out of range (n=" + std::to_string(n) + ")");
    }
    edges.push_back({Edge(static_cast<int>(a), static_cast<int>(b)),
                     parse_color(item[2].get<std::string>(), where)});
    labels.push_back(where);
  }
  check_edges(n, edges, labels);

  std::optional<std::vector<Side>> sides;
  if (doc.contains("bipartition") && !doc["bipartition"].is_null()) {
    const auto& bp = doc["bipartition"];
    if (!bp.is_array() || bp.size() != 2 || !bp[0].is_array() || !bp[1].is_array()) {
      throw ParseError("\"bipartition\" must be [arrayA, arrayB]");
    }
    std::vector<int> assigned(n, -1);
    for (int s = 0; s < 2; ++s) {
      for (const auto& v : bp[s]) {
        if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() >= n) {
          throw ParseError("bipartition: invalid vertex " + v.dump());
        }
        const int x = v.get<int>();
        if (assigned[x] != -1) {
          throw ParseError("bipartition: vertex " + std::to_string(x) + " listed twice");
        }
        assigned[x] = s;
      }
    }
    sides.emplace(n);
    for (int v = 0; v < n; ++v) {
      if (assigned[v] == -1) {
        throw ParseError("bipartition: vertex " + std::to_string(v) + " missing");
      }
      (*sides)[v] = assigned[v] == 0 ? Side::kA : Side::kB;
    }
    check_sides(edges, *sides, labels);
  }
  return ColoredGraph(n, std::move(edges), std::move(sides));
}

std::string serialize_json(const ColoredGraph& g) {
  json doc;
  doc["n"] = g.vertex_count();
  json edges = json::array();
  for (const auto& ce : g.edges()) {
    edges.push_back(json::array({ce.edge.u, ce.edge.v, std::string(to_string(ce.color))}));
  }
  doc["edges"] = std::move(edges);
  if (g.has_bipartition()) {
    doc["bipartition"] =
        json::array({json(g.side_vertices(Side::kA)), json(g.side_vertices(Side::kB))});
  }
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// DOT

enum class Tok { kId, kString, kLBrace, kRBrace, kLBracket, kRBracket, kEq, kComma,
                 kSemi, kEdgeOp, kArrow, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int line;
};

class DotLexer {
 public:
  explicit DotLexer(std::string_view src) : src_(src) {}

  Token next() {
    skip_space_and_comments();
    if (pos_ >= src_.size()) return {Tok::kEnd, "", line_};
    const char c = src_[pos_];
    const int line = line_;
    switch (c) {
      case '{': ++pos_; return {Tok::kLBrace, "{", line};
      case '}': ++pos_; return {Tok::kRBrace, "}", line};
      case '[': ++pos_; return {Tok::kLBracket, "[", line};
      case ']': ++pos_; return {Tok::kRBracket, "]", line};
      case '=': ++pos_; return {Tok::kEq, "=", line};
      case ',': ++pos_; return {Tok::kComma, ",", line};
      case ';': ++pos_; return {Tok::kSemi, ";", line};
      default: break;
    }
    if (c == '-' && pos_ + 1 < src_.size() && (src_[pos_ + 1] == '-' || src_[pos_ + 1] == '>')) {
      const bool arrow = src_[pos_ + 1] == '>';
      pos_ += 2;
      return {arrow ? Tok::kArrow : Tok::kEdgeOp, arrow ? "->" : "--", line};
    }
    if (c == '"') {
      ++pos_;
      std::string out;
      while (pos_ < src_.size() && src_[pos_] != '"') {
        if (src_[pos_] == '\\' && pos_ + 1 < src_.size()) ++pos_;
        if (src_[pos_] == '\n') ++line_;
        out.push_back(src_[pos_++]);
      }
      if (pos_ >= src_.size()) throw ParseError("DOT line " + std::to_string(line) + ": unterminated string");
      ++pos_;
      return {Tok::kString, out, line};
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '-') {
      std::string out;
      while (pos_ < src_.size()) {
        const char d = src_[pos_];
        if (!(std::isalnum(static_cast<unsigned char>(d)) || d == '_' || d == '.')) {
          if (!(d == '-' && out.empty())) break;
        }
        out.push_back(d);
        ++pos_;
      }
      return {Tok::kId, out, line};
    }
    throw ParseError("DOT line " + std::to_string(line) + ": unexpected character '" +
                     std::string(1, c) + "'");
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < src_.size()) {
      const char c = src_[pos_];
      if (c == '\n') {
        ++line_;
        ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else if (c == '#' || (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '/')) {
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (c == '/' && pos_ + 1 < src_.size() && src_[pos_ + 1] == '*') {
        pos_ += 2;
        while (pos_ + 1 < src_.size() && !(src_[pos_] == '*' && src_[pos_ + 1] == '/')) {
          if (src_[pos_] == '\n') ++line_;
          ++pos_;
        }
        pos_ += 2;
      } else {
        break;
      }
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

class DotParser {
 public:
  explicit DotParser(std::string_view src) : lex_(src) { advance(); }

  ColoredGraph parse() {
    if (cur_.kind == Tok::kId && lower(cur_.text) == "strict") advance();
    if (cur_.kind != Tok::kId) fail("expected 'graph'");
    if (lower(cur_.text) == "digraph") fail("directed graphs are not supported");
    if (lower(cur_.text) != "graph") fail("expected 'graph'");
    advance();
    if (cur_.kind == Tok::kId || cur_.kind == Tok::kString) advance();  // graph name
    expect(Tok::kLBrace, "'{'");
    while (cur_.kind != Tok::kRBrace) {
      if (cur_.kind == Tok::kEnd) fail("missing '}'");
      statement();
    }
    advance();
    if (cur_.kind != Tok::kEnd) fail("trailing content after '}'");
    return build();
  }

 private:
  using Attrs = std::map<std::string, std::string>;

  void statement() {
    if (cur_.kind == Tok::kSemi) {
      advance();
      return;
    }
    if (cur_.kind != Tok::kId && cur_.kind != Tok::kString) fail("expected statement");
    const Token first = cur_;
    advance();
    const std::string kw = lower(first.text);
    if (first.kind == Tok::kId && (kw == "graph" || kw == "node" || kw == "edge")) {
      attr_list();  // default attribute statements carry nothing we read
      return;
    }
    if (cur_.kind == Tok::kEq) {  // graph-level "a = b"
      advance();
      advance();
      return;
    }
    std::vector<Token> chain{first};
    while (cur_.kind == Tok::kEdgeOp || cur_.kind == Tok::kArrow) {
      if (cur_.kind == Tok::kArrow) fail("directed edge '->' is not supported");
      advance();
      if (cur_.kind != Tok::kId && cur_.kind != Tok::kString) fail("expected vertex after '--'");
      chain.push_back(cur_);
      advance();
    }
    const Attrs attrs = attr_list();
    if (chain.size() == 1) {
      const int v = vertex_id(first);
      touch(v);
      if (auto it = attrs.find("side"); it != attrs.end()) {
        Side s;
        if (it->second == "A") {
          s = Side::kA;
        } else if (it->second == "B") {
          s = Side::kB;
        } else {
          fail_at(first.line, "vertex " + std::to_string(v) + ": side must be \"A\" or \"B\"");
        }
        sides_[v] = s;
      }
    } else {
      const auto it = attrs.find("color");
      for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
        const int a = vertex_id(chain[i]);
        const int b = vertex_id(chain[i + 1]);
        touch(a);
        touch(b);
        const std::string where = "DOT line " + std::to_string(chain[i].line) + ": edge " +
                                  std::to_string(a) + " -- " + std::to_string(b);
        if (it == attrs.end()) throw ParseError(where + ": missing color");
        edges_.push_back({Edge(a, b), parse_color(it->second, where)});
        labels_.push_back(where);
      }
    }
  }

  Attrs attr_list() {
    Attrs attrs;
    while (cur_.kind == Tok::kLBracket) {
      advance();
      while (cur_.kind != Tok::kRBracket) {
        if (cur_.kind != Tok::kId && cur_.kind != Tok::kString) fail("expected attribute name");
        const std::string key = cur_.text;
        advance();
        expect(Tok::kEq, "'='");
        if (cur_.kind != Tok::kId && cur_.kind != Tok::kString) fail("expected attribute value");
        attrs[key] = cur_.text;
        advance();
        if (cur_.kind == Tok::kComma || cur_.kind == Tok::kSemi) advance();
      }
      advance();
    }
    if (cur_.kind == Tok::kSemi) advance();
    return attrs;
  }

  int vertex_id(const Token& t) {
    const std::string& s = t.text;
    if (s.empty() || !std::all_of(s.begin(), s.end(),
                                  [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      fail_at(t.line, "vertex id \"" + s + "\" is not a non-negative integer");
    }
    if (s.size() > 8) fail_at(t.line, "vertex id " + s + " out of range");
    return std::stoi(s);
  }

  void touch(int v) { max_vertex_ = std::max(max_vertex_, v); }

  ColoredGraph build() {
    const int n = max_vertex_ + 1;
    check_edges(n, edges_, labels_);
    std::optional<std::vector<Side>> sides;
    if (!sides_.empty()) {
      sides.emplace(n);
      for (int v = 0; v < n; ++v) {
        const auto it = sides_.find(v);
        if (it == sides_.end()) {
          throw ParseError("bipartition: vertex " + std::to_string(v) + " missing side");
        }
        (*sides)[v] = it->second;
      }
      check_sides(edges_, *sides, labels_);
    }
    return ColoredGraph(n, std::move(edges_), std::move(sides));
  }

  static std::string lower(std::string s) {
    for (auto& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
  }

  void advance() { cur_ = lex_.next(); }
  void expect(Tok k, const char* what) {
    if (cur_.kind != k) fail(std::string("expected ") + what);
    advance();
  }
  [[noreturn]] void fail(const std::string& msg) { fail_at(cur_.line, msg); }
  [[noreturn]] static void fail_at(int line, const std::string& msg) {
    throw ParseError("DOT line " + std::to_string(line) + ": " + msg);
  }

  DotLexer lex_;
  Token cur_{Tok::kEnd, "", 0};
  int max_vertex_ = -1;
  std::vector<ColoredEdge> edges_;
  std::vector<std::string> labels_;
  std::map<int, Side> sides_;
};

std::string serialize_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_bipartition()) out << " [side=\"" << (g.side(v) == Side::kA ? "A" : "B") << "\"]";
    out << ";\n";
  }
  for (const auto& ce : g.edges()) {
    out << "  " << ce.edge.u << " -- " << ce.edge.v << " [color=\"" << to_string(ce.color)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

ColoredGraph parse_graph(std::string_view text, GraphFormat format) {
  if (format == GraphFormat::kJson) return parse_json(text);
  return DotParser(text).parse();
}

std::string serialize_graph(const ColoredGraph& g, GraphFormat format) {
  return format == GraphFormat::kJson ? serialize_json(g) : serialize_dot(g);
}

GraphFormat format_from_path(std::string_view path) {
  auto ends_with = [&](std::string_view suf) {
    return path.size() >= suf.size() && path.substr(path.size() - suf.size()) == suf;
  };
  if (ends_with(".dot") || ends_with(".gv")) return GraphFormat::kDot;
  return GraphFormat::kJson;
}

ColoredGraph read_graph_file(const std::string& path) {
  return parse_graph(slurp(path), format_from_path(path));
}

void write_graph_file(const ColoredGraph& g, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << serialize_graph(g, format_from_path(path));
}

std::vector<Edge> parse_edge_list(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text.begin(), json_text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  // Accept either a bare array or an object with an "edges"/"witness" array.
  if (doc.is_object()) {
    if (doc.contains("edges")) {
      doc = doc["edges"];
    } else if (doc.contains("witness")) {
      doc = doc["witness"];
    }
  }
  if (!doc.is_array()) throw ParseError("matching must be a JSON array of [u, v] pairs");
  std::vector<Edge> out;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& p = doc[i];
    if (!p.is_array() || p.size() < 2 || !p[0].is_number_integer() || !p[1].is_number_integer()) {
      throw ParseError("matching[" + std::to_string(i) + "]: expected [u, v]");
    }
    out.emplace_back(p[0].get<int>(), p[1].get<int>());
  }
  return out;
}

std::string serialize_edge_list(std::span<const Edge> edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(json::array({e.u, e.v}));
  return arr.dump();
}

PerfectMatching read_matching_file(const ColoredGraph& g, const std::string& path) {
  auto edges = parse_edge_list(slurp(path));
  if (!is_perfect_matching(g, edges)) {
    throw InputError(path + ": not a perfect matching of the graph");
  }
  return PerfectMatching(g, std::move(edges));
}

}  // namespace exmatch
