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

// Python bindings. Graphs and matchings cross the boundary as plain
// Python values: edges are (u, v) tuples and colors are "red" / "blue".

#include <optional>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "exmatch/errors.hpp"
#include "exmatch/generators.hpp"
#include "exmatch/graph.hpp"
#include "exmatch/io.hpp"
#include "exmatch/matching.hpp"
#include "exmatch/oracle.hpp"
#include "exmatch/reductions.hpp"
#include "exmatch/skip.hpp"
#include "exmatch/solver.hpp"

namespace py = pybind11;

namespace exmatch {
namespace {

using PyEdge = std::pair<int, int>;
using PyColoredEdge = std::tuple<int, int, std::string>;

Color parse_color(const std::string& s) {
  if (s == "red") return Color::kRed;
  if (s == "blue") return Color::kBlue;
  throw InputError("unknown color '" + s + "'");
}

ColoredGraph make_graph(int n, const std::vector<PyColoredEdge>& edges,
                        const std::optional<std::pair<std::vector<int>, std::vector<int>>>& parts) {
  std::vector<ColoredEdge> out;
  out.reserve(edges.size());
  for (const auto& [u, v, c] : edges) out.push_back({Edge(u, v), parse_color(c)});
  std::optional<std::vector<Side>> sides;
  if (parts) {
    std::vector<int> seen(n, 0);
    sides.emplace(n, Side::kA);
    for (int v : parts->first) {
      if (v < 0 || v >= n || seen[v]++) throw InputError("bad bipartition vertex");
    }
    for (int v : parts->second) {
      if (v < 0 || v >= n || seen[v]++) throw InputError("bad bipartition vertex");
      (*sides)[v] = Side::kB;
    }
    for (int v = 0; v < n; ++v) {
      if (!seen[v]) throw InputError("bipartition misses vertex " + std::to_string(v));
    }
  }
  return ColoredGraph(n, std::move(out), std::move(sides));
}

std::vector<PyEdge> to_py(std::span<const Edge> edges) {
  std::vector<PyEdge> out;
  for (const Edge& e : edges) out.emplace_back(e.u, e.v);
  return out;
}

std::optional<std::vector<PyEdge>> to_py(const std::optional<PerfectMatching>& m) {
  if (!m) return std::nullopt;
  return to_py(m->edges());
}

PerfectMatching to_matching(const ColoredGraph& g, const std::vector<PyEdge>& edges) {
  std::vector<Edge> es;
  for (const auto& [u, v] : edges) es.emplace_back(u, v);
  return PerfectMatching(g, std::move(es));
}

SolverParams make_params(std::optional<int> alpha, std::optional<int> beta,
                         const std::string& mode, std::optional<int> L_cap, int threads) {
  SolverParams p;
  p.alpha = alpha;
  p.beta = beta;
  if (mode == "auto") {
    p.mode = SolverMode::kAuto;
  } else if (mode == "general") {
    p.mode = SolverMode::kGeneral;
  } else if (mode == "bipartite") {
    p.mode = SolverMode::kBipartite;
  } else {
    throw ConfigError("mode must be auto, general or bipartite");
  }
  p.L_cap = L_cap;
  p.threads = threads;
  return p;
}

py::int_ to_py_int(const BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::dict cycle_dict(const AlternatingCycle& c) {
  py::dict d;
  d["vertices"] = c.vertices;
  d["weight"] = c.weight;
  return d;
}

}  // namespace
}  // namespace exmatch

PYBIND11_MODULE(_core, m) {
  using namespace exmatch;
  m.doc() = "Exact Matching on red/blue edge-colored graphs";

  static py::exception<Error> error(m, "Error");
  static py::exception<InputError> input_error(m, "InputError", error.ptr());
  static py::exception<ParseError> parse_error(m, "ParseError", input_error.ptr());
  static py::exception<ConfigError> config_error(m, "ConfigError", error.ptr());
  static py::exception<ParameterTooSmallError> too_small(m, "ParameterTooSmallError",
                                                         config_error.ptr());
  static py::exception<OracleCapError> cap_error(m, "OracleCapError", error.ptr());
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      PyErr_SetString(parse_error.ptr(), e.what());
    } catch (const InputError& e) {
      PyErr_SetString(input_error.ptr(), e.what());
    } catch (const ParameterTooSmallError& e) {
      PyErr_SetString(too_small.ptr(), e.what());
    } catch (const ConfigError& e) {
      PyErr_SetString(config_error.ptr(), e.what());
    } catch (const OracleCapError& e) {
      PyErr_SetString(cap_error.ptr(), e.what());
    } catch (const Error& e) {
      PyErr_SetString(error.ptr(), e.what());
    }
  });

  py::class_<ColoredGraph>(m, "Graph")
      .def(py::init(&make_graph), py::arg("n"), py::arg("edges"),
           py::arg("bipartition") = py::none())
      .def_property_readonly("n", &ColoredGraph::vertex_count)
      .def_property_readonly("edge_count", &ColoredGraph::edge_count)
      .def_property_readonly("is_bipartite", &ColoredGraph::has_bipartition)
      .def("edges",
           [](const ColoredGraph& g) {
             std::vector<PyColoredEdge> out;
             for (const auto& ce : g.edges()) {
               out.emplace_back(ce.edge.u, ce.edge.v, std::string(to_string(ce.color)));
             }
             return out;
           })
      .def("color",
           [](const ColoredGraph& g, int u, int v) -> std::optional<std::string> {
             const auto c = g.color(u, v);
             if (!c) return std::nullopt;
             return std::string(to_string(*c));
           })
      .def("to_json", [](const ColoredGraph& g) { return serialize_graph(g, GraphFormat::kJson); })
      .def("to_dot", [](const ColoredGraph& g) { return serialize_graph(g, GraphFormat::kDot); })
      .def_static("from_json",
                  [](const std::string& s) { return parse_graph(s, GraphFormat::kJson); })
      .def_static("from_dot", [](const std::string& s) { return parse_graph(s, GraphFormat::kDot); })
      .def(py::self == py::self)
      .def("__repr__", [](const ColoredGraph& g) {
        return "Graph(n=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("is_perfect_matching",
        [](const ColoredGraph& g, const std::vector<PyEdge>& edges) {
          std::vector<Edge> es;
          for (const auto& [u, v] : edges) es.emplace_back(u, v);
          return is_perfect_matching(g, es);
        });
  m.def("red_count", [](const ColoredGraph& g, const std::vector<PyEdge>& edges) {
    return to_matching(g, edges).red_count();
  });

  m.def(
      "solve",
      [](const ColoredGraph& g, int k, std::optional<int> alpha, std::optional<int> beta,
         const std::string& mode, std::optional<int> L_cap, int threads) {
        const SolverParams p = make_params(alpha, beta, mode, L_cap, threads);
        Verdict v;
        {
          py::gil_scoped_release release;
          v = solve_em(g, k, p);
        }
        py::dict d;
        d["verdict"] = to_string(v.kind);
        d["witness"] = to_py(v.witness);
        d["L_used"] = v.L_used;
        d["phase1_r"] = v.phase1_r;
        d["iterations"] = v.iterations;
        d["bipartite"] = v.bipartite;
        d["parameter"] = v.parameter;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("alpha") = py::none(),
      py::arg("beta") = py::none(), py::arg("mode") = "auto", py::arg("L_cap") = py::none(),
      py::arg("threads") = 1);

  m.def(
      "approx",
      [](const ColoredGraph& g, int k, std::optional<int> alpha, std::optional<int> beta,
         bool bipartite) {
        const SolverParams p = make_params(alpha, beta, "auto", std::nullopt, 1);
        const ApproxResult r = bipartite ? approx_em_bipartite(g, k, p) : approx_em(g, k, p);
        py::dict d;
        d["matching"] = to_py(r.matching);
        d["iterations"] = r.iterations;
        d["threshold"] = r.threshold;
        d["parameter"] = r.parameter;
        return d;
      },
      py::arg("graph"), py::arg("k"), py::arg("alpha") = py::none(),
      py::arg("beta") = py::none(), py::arg("bipartite") = false);

  m.def(
      "max_weight_perfect_matching",
      [](const ColoredGraph& g, const std::vector<int>& weights) {
        if (static_cast<int>(weights.size()) != g.edge_count()) {
          throw InputError("one weight per edge is required");
        }
        return to_py(max_weight_perfect_matching(g, weights));
      },
      py::arg("graph"), py::arg("weights"));
  m.def("min_red_pm", [](const ColoredGraph& g) { return to_py(min_red_pm(g)); });
  m.def("max_red_pm", [](const ColoredGraph& g) { return to_py(max_red_pm(g)); });

  m.def("enumerate_perfect_matchings", [](const ColoredGraph& g) {
    std::vector<std::vector<PyEdge>> out;
    for (const auto& pm : enumerate_perfect_matchings(g)) out.push_back(to_py(pm.edges()));
    return out;
  });
  m.def("count_perfect_matchings",
        [](const ColoredGraph& g) { return count_perfect_matchings(g); });
  m.def("em_decide_bruteforce",
        [](const ColoredGraph& g, int k) { return to_py(em_decide_bruteforce(g, k)); });
  m.def("independence_number", [](const ColoredGraph& g) { return independence_number(g); });
  m.def("bipartite_independence_number",
        [](const ColoredGraph& g) { return bipartite_independence_number(g); });

  m.def("symmetric_difference",
        [](const ColoredGraph& g, const std::vector<PyEdge>& m1, const std::vector<PyEdge>& m2) {
          const CycleSet s = symmetric_difference(g, to_matching(g, m1), to_matching(g, m2));
          py::list cycles;
          for (const auto& c : s.cycles) cycles.append(cycle_dict(c));
          return cycles;
        });
  m.def(
      "find_skip",
      [](const ColoredGraph& g, const std::vector<PyEdge>& m1, const std::vector<PyEdge>& m2,
         const std::vector<int>& weights) -> std::optional<py::dict> {
        const PerfectMatching a = to_matching(g, m1);
        const CycleSet s = symmetric_difference(g, a, to_matching(g, m2));
        WeightFilter filter;
        for (int w : weights) filter = filter | WeightFilter{w};
        for (const auto& c : s.cycles) {
          if (auto sk = find_skip(g, a, c, filter)) {
            py::dict d;
            d["chords"] = to_py(std::vector<Edge>{sk->e1, sk->e2});
            d["weight"] = sk->weight;
            d["cycle"] = cycle_dict(sk->cycle);
            d["shortcut"] = cycle_dict(sk->shortcut);
            return d;
          }
        }
        return std::nullopt;
      },
      py::arg("graph"), py::arg("m1"), py::arg("m2"),
      py::arg("weights") = std::vector<int>{-4, -3, -2, -1, 0, 1, 2, 3, 4});

  m.def("lift_to_dense", &lift_to_dense);
  m.def("lift_to_dense_bipartite", &lift_to_dense_bipartite);
  m.def("pullback_matching", [](const ColoredGraph& original, const ColoredGraph& lifted,
                                const std::vector<PyEdge>& pm) {
    return to_py(pullback_matching(original, lifted, to_matching(lifted, pm)).edges());
  });
  m.def("distance_independence_number", &distance_independence_number, py::arg("graph"),
        py::arg("d"), py::arg("max_n") = 20);

  m.def(
      "generate",
      [](const std::string& family, int n, std::uint64_t seed) {
        return generate(parse_family(family), n, seed);
      },
      py::arg("family"), py::arg("n"), py::arg("seed") = 0);
  m.def(
      "gen_planted_yes",
      [](const std::string& family, int n, int k, std::uint64_t seed) {
        auto [g, w] = gen_planted_yes(n, k, parse_family(family), seed);
        return std::make_pair(std::move(g), to_py(w.edges()));
      },
      py::arg("family"), py::arg("n"), py::arg("k"), py::arg("seed") = 0);

  m.def("t_alpha", [](int a) { return to_py_int(t_alpha(a)); });
  m.def("f_alpha", [](int a) { return to_py_int(f_alpha(a)); });
  m.def("t_beta", [](int b) { return to_py_int(t_beta(b)); });
  m.def("f_beta", [](int b) { return to_py_int(f_beta(b)); });
}
