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

#include "exmatch/cli.hpp"

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "exmatch/errors.hpp"
#include "exmatch/generators.hpp"
#include "exmatch/graph.hpp"
#include "exmatch/io.hpp"
#include "exmatch/oracle.hpp"
#include "exmatch/reductions.hpp"
#include "exmatch/skip.hpp"
#include "exmatch/solver.hpp"
#include "json.hpp"

namespace exmatch::cli {
namespace {

using nlohmann::ordered_json;

ordered_json edges_json(std::span<const Edge> edges) {
  auto arr = ordered_json::array();
  for (const Edge& e : edges) arr.push_back({e.u, e.v});
  return arr;
}

// "--alpha 3", "--beta auto", ...; an empty string means the flag was absent.
struct ParameterFlags {
  std::string alpha;
  std::string beta;
  std::string mode = "auto";

  void add_to(CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "Independence number bound, or 'auto' to measure it");
    cmd->add_option("--beta", beta,
                    "Bipartite independence number bound, or 'auto' to measure it");
    cmd->add_option("--mode", mode, "auto, general or bipartite")
        ->check(CLI::IsMember({"auto", "general", "bipartite"}));
  }

  void apply(SolverParams& p) const {
    if (!alpha.empty() && !beta.empty()) {
      throw ConfigError("pass at most one of --alpha and --beta");
    }
    auto parse = [](const std::string& s, const char* name) -> std::optional<int> {
      if (s == "auto") return std::nullopt;
      try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size() && v >= 0) return v;
      } catch (const std::exception&) {
      }
      throw ConfigError(std::string("--") + name + " expects a non-negative integer or 'auto'");
    };
    if (mode == "general") p.mode = SolverMode::kGeneral;
    if (mode == "bipartite") p.mode = SolverMode::kBipartite;
    if (!alpha.empty()) {
      p.alpha = parse(alpha, "alpha");
      if (mode == "auto") p.mode = SolverMode::kGeneral;
    }
    if (!beta.empty()) {
      p.beta = parse(beta, "beta");
      if (mode == "auto") p.mode = SolverMode::kBipartite;
    }
  }
};

std::ofstream open_output(const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path);
  return f;
}

void emit_graph(const ColoredGraph& g, const std::string& path, const std::string& format,
                std::ostream& out) {
  if (path.empty()) {
    const std::string text =
        serialize_graph(g, format == "dot" ? GraphFormat::kDot : GraphFormat::kJson);
    out << text;
    if (text.empty() || text.back() != '\n') out << "\n";
    return;
  }
  write_graph_file(g, path);
}

int solve_command(const std::string& path, int k, const ParameterFlags& flags,
                  std::optional<int> l_cap, bool deterministic, bool json, int threads,
                  std::ostream& out) {
  const ColoredGraph g = read_graph_file(path);
  SolverParams params;
  flags.apply(params);
  params.L_cap = l_cap;
  params.deterministic = deterministic;
  params.threads = threads;
  const Verdict v = solve_em(g, k, params);
  if (json) {
    out << verdict_to_json(v) << "\n";
  } else {
    out << to_string(v.kind);
    if (v.witness) out << " " << serialize_edge_list(v.witness->edges());
    out << "\n";
    out << "phase1_r=" << v.phase1_r << " iterations=" << v.iterations << " L_used=" << v.L_used;
    if (!v.reason.empty()) out << " (" << v.reason << ")";
    out << "\n";
  }
  switch (v.kind) {
    case Verdict::Kind::kYes:
      return kExitYes;
    case Verdict::Kind::kNoCertified:
      return kExitNo;
    case Verdict::Kind::kUnknown:
      return kExitUnknown;
  }
  return kExitInternal;
}

int approx_command(const std::string& path, int k, const ParameterFlags& flags,
                   std::ostream& out) {
  const ColoredGraph g = read_graph_file(path);
  SolverParams params;
  flags.apply(params);
  bool bipartite = g.has_bipartition();
  if (params.mode == SolverMode::kGeneral) bipartite = false;
  if (params.mode == SolverMode::kBipartite) bipartite = true;
  const ApproxResult r = bipartite ? approx_em_bipartite(g, k, params) : approx_em(g, k, params);
  ordered_json j;
  j["bipartite"] = r.bipartite;
  j["parameter"] = r.parameter;
  j["threshold"] = r.threshold;
  j["iterations"] = r.iterations;
  if (r.matching) {
    j["r"] = r.matching->red_count();
    j["matching"] = edges_json(r.matching->edges());
  } else {
    j["r"] = nullptr;
    j["matching"] = nullptr;
  }
  out << j.dump() << "\n";
  return kExitYes;
}

int oracle_command(const std::string& path, std::optional<int> k, bool count, bool alpha,
                   bool beta, std::ostream& out) {
  const ColoredGraph g = read_graph_file(path);
  const int queries = (k ? 1 : 0) + count + alpha + beta;
  if (queries == 0) throw ConfigError("oracle needs at least one of -k, --count, --alpha, --beta");
  auto line = [&](const std::string& key, const std::string& value) {
    if (queries > 1) out << key << ": ";
    out << value << "\n";
  };
  if (count) line("count", std::to_string(count_perfect_matchings(g)));
  if (alpha) line("alpha", std::to_string(independence_number(g)));
  if (beta) line("beta", std::to_string(bipartite_independence_number(g)));
  if (k) {
    const auto w = em_decide_bruteforce(g, *k);
    line("k=" + std::to_string(*k), w ? "yes " + serialize_edge_list(w->edges()) : "no");
  }
  return kExitYes;
}

ordered_json skip_json(const std::optional<Skip>& s) {
  if (!s) return nullptr;
  ordered_json j;
  j["e1"] = {s->e1.u, s->e1.v};
  j["e2"] = {s->e2.u, s->e2.v};
  j["weight"] = s->weight;
  j["shortcut_length"] = s->shortcut.length();
  return j;
}

ordered_json biskip_json(const std::optional<Biskip>& s) {
  if (!s) return nullptr;
  ordered_json j;
  j["a1"] = {s->a1.tail, s->a1.head};
  j["a2"] = {s->a2.tail, s->a2.head};
  j["weight"] = s->weight;
  j["lengths"] = {s->first.length(), s->second.length()};
  return j;
}

int analyze_command(const std::string& path, const std::vector<std::string>& matchings,
                    std::ostream& out) {
  const ColoredGraph g = read_graph_file(path);
  const PerfectMatching m1 = read_matching_file(g, matchings.at(0));
  const PerfectMatching m2 = read_matching_file(g, matchings.at(1));
  const CycleSet cycles = symmetric_difference(g, m1, m2);
  ordered_json report;
  report["r1"] = m1.red_count();
  report["r2"] = m2.red_count();
  report["total_weight"] = cycles.total_weight;
  report["cycles"] = ordered_json::array();
  std::optional<DirectedView> gm;
  if (g.has_bipartition()) gm.emplace(g, m1);
  const std::pair<const char*, WeightFilter> filters[] = {
      {"negative", WeightFilter::negative()},
      {"zero", WeightFilter{0}},
      {"positive", WeightFilter::positive()},
  };
  for (const auto& c : cycles.cycles) {
    ordered_json cj;
    cj["vertices"] = c.vertices;
    cj["weight"] = c.weight;
    const auto pairs = pair_decomposition(g, m1, c);
    auto labels = ordered_json::array();
    for (const auto& p : pairs) labels.push_back(p.label);
    cj["pairs"] = labels;
    auto bundles = ordered_json::array();
    for (const auto& b : find_bundles(pairs)) {
      bundles.push_back({{"sign", b.sign}, {"first", b.first_pair}, {"second", b.second_pair}});
    }
    cj["bundles"] = bundles;
    auto saps = ordered_json::array();
    for (const auto& s : find_saps(pairs)) {
      saps.push_back(
          {{"length", s.pairs.size()}, {"weight", s.weight}, {"nonzero", s.nonzero_count}});
    }
    cj["saps"] = saps;
    ordered_json skips;
    for (const auto& [name, filter] : filters) skips[name] = skip_json(find_skip(g, m1, c, filter));
    cj["skips"] = skips;
    if (gm) {
      ordered_json biskips;
      for (const auto& [name, filter] : filters) {
        biskips[name] = biskip_json(find_biskip(*gm, c, filter));
      }
      cj["biskips"] = biskips;
    }
    report["cycles"].push_back(cj);
  }
  out << report.dump(2) << "\n";
  return kExitYes;
}

struct GenFlags {
  std::string family = "complete";
  int n = 0;
  std::uint64_t seed = 0;
  double red_prob = 0.5;
  double keep_prob = 0.5;
  std::optional<int> planted_k;
  std::string out_path;
  std::string witness_path;
  std::string format = "json";
};

int gen_command(const GenFlags& f, std::ostream& out) {
  GeneratorSpec spec = parse_family(f.family);
  spec.red_prob = f.red_prob;
  if (spec.family == GeneratorSpec::Family::kAlpha) spec.p = f.keep_prob;
  if (f.planted_k) {
    auto [g, witness] = gen_planted_yes(f.n, *f.planted_k, spec, f.seed);
    emit_graph(g, f.out_path, f.format, out);
    if (!f.witness_path.empty()) {
      auto w = open_output(f.witness_path);
      w << serialize_edge_list(witness.edges()) << "\n";
    }
    return kExitYes;
  }
  if (!f.witness_path.empty()) throw ConfigError("--witness-out requires --planted-k");
  emit_graph(generate(spec, f.n, f.seed), f.out_path, f.format, out);
  return kExitYes;
}

int reduce_command(const std::string& path, bool bipartite, const std::string& out_path,
                   const std::string& format, std::ostream& out) {
  const ColoredGraph g = read_graph_file(path);
  emit_graph(bipartite ? lift_to_dense_bipartite(g) : lift_to_dense(g), out_path, format, out);
  return kExitYes;
}

struct BenchFlags {
  std::string family = "complete";
  std::vector<int> sizes;
  std::uint64_t seed = 0;
  std::string out_path;
  std::optional<int> k;
  int instances = 1;
  std::optional<int> l_cap;
  bool planted = false;
};

int bench_command(const BenchFlags& f, std::ostream& out) {
  GeneratorSpec spec = parse_family(f.family);
  std::ostringstream csv;
  csv << "n,alpha_or_beta,k,verdict,L_used,phase1_r,millis\n";
  std::uint64_t seed = f.seed;
  for (int n : f.sizes) {
    if (n < 0 || n % 2 != 0) throw ConfigError("bench sizes must be even and non-negative");
    const int k = f.k ? *f.k : n / 4;
    for (int i = 0; i < f.instances; ++i, ++seed) {
      const ColoredGraph g =
          f.planted ? gen_planted_yes(n, k, spec, seed).first : generate(spec, n, seed);
      SolverParams params;
      params.L_cap = f.l_cap;
      if (spec.family == GeneratorSpec::Family::kAlpha) params.alpha = spec.parameter;
      if (spec.family == GeneratorSpec::Family::kBeta) params.beta = spec.parameter;
      if (spec.family == GeneratorSpec::Family::kComplete) params.alpha = 1;
      const auto start = std::chrono::steady_clock::now();
      const Verdict v = solve_em(g, k, params);
      const auto stop = std::chrono::steady_clock::now();
      const auto millis =
          std::chrono::duration<double, std::milli>(stop - start).count();
      csv << n << "," << v.parameter << "," << k << "," << to_string(v.kind) << "," << v.L_used
          << "," << v.phase1_r << "," << millis << "\n";
    }
  }
  if (f.out_path.empty()) {
    out << csv.str();
  } else {
    auto file = open_output(f.out_path);
    file << csv.str();
  }
  return kExitYes;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact perfect matchings with k red edges on red/blue graphs", "exmatch"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "exmatch 0.1.0");

  std::string graph_path;
  int k = 0;
  ParameterFlags params;
  std::optional<int> l_cap;
  bool deterministic = true;
  bool json = false;
  int threads = 1;

  auto* solve = app.add_subcommand("solve", "Decide Exact Matching for one k");
  solve->add_option("graph", graph_path, "Graph file (.json or .dot)")->required();
  solve->add_option("-k", k, "Required number of red edges")->required();
  params.add_to(solve);
  solve->add_option("--L-cap", l_cap, "Largest phase-2 guess size")->check(CLI::NonNegativeNumber);
  solve->add_flag("--deterministic,!--any-witness", deterministic,
                  "Return the first witness in canonical order (default)");
  solve->add_flag("--json", json, "Print the verdict as JSON");
  solve->add_option("--threads", threads, "Phase-2 worker threads")->check(CLI::PositiveNumber);

  auto* approx = app.add_subcommand("approx", "Run phase 1 only");
  approx->add_option("graph", graph_path, "Graph file")->required();
  approx->add_option("-k", k, "Required number of red edges")->required();
  ParameterFlags approx_params;
  approx_params.add_to(approx);

  auto* oracle = app.add_subcommand("oracle", "Brute-force answers for small graphs");
  oracle->add_option("graph", graph_path, "Graph file")->required();
  std::optional<int> oracle_k;
  bool count = false, alpha = false, beta = false;
  oracle->add_option("-k", oracle_k, "Decide Exact Matching for this k");
  oracle->add_flag("--count", count, "Count perfect matchings");
  oracle->add_flag("--alpha", alpha, "Independence number");
  oracle->add_flag("--beta", beta, "Bipartite independence number");

  auto* analyze = app.add_subcommand("analyze", "Pairs, bundles, SAPs and skips of M1 xor M2");
  analyze->add_option("graph", graph_path, "Graph file")->required();
  std::vector<std::string> matchings;
  analyze->add_option("--matchings", matchings, "Two matching files: M1 M2")
      ->required()
      ->expected(2);

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  GenFlags gen_flags;
  gen->add_option("--family", gen_flags.family, "complete, gnp:<p>, alpha:<a>, beta:<b>");
  gen->add_option("-n", gen_flags.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", gen_flags.seed, "PRNG seed");
  gen->add_option("--red-prob", gen_flags.red_prob, "Probability of a red edge")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--keep-prob", gen_flags.keep_prob, "Edge keep probability for alpha:<a>")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--planted-k", gen_flags.planted_k, "Plant a witness with this many red edges");
  gen->add_option("--out", gen_flags.out_path, "Output file (format from extension)");
  gen->add_option("--witness-out", gen_flags.witness_path, "Write the planted witness here");
  gen->add_option("--format", gen_flags.format, "Format for stdout output")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* reduce = app.add_subcommand("reduce", "Lift to distance-d independence number 1 or 2");
  reduce->add_option("graph", graph_path, "Graph file")->required();
  bool bipartite = false;
  std::string reduce_out, reduce_format = "json";
  reduce->add_flag("--bipartite", bipartite, "Use the bipartite lift");
  reduce->add_option("--out", reduce_out, "Output file");
  reduce->add_option("--format", reduce_format, "Format for stdout output")
      ->check(CLI::IsMember({"json", "dot"}));

  auto* bench = app.add_subcommand("bench", "Time the solver on generated instances");
  BenchFlags bench_flags;
  bench->add_option("--family", bench_flags.family, "Generator family")->required();
  bench->add_option("--sizes", bench_flags.sizes, "Vertex counts")->required()->delimiter(',');
  bench->add_option("--seed", bench_flags.seed, "First PRNG seed");
  bench->add_option("--out", bench_flags.out_path, "CSV output file");
  bench->add_option("-k", bench_flags.k, "Red edge target (default n/4)");
  bench->add_option("--instances", bench_flags.instances, "Instances per size")
      ->check(CLI::PositiveNumber);
  bench->add_option("--L-cap", bench_flags.l_cap, "Largest phase-2 guess size")
      ->check(CLI::NonNegativeNumber);
  bench->add_flag("--planted", bench_flags.planted, "Plant a witness in every instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*solve) return solve_command(graph_path, k, params, l_cap, deterministic, json, threads, out);
    if (*approx) return approx_command(graph_path, k, approx_params, out);
    if (*oracle) return oracle_command(graph_path, oracle_k, count, alpha, beta, out);
    if (*analyze) return analyze_command(graph_path, matchings, out);
    if (*gen) return gen_command(gen_flags, out);
    if (*reduce) return reduce_command(graph_path, bipartite, reduce_out, reduce_format, out);
    if (*bench) return bench_command(bench_flags, out);
  } catch (const OracleCapError& e) {
    err << "exmatch: " << e.what() << "\n";
    return kExitOracleCap;
  } catch (const ConfigError& e) {
    err << "exmatch: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    err << "exmatch: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    err << "exmatch: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "exmatch: no subcommand\n";
  return kExitUsage;
}

}  // namespace exmatch::cli
