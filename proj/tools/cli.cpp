// Copyright 2026 The gmwis Authors
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


#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gmwis/decomposition.hpp"
#include "gmwis/generate.hpp"
#include "gmwis/graph_io.hpp"
#include "gmwis/patterns.hpp"
#include "gmwis/solver.hpp"
#include "gmwis/structure_lab.hpp"

namespace gmwis {

namespace {

PatternCatalog load_catalog(const std::string& pattern_file) {
  PatternCatalog catalog;
  if (!pattern_file.empty()) {
    for (auto& p : read_patterns(pattern_file)) catalog.add(std::move(p));
  }
  return catalog;
}

void print_solution(std::ostream& out, const SolveResult& r) {
  out << "weight " << r.weight << "\n";
  out << "set";
  for (int v : r.set) out << ' ' << v + 1;
  out << "\n";
}

void print_witness(std::ostream& out, const Witness& w) {
  out << "witness " << w.pattern << ' ' << w.embedding.to_string() << "\n";
}

struct SolveArgs {
  std::string file;
  bool require_class = false;
  bool strict = false;
  std::string base = "exact";
  bool trace = false;
};

int run_solve(const SolveArgs& a, std::ostream& out, std::ostream& err) {
  const WeightedGraph g = read_graph(a.file);
  SolveConfig config;
  config.require_class = a.require_class;
  config.strict = a.strict;
  config.registry = BaseSolverRegistry::uniform(a.base);
  SolveResult r;
  try {
    r = solve(g, config);
  } catch (const ClassRejection& e) {
    print_witness(out, e.witness());
    err << "gmwis: " << e.what() << "\n";
    return kExitRejected;
  }
  print_solution(out, r);
  if (a.trace) {
    for (const auto& step : r.trace) {
      out << "trace " << step.depth << ' ';
      if (step.layer >= 0) out << 'L' << step.layer << '.';
      out << step.rule << ' ' << step.size << "\n";
    }
  }
  for (const auto& d : r.diagnostics) err << "structure violation: " << d.describe() << "\n";
  return r.diagnostics.empty() ? kExitOk : kExitWitness;
}

int run_oracle(const std::string& file, std::ostream& out) {
  print_solution(out, mwis_enumerate(read_graph(file)));
  return kExitOk;
}

int run_recognize(const std::string& file, std::ostream& out) {
  auto verdict = recognize_input_class(read_graph(file));
  if (verdict.free) {
    out << "in-class\n";
    return kExitOk;
  }
  print_witness(out, *verdict.witness);
  return kExitWitness;
}

int run_detect(const std::string& name, const std::string& file, const std::string& pattern_file,
               std::ostream& out) {
  const PatternDef pattern = load_catalog(pattern_file).get(name);
  const WeightedGraph g = read_graph(file);
  out << "pattern " << pattern.name << ' ' << to_string(pattern.provenance) << "\n";
  if (auto e = find_induced(pattern, g)) {
    out << "found " << e->to_string() << "\n";
  } else {
    out << "absent\n";
  }
  return kExitOk;
}

int run_decompose(const std::string& file, const std::string& mode, std::ostream& out) {
  const WeightedGraph g = read_graph(file);
  if (g.empty()) return kExitOk;
  if (mode == "modular") {
    out << render(modular_decomposition(g));
    return kExitOk;
  }
  for (const auto& c : connected_components(g)) {
    InducedSubgraph sub = induced_subgraph(g, c);
    AtomTree tree = clique_cutset_decompose(sub.graph);
    out << "component " << describe(c) << "\n";
    for (const auto& atom : tree.atoms()) out << "atom " << describe(sub.lift(atom)) << "\n";
  }
  return kExitOk;
}

struct GenArgs {
  std::string level = "any";
  int n = 0;
  std::uint64_t seed = 0;
  double density = 0.5;
  bool prime = false;
  bool connected = false;
  Weight min_weight = 0;
  Weight max_weight = 100;
  std::string out;
};

int run_gen(const GenArgs& a, std::ostream& out) {
  GenSpec spec;
  if (a.level != "any") {
    try {
      spec.level = std::stoi(a.level);
    } catch (const std::exception&) {
      throw CLI::ValidationError("--level", "expected 0..5 or any, got '" + a.level + "'");
    }
  }
  spec.n = a.n;
  spec.seed = a.seed;
  spec.density = a.density;
  spec.prime = a.prime;
  spec.connected = a.connected;
  spec.min_weight = a.min_weight;
  spec.max_weight = a.max_weight;
  const WeightedGraph g = generate(spec);
  const std::string comment = "generated level " + a.level + " n " + std::to_string(a.n) + " seed " +
                              std::to_string(a.seed) + " density " + std::to_string(a.density);
  if (a.out.empty()) {
    out << format_graph(g, comment);
  } else {
    write_graph(g, a.out, comment);
  }
  return kExitOk;
}

int run_named(const std::string& name, const std::string& pattern_file, const std::string& file,
              std::ostream& out) {
  const PatternDef pattern = load_catalog(pattern_file).get(name);
  const std::string comment = "pattern " + pattern.name + " provenance " + std::string(to_string(pattern.provenance));
  if (file.empty()) {
    out << format_graph(pattern.graph(), comment);
  } else {
    write_graph(pattern.graph(), file, comment);
  }
  return kExitOk;
}

struct VerifyArgs {
  std::string suite;
  int n = 10;
  int samples = 300;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  int threads = 0;
  std::string patterns;
  std::string out;
};

int run_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<SuiteId> ids;
  if (a.suite == "all") {
    ids = all_suites();
  } else {
    ids.push_back(parse_suite(a.suite));
  }
  SuiteOptions options;
  options.n = a.n;
  options.samples = a.samples;
  options.seed = a.seed;
  options.exhaustive = a.exhaustive;
  options.threads = a.threads;
  options.catalog = load_catalog(a.patterns);
  bool clean = true;
  for (SuiteId id : ids) {
    SuiteReport report = run_suite(id, options);
    out << report.render();
    if (!a.out.empty()) write_counterexamples(report, a.out);
    clean = clean && report.clean();
  }
  return clean ? kExitOk : kExitWitness;
}

}  // namespace

int cli_run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact maximum weight independent sets for (S1,2,2, S1,1,3, co-chair)-free graphs", "gmwis"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Solve a graph file");
  solve_cmd->add_option("file", solve_args.file, "Graph file")->required();
  solve_cmd->add_flag("--require-class", solve_args.require_class, "Reject graphs outside the input class");
  solve_cmd->add_flag("--strict", solve_args.strict, "Re-check the class at every reduction step");
  solve_cmd->add_option("--base", solve_args.base, "Base solver")->check(CLI::IsMember({"exact", "enumerate"}));
  solve_cmd->add_flag("--trace", solve_args.trace, "Print the decomposition steps of the solution");

  std::string file;
  auto* oracle_cmd = app.add_subcommand("oracle", "Solve by exhaustive enumeration");
  oracle_cmd->add_option("file", file, "Graph file")->required();

  auto* recognize_cmd = app.add_subcommand("recognize", "Check membership in the input class");
  recognize_cmd->add_option("file", file, "Graph file")->required();

  std::string pattern_name;
  std::string pattern_file;
  auto* detect_cmd = app.add_subcommand("detect", "Find an induced copy of a pattern");
  detect_cmd->add_option("pattern", pattern_name, "Pattern name")->required();
  detect_cmd->add_option("file", file, "Graph file")->required();
  detect_cmd->add_option("--patterns", pattern_file, "Extra pattern definitions");

  std::string mode = "modular";
  auto* decompose_cmd = app.add_subcommand("decompose", "Print a decomposition");
  decompose_cmd->add_option("file", file, "Graph file")->required();
  decompose_cmd->add_option("--mode", mode, "modular or atoms")->check(CLI::IsMember({"modular", "atoms"}));

  GenArgs gen_args;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a random graph");
  gen_cmd->add_option("--level", gen_args.level, "Class level 0..5 or any");
  gen_cmd->add_option("--n", gen_args.n, "Vertex count")->required()->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen_args.seed, "Random seed");
  gen_cmd->add_option("--density", gen_args.density, "Edge probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_flag("--prime", gen_args.prime, "Require a prime graph");
  gen_cmd->add_flag("--connected", gen_args.connected, "Require a connected graph");
  gen_cmd->add_option("--min-weight", gen_args.min_weight, "Smallest vertex weight");
  gen_cmd->add_option("--max-weight", gen_args.max_weight, "Largest vertex weight");
  gen_cmd->add_option("--out", gen_args.out, "Output file (default stdout)");

  std::string named_out;
  auto* named_cmd = app.add_subcommand("named", "Write a catalog pattern as a graph file");
  named_cmd->add_option("pattern", pattern_name, "Pattern name")->required();
  named_cmd->add_option("--patterns", pattern_file, "Extra pattern definitions");
  named_cmd->add_option("--out", named_out, "Output file (default stdout)");

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Run a structural property suite");
  verify_cmd->add_option("--suite", verify_args.suite, "Suite id or all")->required();
  verify_cmd->add_option("--n", verify_args.n, "Largest sample order");
  verify_cmd->add_option("--samples", verify_args.samples, "Random samples");
  verify_cmd->add_option("--seed", verify_args.seed, "Random seed");
  verify_cmd->add_flag("--exhaustive", verify_args.exhaustive, "All hypothesis graphs up to n (n <= 8)");
  verify_cmd->add_option("--threads", verify_args.threads, "Worker threads (default GMWIS_THREADS or 1)");
  verify_cmd->add_option("--patterns", verify_args.patterns, "Extra pattern definitions");
  verify_cmd->add_option("--out", verify_args.out, "Directory for counterexample graph files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args, out, err);
    if (oracle_cmd->parsed()) return run_oracle(file, out);
    if (recognize_cmd->parsed()) return run_recognize(file, out);
    if (detect_cmd->parsed()) return run_detect(pattern_name, file, pattern_file, out);
    if (decompose_cmd->parsed()) return run_decompose(file, mode, out);
    if (gen_cmd->parsed()) return run_gen(gen_args, out);
    if (named_cmd->parsed()) return run_named(pattern_name, pattern_file, named_out, out);
    if (verify_cmd->parsed()) return run_verify(verify_args, out);
  } catch (const CLI::Error& e) {
    err << "gmwis: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "gmwis: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gmwis
