#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "posetdist/bench.hpp"
#include "posetdist/clique.hpp"
#include "posetdist/dmces.hpp"
#include "posetdist/error.hpp"
#include "posetdist/generate.hpp"
#include "posetdist/io.hpp"
#include "posetdist/line_digraph.hpp"
#include "posetdist/metric.hpp"

namespace posetdist::cli {

namespace {

using nlohmann::ordered_json;

struct PairArgs {
  std::string first;
  std::string second;
  std::string solver = "auto";
  bool poset = false;
  bool json = false;
  bool witness = false;
  bool parallel = false;
  long time_limit_ms = 0;
};

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownNode:
    case ErrorCode::DuplicateNode: return kInputError;
    case ErrorCode::SolverDisagreement: return kSolverDisagreement;
    case ErrorCode::SizeCapExceeded:
    case ErrorCode::TimeLimitExceeded: return kResourceLimit;
    case ErrorCode::InfeasibleParameters:
    case ErrorCode::KindMismatch: return kUsageError;
    default: return kValidationFailure;
  }
}

Solver solver_from(const std::string& name) {
  // CLI11 has already restricted the name to the accepted set.
  return *parse_solver(name);
}

SearchOptions search_options(const PairArgs& a) {
  SearchOptions o;
  o.parallel = a.parallel;
  if (a.time_limit_ms > 0) o.time_limit = std::chrono::milliseconds(a.time_limit_ms);
  return o;
}

double since_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

std::string rational_text(const Rational& r) {
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

ordered_json witness_json(const LabeledDigraph& g, const LabeledDigraph& h, const NodeMatching& phi) {
  ordered_json w = ordered_json::array();
  for (const auto& [a, b] : phi.pairs) w.push_back({g.id(a), h.id(b)});
  return w;
}

void print_witness(std::ostream& out, const LabeledDigraph& g, const LabeledDigraph& h,
                   const NodeMatching& phi,
                   const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  out << "witness:\n";
  for (const auto& [a, b] : phi.pairs) out << "  " << g.id(a) << " -> " << h.id(b) << '\n';
  out << "matched edges:\n";
  for (const auto& [e, f] : edges) {
    const Edge& x = g.edges()[e];
    const Edge& y = h.edges()[f];
    out << "  (" << g.id(x.tail) << "," << g.id(x.head) << ") ~ (" << h.id(y.tail) << ","
        << h.id(y.head) << ")\n";
  }
}

std::pair<LabeledDigraph, LabeledDigraph> load_pair(const PairArgs& a) {
  if (a.poset) return {load_poset(a.first).graph(), load_poset(a.second).graph()};
  return {load_graph(a.first), load_graph(a.second)};
}

int run_distance(const PairArgs& a, std::ostream& out) {
  const auto [g, h] = load_pair(a);
  const auto start = std::chrono::steady_clock::now();
  DistanceResult r;
  if (a.poset) {
    r = poset_distance(PosetDigraph::from_graph(g), PosetDigraph::from_graph(h),
                       solver_from(a.solver), search_options(a));
  } else {
    r = d_e(g, h, solver_from(a.solver), search_options(a));
  }
  const double elapsed = since_ms(start);
  if (a.json) {
    ordered_json j;
    j["distance"] = r.distance_value();
    j["distance_exact"] = rational_text(r.distance);
    j["dmces"] = r.dmces_value;
    j["normalizer"] = r.normalizer;
    j["solver"] = to_string(r.solver);
    if (a.witness) j["witness"] = witness_json(g, h, r.witness);
    j["elapsed_ms"] = elapsed;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "distance: " << r.distance_value() << " (" << rational_text(r.distance) << ")\n"
      << "dmces: " << r.dmces_value << '\n'
      << "normalizer: " << r.normalizer << '\n'
      << "solver: " << to_string(r.solver) << '\n';
  if (a.witness) print_witness(out, g, h, r.witness, r.matched_edges);
  return kSuccess;
}

int run_dmces(const PairArgs& a, std::ostream& out) {
  const auto [g, h] = load_pair(a);
  const auto start = std::chrono::steady_clock::now();
  const DmcesOutcome r = dmces(g, h, solver_from(a.solver), search_options(a));
  const double elapsed = since_ms(start);
  if (a.json) {
    ordered_json j;
    j["dmces"] = r.value;
    j["solver"] = to_string(r.solver);
    if (a.witness) j["witness"] = witness_json(g, h, r.witness);
    j["elapsed_ms"] = elapsed;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "dmces: " << r.value << '\n' << "solver: " << to_string(r.solver) << '\n';
  if (a.witness) print_witness(out, g, h, r.witness, r.matched_edges);
  return kSuccess;
}

int run_mcis(const PairArgs& a, std::ostream& out) {
  const LabeledDigraph g = load_graph(a.first);
  const LabeledDigraph h = load_graph(a.second);
  const McisResult r = mcis(g, h);
  const Rational d = d_n(g, h);
  if (a.json) {
    ordered_json j;
    j["mcis"] = r.size;
    j["distance"] = to_double(d);
    j["distance_exact"] = rational_text(d);
    ordered_json pairs = ordered_json::array();
    for (const auto& [x, y] : r.pairs) pairs.push_back({g.id(x), h.id(y)});
    j["pairs"] = pairs;
    out << j.dump() << '\n';
    return kSuccess;
  }
  out << "mcis: " << r.size << '\n' << "d_n: " << to_double(d) << " (" << rational_text(d) << ")\n";
  for (const auto& [x, y] : r.pairs) out << "  " << g.id(x) << " -> " << h.id(y) << '\n';
  return kSuccess;
}

int run_eld(const std::string& path, const std::string& dot, std::ostream& out, std::ostream& err) {
  const LabeledDigraph g = load_graph(path);
  const ExtendedLineDigraph eld = extended_line_digraph(g);
  if (!eld.source_oriented()) {
    err << "warning: input has a 2-cycle; extended line digraphs only characterize oriented graphs\n";
  }
  std::map<std::string_view, std::size_t> counts{{"ht", 0}, {"tt", 0}, {"hh", 0}};
  for (const LineEdge& e : eld.edges()) ++counts[to_string(e.relation)];
  if (dot == "-") {
    out << to_dot(eld);
    return kSuccess;
  }
  out << "nodes: " << eld.node_count() << '\n'
      << "edges: " << eld.edge_count() << " (ht " << counts["ht"] << ", tt " << counts["tt"]
      << ", hh " << counts["hh"] << ")\n";
  for (const LineEdge& e : eld.edges()) {
    out << "  " << eld.node_name(e.from) << " -> " << eld.node_name(e.to) << " ["
        << to_string(e.relation) << "]\n";
  }
  if (!dot.empty()) save_text(dot, to_dot(eld));
  return kSuccess;
}

int run_validate(const std::string& path, bool poset, bool json, std::ostream& out) {
  if (poset) {
    const PosetDigraph p = load_poset(path);
    if (json) {
      ordered_json j;
      j["valid"] = true;
      j["elements"] = p.graph().node_count();
      j["relations"] = p.graph().edge_count();
      out << j.dump() << '\n';
    } else {
      out << "valid poset: " << p.graph().node_count() << " elements, " << p.graph().edge_count()
          << " strict relations\n";
    }
    return kSuccess;
  }
  const LabeledDigraph g = load_graph(path);
  const PropertyReport r = validate_properties(g);
  const std::vector<std::pair<std::string, bool>> flags{
      {"finite", r.is_finite},
      {"weakly_connected", r.is_weakly_connected},
      {"simple", r.is_simple},
      {"oriented", r.is_oriented},
      {"acyclic", r.is_acyclic},
      {"transitively_closed", r.is_transitively_closed},
      {"per_label_path", r.per_label_path},
  };
  if (json) {
    ordered_json j;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    for (const auto& [name, value] : flags) j[name] = value;
    j["wso"] = r.wso();
    out << j.dump() << '\n';
  } else {
    out << "nodes: " << g.node_count() << "\nedges: " << g.edge_count() << '\n';
    for (const auto& [name, value] : flags) out << name << ": " << (value ? "yes" : "no") << '\n';
  }
  return r.wso() ? kSuccess : kValidationFailure;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> sizes;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw CLI::ValidationError("--sizes", "not a number: " + item);
    sizes.push_back(v);
  }
  return sizes;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Distances between labeled digraphs and labeled posets"};
  app.require_subcommand(1);
  const std::vector<std::string> solver_names{"auto", "brute", "alg1", "alg2", "alg3", "clique"};
  auto solver_check = CLI::IsMember(solver_names);

  PairArgs pair;
  auto add_pair = [&](CLI::App* sub) {
    sub->add_option("first", pair.first, "First input file")->required();
    sub->add_option("second", pair.second, "Second input file")->required();
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--solver", pair.solver, "Solver")->check(solver_check);
    sub->add_flag("--poset", pair.poset, "Inputs are poset files");
    sub->add_flag("--json", pair.json, "Emit JSON");
    sub->add_flag("--witness", pair.witness, "Print the node matching");
    sub->add_flag("--parallel", pair.parallel, "Use all OpenMP threads");
    sub->add_option("--time-limit", pair.time_limit_ms, "Search time limit in milliseconds")
        ->check(CLI::NonNegativeNumber);
  };

  auto* distance = app.add_subcommand("distance", "Edge-based distance d_e");
  add_pair(distance);
  add_search(distance);

  auto* dmces_cmd = app.add_subcommand("dmces", "Directed maximum common edge subgraph size");
  add_pair(dmces_cmd);
  add_search(dmces_cmd);

  auto* mcis_cmd = app.add_subcommand("mcis", "Maximum common induced subgraph and d_n");
  add_pair(mcis_cmd);
  mcis_cmd->add_flag("--json", pair.json, "Emit JSON");

  std::string single;
  std::string dot;
  auto* eld = app.add_subcommand("eld", "Extended line digraph");
  eld->add_option("input", single, "Graph file")->required();
  eld->add_option("--dot", dot, "Write Graphviz output to this path ('-' for stdout)");

  bool validate_poset = false;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "Check structural properties");
  validate->add_option("input", single, "Graph or poset file")->required();
  validate->add_flag("--poset", validate_poset, "Validate as a poset file");
  validate->add_flag("--json", validate_json, "Emit JSON");

  GenerateParams gen_params;
  std::string gen_kind = "wso";
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--kind", gen_kind, "wso, closure or path-closure")
      ->check(CLI::IsMember({"wso", "closure", "path-closure"}));
  gen->add_option("--nodes", gen_params.nodes, "Node count")->required();
  gen->add_option("--labels", gen_params.labels, "Label alphabet size");
  gen->add_option("--density", gen_params.density, "Edge probability");
  gen->add_option("--seed", gen_params.seed, "Random seed");
  gen->add_option("--out", gen_out, "Output path (default stdout)");

  BenchConfig bench_config;
  std::string bench_kind = "closure";
  std::string bench_sizes = "6";
  std::string bench_csv;
  long bench_time_limit = 0;
  auto* bench = app.add_subcommand("bench", "Time all applicable solvers on random instances");
  bench->add_option("--kind", bench_kind, "wso, closure or path-closure")
      ->check(CLI::IsMember({"wso", "closure", "path-closure"}));
  bench->add_option("--sizes", bench_sizes, "Comma-separated node counts");
  bench->add_option("--trials", bench_config.trials, "Instance pairs per size");
  bench->add_option("--labels", bench_config.labels, "Label alphabet size");
  bench->add_option("--density", bench_config.density, "Edge probability");
  bench->add_option("--seed", bench_config.seed, "First random seed");
  bench->add_option("--csv", bench_csv, "Write rows to this CSV file (default stdout)");
  bench->add_option("--time-limit", bench_time_limit, "Per-solver limit in milliseconds")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*distance) return run_distance(pair, out);
    if (*dmces_cmd) return run_dmces(pair, out);
    if (*mcis_cmd) return run_mcis(pair, out);
    if (*eld) return run_eld(single, dot, out, err);
    if (*validate) return run_validate(single, validate_poset, validate_json, out);
    if (*gen) {
      gen_params.kind = *parse_instance_kind(gen_kind);
      const std::string text = to_json(generate_instance(gen_params));
      if (gen_out.empty()) {
        out << text;
      } else {
        save_text(gen_out, text);
      }
      return kSuccess;
    }
    if (*bench) {
      bench_config.kind = *parse_instance_kind(bench_kind);
      try {
        bench_config.sizes = parse_sizes(bench_sizes);
      } catch (const std::exception&) {
        err << "error: --sizes expects comma-separated integers\n";
        return kUsageError;
      }
      if (bench_time_limit > 0) bench_config.time_limit = std::chrono::milliseconds(bench_time_limit);
      const std::vector<BenchRow> rows = run_bench(bench_config);
      if (bench_csv.empty()) {
        write_csv(out, rows);
      } else {
        std::ofstream file(bench_csv);
        if (!file) throw ParseError("cannot write '" + bench_csv + "'", 0);
        write_csv(file, rows);
      }
      return kSuccess;
    }
  } catch (const SolverDisagreementError& e) {
    err << "error: SolverDisagreement: " << e.what() << '\n' << e.instance();
    return kSolverDisagreement;
  } catch (const ParseError& e) {
    err << "error: ParseError: " << e.what();
    if (e.line() > 0) err << " (line " << e.line() << ")";
    if (!e.field().empty()) err << " (field " << e.field() << ")";
    err << '\n';
    return kInputError;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kValidationFailure;
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace posetdist::cli
