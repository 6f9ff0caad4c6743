#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <optional>
#include <ostream>

#include "nearbip/decomposition.hpp"
#include "nearbip/diam2_solver.hpp"
#include "nearbip/errors.hpp"
#include "nearbip/io.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/reduction.hpp"

namespace nearbip::cli {

namespace {

/// Unreadable or malformed input file.
struct FileError {
  std::string message;
};

template <typename Parse>
auto load(const std::string& path, Parse&& parse) {
  std::ifstream in(path);
  if (!in) throw FileError{path + ": cannot open"};
  try {
    return parse(in);
  } catch (const Error& e) {
    throw FileError{path + ": " + e.what()};
  }
}

Graph load_graph(const std::string& path) {
  return load(path, [](std::istream& in) { return parse_edge_list(in); });
}

CnfFormula load_cnf(const std::string& path) {
  return load(path, [](std::istream& in) { return parse_dimacs_cnf(in); });
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out || !(out << contents)) throw FileError{path + ": cannot write"};
}

int report_set(std::ostream& out, const VertexSet& a) {
  out << "minimum_size " << a.size() << '\n';
  out << "A " << format_vertex_set(a) << '\n';
  return kSolved;
}

int solve(const std::string& graph_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const auto result = solve_min_ifvs_diam2(g);
  if (!result) {
    out << "NOT NEAR-BIPARTITE\n";
    return kNotNearBipartite;
  }
  return report_set(out, result->a);
}

int check(const std::string& graph_path, const std::string& set_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const VertexSet a =
      load(set_path, [&](std::istream& in) { return parse_vertex_set(in, g.vertex_count()); });
  const Verdict verdict = validate_decomposition(g, a);
  out << describe(verdict) << '\n';
  return is_valid(verdict) ? kSolved : kNotNearBipartite;
}

int oracle(const std::string& graph_path, const OracleOptions& options, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const OracleResult result = exact_min_ifvs(g, options);
  if (!result.minimum_size) {
    out << (result.exhausted ? "NOT NEAR-BIPARTITE\n" : "NONE WITHIN BUDGET\n");
    return kNotNearBipartite;
  }
  return report_set(out, *result.witness);
}

int characterize(const std::string& graph_path, std::ostream& out) {
  const Graph g = load_graph(graph_path);
  const YangYuanVerdict verdict = yang_yuan_characterize(g);
  switch (verdict.condition) {
    case YangYuanCondition::DeletionBipartite:
      out << "NEAR-BIPARTITE condition (i): G - " << *verdict.u << " is bipartite\n";
      return kSolved;
    case YangYuanCondition::TwoNeighbourSet:
      out << "NEAR-BIPARTITE condition (ii): X = " << format_vertex_set(*verdict.x) << '\n';
      return kSolved;
    case YangYuanCondition::None:
      break;
  }
  out << "NOT NEAR-BIPARTITE\n";
  return kNotNearBipartite;
}

int reduce(const std::string& cnf_path, std::string prefix, bool certify, std::ostream& out) {
  const CnfFormula phi = load_cnf(cnf_path);
  const HphiInstance h = build_hphi(phi);
  if (prefix.empty()) {
    prefix = cnf_path;
    const auto dot = prefix.find_last_of('.');
    const auto slash = prefix.find_last_of('/');
    if (dot != std::string::npos && (slash == std::string::npos || dot > slash))
      prefix.erase(dot);
  }
  write_file(prefix + ".edges", serialize_edge_list(h.graph));
  write_file(prefix + ".coords", serialize_coordinate_map(h));
  out << "vertices " << h.graph.vertex_count() << '\n';
  out << "edges " << h.graph.edge_count() << '\n';
  out << "graph " << prefix << ".edges\n";
  out << "coords " << prefix << ".coords\n";
  if (!certify) return kSolved;
  const CertificateReport report = certify_hphi(h);
  for (const auto& c : report.checks)
    out << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
  out << (report.all_passed() ? "CERTIFIED\n" : "CERTIFICATION FAILED\n");
  return report.all_passed() ? kSolved : kNotNearBipartite;
}

int embed(const std::string& cnf_path, const std::string& assignment_path, std::ostream& out) {
  const CnfFormula phi = load_cnf(cnf_path);
  const Assignment value = load(assignment_path, [&](std::istream& in) {
    return parse_assignment(in, static_cast<std::size_t>(phi.variable_count));
  });
  const HphiInstance h = build_hphi(phi);
  const NbDecomposition d = assignment_to_decomposition(h, value);
  out << "# " << describe(d.verdict) << ", |A| = " << d.size() << '\n';
  out << format_vertex_set(d.a) << '\n';
  return d.valid() ? kSolved : kNotNearBipartite;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-bipartite decompositions and independent feedback vertex sets"};
  app.name("nearbip");
  app.require_subcommand(1);

  std::string graph_path, set_path, cnf_path, assignment_path, prefix;
  bool certify = false;
  OracleOptions oracle_options;
  std::size_t budget = 0;
  std::size_t gen_n = 0;
  std::uint64_t gen_seed = 0;
  std::function<int()> action;

  auto* solve_cmd = app.add_subcommand("solve", "Minimum IFVS of a diameter-2 graph");
  solve_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  solve_cmd->callback([&] { action = [&] { return solve(graph_path, out); }; });

  auto* check_cmd = app.add_subcommand("check", "Validate a candidate independent set A");
  check_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  check_cmd->add_option("set", set_path, "Vertex-set file")->required();
  check_cmd->callback([&] { action = [&] { return check(graph_path, set_path, out); }; });

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact minimum IFVS by exhaustive search");
  oracle_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  oracle_cmd->add_option("--limit", oracle_options.hard_limit, "Largest n searched")
      ->capture_default_str();
  auto* budget_opt = oracle_cmd->add_option("--budget", budget, "Largest set size searched");
  oracle_cmd->callback([&] {
    if (budget_opt->count() > 0) oracle_options.budget = budget;
    action = [&] { return oracle(graph_path, oracle_options, out); };
  });

  auto* char_cmd = app.add_subcommand("characterize", "Yang-Yuan test for diameter-2 graphs");
  char_cmd->add_option("graph", graph_path, "Edge-list file")->required();
  char_cmd->callback([&] { action = [&] { return characterize(graph_path, out); }; });

  auto* reduce_cmd = app.add_subcommand("reduce", "Build H_phi from a 3-CNF formula");
  reduce_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  reduce_cmd->add_option("-o,--out", prefix, "Output prefix for .edges and .coords");
  reduce_cmd->add_flag("--certify", certify, "Run the structural certificate");
  reduce_cmd->callback([&] { action = [&] { return reduce(cnf_path, prefix, certify, out); }; });

  auto* embed_cmd = app.add_subcommand("embed", "Decomposition of H_phi from an assignment");
  embed_cmd->add_option("cnf", cnf_path, "DIMACS CNF file")->required();
  embed_cmd->add_option("assignment", assignment_path, "Assignment file")->required();
  embed_cmd->callback([&] { action = [&] { return embed(cnf_path, assignment_path, out); }; });

  auto* gen_cmd = app.add_subcommand("gen", "Random connected diameter-2 graph");
  gen_cmd->add_option("--n", gen_n, "Vertex count")->required()->check(CLI::Range(3, 100000));
  gen_cmd->add_option("--seed", gen_seed, "Random seed")->required();
  gen_cmd->callback([&] {
    action = [&] {
      out << serialize_edge_list(random_diameter_two_graph(gen_n, gen_seed));
      return kSolved;
    };
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << app.help();
    return kUsage;
  }

  try {
    return action();
  } catch (const FileError& e) {
    err << "error: " << e.message << '\n';
    return kFileError;
  } catch (const DiameterNotTwo& e) {
    err << "error: DiameterNotTwo: " << e.what() << '\n';
    return kPrecondition;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kPrecondition;
  }
}

}  // namespace nearbip::cli
