#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "domlab/checks.hpp"
#include "domlab/closed_forms.hpp"
#include "domlab/families.hpp"
#include "domlab/graph.hpp"
#include "domlab/io.hpp"
#include "domlab/solve.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw domlab::Error(domlab::Errc::SyntaxError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw domlab::Error(domlab::Errc::SyntaxError, "cannot open " + path + " for writing");
  out << text;
}

domlab::Graph load_single(const std::string& path) {
  std::vector<domlab::Graph> gs = domlab::parse_graph_file(slurp(path));
  if (gs.empty()) throw domlab::Error(domlab::Errc::SyntaxError, "no graph in " + path);
  if (gs.size() > 1) throw domlab::Error(domlab::Errc::SyntaxError, "expected a single graph in " + path);
  return gs.front();
}

domlab::FamilySpec resolve_family(const std::string& name, const std::vector<int>& params,
                                  const std::string& base_path) {
  auto fam = domlab::family_from_name(name);
  if (!fam) throw domlab::Error(domlab::Errc::UnsupportedFamily, "unknown family " + name);
  if (*fam == domlab::Family::Corona2) {
    if (base_path.empty())
      throw domlab::Error(domlab::Errc::InvalidParams, "corona2 requires --base <graph file>");
    return domlab::FamilySpec::corona2_of(load_single(base_path));
  }
  if (*fam == domlab::Family::CompleteBipartite) {
    if (params.size() != 2)
      throw domlab::Error(domlab::Errc::InvalidParams, "complete-bipartite takes two parameters m n");
    return domlab::FamilySpec::complete_bipartite(params[0], params[1]);
  }
  if (params.size() != 1)
    throw domlab::Error(domlab::Errc::InvalidParams, name + " takes one parameter n");
  return domlab::FamilySpec{*fam, params[0]};
}

void print_solve(const std::string& invariant, const domlab::SolveResult& r) {
  std::cout << invariant << " = " << r.value << "\n";
  std::cout << "witness: " << domlab::format_mixed_set(r.witness) << "\n";
  std::cout << "method: " << domlab::solve_method_name(r.method) << ", nodes: " << r.nodes_explored
            << ", time: " << r.elapsed_seconds << "s\n";
}

int cmd_compute(const std::string& invariant, const std::string& input) {
  domlab::Graph g = load_single(input);
  domlab::SolverConfig cfg = domlab::SolverConfig::defaults();
  if (invariant == "gamma-t") {
    print_solve(invariant, domlab::gamma_t(g, cfg));
  } else if (invariant == "gamma-tm") {
    print_solve(invariant, domlab::gamma_tm(g, cfg));
  } else if (invariant == "gamma-m") {
    print_solve(invariant, domlab::gamma_m(g, cfg));
  } else if (invariant == "beta") {
    print_solve(invariant, domlab::min_vertex_cover(g));
  } else if (invariant == "diameter") {
    std::cout << "diameter = " << domlab::diameter(g) << "\n";
  } else {
    throw domlab::Error(domlab::Errc::InvalidParams, "unknown invariant " + invariant);
  }
  return kExitPass;
}

int cmd_formula(const domlab::FamilySpec& spec) {
  std::cout << "gamma-tm = " << domlab::gamma_tm_formula(spec)
            << " (case: " << domlab::gamma_tm_case(spec) << ")\n";
  return kExitPass;
}

int cmd_witness(const domlab::FamilySpec& spec, const std::string& out_path) {
  domlab::FormulaResult fr = domlab::gamma_tm_witness(spec);
  std::cout << "gamma-tm = " << fr.value << " (" << fr.construction_tag << ")\n";
  std::cout << "witness: " << domlab::format_mixed_set(fr.witness) << "\n";
  if (!out_path.empty()) emit(out_path, domlab::write_witness(fr.witness));
  return kExitPass;
}

int report_corpus(const domlab::CorpusReport& report, const std::string& json_path, bool timing) {
  for (const domlab::TheoremReport& r : report.results) {
    std::cout << r.theorem_id << " " << r.graph6 << " " << domlab::check_status_name(r.status);
    if (!r.reason.empty()) std::cout << " (" << r.reason << ")";
    if (!r.note.empty()) std::cout << " [" << r.note << "]";
    std::cout << "\n";
  }
  std::cout << "pass: " << report.pass << ", fail: " << report.fail << ", skipped: " << report.skipped
            << "\n";
  if (!json_path.empty()) emit(json_path, domlab::corpus_report_to_json(report, timing) + "\n");
  return report.fail > 0 ? kExitFail : kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation and theorem checking for total mixed domination"};
  app.require_subcommand(1);

  std::string invariant, input, check_id = "all", json_path, to_format, highlight_path, base_path, out_path;
  std::string family;
  std::vector<int> params;
  int exhaustive_n = 0, rt_count = 0, rt_max_n = 0, rc_count = 0, rc_max_n = 0, jobs = 1;
  unsigned seed = 0;
  double edge_prob = 0.5;
  bool no_dedup = false, no_timing = false;

  auto* compute = app.add_subcommand("compute", "Compute an exact invariant with certificate");
  compute->add_option("invariant", invariant, "gamma-t | gamma-tm | gamma-m | beta | diameter")->required();
  compute->add_option("input", input, "graph file (edge list or graph6), '-' for stdin")->required();

  auto* formula = app.add_subcommand("formula", "Closed-form gamma-tm for a named family");
  formula->add_option("family", family, "path | cycle | complete | complete-bipartite | wheel | double-star | corona2")
      ->required();
  formula->add_option("params", params, "family parameters");
  formula->add_option("--base", base_path, "base graph file for corona2");

  auto* witness = app.add_subcommand("witness", "Constructive minimum set for a named family");
  witness->add_option("family", family, "family name")->required();
  witness->add_option("params", params, "family parameters");
  witness->add_option("--base", base_path, "base graph file for corona2");
  witness->add_option("--out", out_path, "also write the witness file (0-indexed)");

  auto* verify = app.add_subcommand("verify", "Run one or all theorem checks on a graph file");
  verify->add_option("check", check_id, "check id or 'all'")->required();
  verify->add_option("input", input, "graph file")->required();
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--jobs", jobs, "worker count");
  verify->add_flag("--no-timing", no_timing, "omit timing fields from the JSON report");

  auto* corpus = app.add_subcommand("corpus", "Run checks over a generated or loaded corpus");
  auto* ex_opt = corpus->add_option("--exhaustive", exhaustive_n, "all connected graphs up to this order");
  auto* rt_opt = corpus->add_option("--random-trees", rt_count, "number of random trees");
  corpus->add_option("--max-n", rt_max_n, "max order for random modes");
  auto* rc_opt = corpus->add_option("--random-connected", rc_count, "number of random connected graphs");
  corpus->add_option("--p", edge_prob, "edge probability for --random-connected");
  corpus->add_option("--seed", seed, "PRNG seed");
  auto* file_opt = corpus->add_option("--file", input, "graph file with one or more graphs");
  corpus->add_option("--checks", check_id, "comma-separated check ids (default all)");
  corpus->add_option("--jobs", jobs, "worker count");
  corpus->add_option("--json", json_path, "write the JSON report here");
  corpus->add_flag("--no-dedup", no_dedup, "keep isomorphic duplicates in exhaustive mode");
  corpus->add_flag("--no-timing", no_timing, "omit timing fields from the JSON report");
  ex_opt->excludes(rt_opt)->excludes(rc_opt)->excludes(file_opt);
  rt_opt->excludes(rc_opt)->excludes(file_opt);
  rc_opt->excludes(file_opt);
  rc_count = 0;

  auto* convert = app.add_subcommand("convert", "Convert between edge-list, graph6 and DOT");
  convert->add_option("input", input, "graph file")->required();
  convert->add_option("--to", to_format, "edge-list | graph6 | dot")->required();
  convert->add_option("--highlight", highlight_path, "witness file to highlight in DOT output");
  convert->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    domlab::SolverConfig cfg = domlab::SolverConfig::defaults();

    if (compute->parsed()) return cmd_compute(invariant, input);

    if (formula->parsed()) return cmd_formula(resolve_family(family, params, base_path));

    if (witness->parsed()) return cmd_witness(resolve_family(family, params, base_path), out_path);

    if (verify->parsed()) {
      domlab::CorpusSpec spec;
      spec.mode = domlab::CorpusSpec::Mode::FromGraphs;
      spec.graphs = domlab::parse_graph_file(slurp(input));
      if (check_id != "all") spec.checks = {check_id};
      spec.jobs = jobs;
      return report_corpus(domlab::run_corpus(spec, cfg), json_path, !no_timing);
    }

    if (corpus->parsed()) {
      domlab::CorpusSpec spec;
      if (*ex_opt) {
        spec.mode = domlab::CorpusSpec::Mode::ExhaustiveConnected;
        spec.max_n = exhaustive_n;
        spec.dedup_isomorphism = !no_dedup;
      } else if (*rt_opt) {
        spec.mode = domlab::CorpusSpec::Mode::RandomTrees;
        spec.count = rt_count;
        spec.max_n = rt_max_n > 0 ? rt_max_n : 12;
        spec.seed = seed;
      } else if (*rc_opt) {
        spec.mode = domlab::CorpusSpec::Mode::RandomConnected;
        spec.count = rc_count;
        spec.max_n = rt_max_n > 0 ? rt_max_n : 8;
        spec.edge_prob = edge_prob;
        spec.seed = seed;
      } else if (*file_opt) {
        spec.mode = domlab::CorpusSpec::Mode::FromGraphs;
        spec.graphs = domlab::parse_graph_file(slurp(input));
      } else {
        throw domlab::Error(domlab::Errc::InvalidParams,
                            "pick one of --exhaustive, --random-trees, --random-connected, --file");
      }
      if (check_id != "all") {
        std::stringstream ss(check_id);
        std::string tok;
        while (std::getline(ss, tok, ','))
          if (!tok.empty()) spec.checks.push_back(tok);
      }
      spec.jobs = jobs;
      return report_corpus(domlab::run_corpus(spec, cfg), json_path, !no_timing);
    }

    if (convert->parsed()) {
      domlab::Graph g = load_single(input);
      std::string text;
      if (to_format == "edge-list") {
        text = domlab::write_edge_list(g);
      } else if (to_format == "graph6") {
        text = domlab::encode_graph6(g) + "\n";
      } else if (to_format == "dot") {
        if (!highlight_path.empty()) {
          domlab::MixedSet hl = domlab::parse_witness(slurp(highlight_path), g);
          text = domlab::to_dot(g, &hl);
        } else {
          text = domlab::to_dot(g);
        }
      } else {
        throw domlab::Error(domlab::Errc::InvalidParams, "unknown target format " + to_format);
      }
      emit(out_path, text);
      return kExitPass;
    }
  } catch (const domlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
