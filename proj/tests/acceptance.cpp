// End-to-end acceptance suite. Each numbered criterion prints exactly one
// pass/fail line; the process exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "domlab/checks.hpp"
#include "domlab/closed_forms.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/solve.hpp"

using namespace domlab;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
long long witnesses_checked = 0;
long long witnesses_valid = 0;

// Large enough for K_8 (36 elements) and the 2-corona of K_5 (40 elements).
SolverConfig wide_config() {
  SolverConfig cfg = SolverConfig::defaults();
  cfg.element_cap = Graph::kMaxVertices;
  return cfg;
}
const SolverConfig cfg = wide_config();

void report(int number, const char* description, bool ok) {
  std::printf("[%s] %2d. %s\n", ok ? "PASS" : "FAIL", number, description);
  if (!ok) ++failures;
}

bool certify_tmds(const Graph& g, const MixedSet& witness) {
  ++witnesses_checked;
  bool ok = is_tmds(g, witness);
  if (ok) ++witnesses_valid;
  return ok;
}

int solver_tm(const Graph& g) { return gamma_tm(g, cfg).value; }

bool formula_matches_solver(const FamilySpec& spec) {
  Graph g = make_family(spec);
  SolveResult r = gamma_tm(g, cfg);
  return r.value == gamma_tm_formula(spec) && certify_tmds(g, r.witness);
}

bool criterion_formula_oracle() {
  bool ok = true;
  for (int n = 2; n <= 14; ++n) ok = formula_matches_solver(FamilySpec::path(n)) && ok;
  for (int n = 3; n <= 14; ++n) ok = formula_matches_solver(FamilySpec::cycle(n)) && ok;
  for (int n = 2; n <= 8; ++n) ok = formula_matches_solver(FamilySpec::complete(n)) && ok;
  for (int m = 1; m <= 5; ++m)
    for (int n = m; n <= 5; ++n) ok = formula_matches_solver(FamilySpec::complete_bipartite(m, n)) && ok;
  for (int n = 3; n <= 8; ++n) ok = formula_matches_solver(FamilySpec::wheel(n)) && ok;
  return ok;
}

bool criterion_figures() {
  bool ok = true;
  FormulaResult p12 = gamma_tm_witness(FamilySpec::path(12));
  ok = ok && p12.value == 7 && certify_tmds(make_family(FamilySpec::path(12)), p12.witness);
  ok = ok && solver_tm(make_family(FamilySpec::cycle(11))) == 7;
  ok = ok && solver_tm(make_family(FamilySpec::complete_bipartite(3, 3))) == 4;
  ok = ok && solver_tm(make_family(FamilySpec::complete(4))) == 3;
  ok = ok && solver_tm(make_family(FamilySpec::wheel(5))) == 4;
  ok = ok && solver_tm(corona2(make_family(FamilySpec::path(6))).graph) == 12;
  Graph ds = make_family(FamilySpec::double_star(3));
  ok = ok && solver_tm(ds) == 4 && gamma_t(ds, cfg).value == 4;
  return ok;
}

bool criterion_total_graph_identity() {
  for (const Graph& g : enumerate_connected_graphs(6, true))
    if (verify_total_graph_identity(g, cfg).status == CheckStatus::Fail) return false;
  return true;
}

bool criterion_sandwich() {
  for (const Graph& g : enumerate_connected_graphs(6, true))
    if (verify_sandwich(g, cfg).status == CheckStatus::Fail) return false;
  Graph k6 = make_family(FamilySpec::complete(6));
  if (!(solver_tm(k6) == 4 && gamma_t(line_graph(k6).graph, cfg).value == 4)) return false;
  Graph fix = upper_tightness_fixture();
  return gamma_t(fix, cfg).value == 2 && gamma_t(line_graph(fix).graph, cfg).value == 4 &&
         solver_tm(fix) == 6;
}

bool criterion_line_formulas() {
  bool ok = true;
  for (int n = 4; n <= 8; ++n) {
    Graph l = line_graph(make_family(FamilySpec::complete(n))).graph;
    ok = ok && gamma_t(l, cfg).value == 2 * n / 3;
  }
  for (int n = 3; n <= 8; ++n) {
    Graph l = line_graph(make_family(FamilySpec::wheel(n))).graph;
    ok = ok && gamma_t(l, cfg).value == (n + 1) / 2;
  }
  return ok;
}

bool criterion_wheel_refinement() {
  for (int n = 4; n <= 8; ++n) {
    Graph w = make_family(FamilySpec::wheel(n));
    int gt = gamma_t(w, cfg).value;
    int gl = gamma_t(line_graph(w).graph, cfg).value;
    int refined = std::min(gl + c_line_param(w, cfg), gt + beta_param(w, cfg));
    int expected = (n + 1) / 2 + 1;
    if (refined != expected || solver_tm(w) != expected || refined >= gl + gt) return false;
  }
  return true;
}

bool criterion_trees() {
  std::vector<Graph> trees = enumerate_trees(9);
  for (const Graph& t : random_trees(200, 12, 42)) trees.push_back(t);
  int construction_failures = 0;
  for (const Graph& t : trees) {
    int n = t.order();
    int tm = solver_tm(t);
    if ((tm == 2) != (diameter(t) <= 3)) return false;
    if (n >= 3) {
      if (tm > 2 * n / 3) return false;
      try {
        FormulaResult fr = tree_tmds(t);
        if (!certify_tmds(t, fr.witness)) return false;
      } catch (const Error&) {
        ++construction_failures;
      }
    }
  }
  std::printf("       tree construction failures: %d\n", construction_failures);
  return construction_failures == 0;
}

bool criterion_corona() {
  for (const Graph& base : enumerate_connected_graphs(5, true)) {
    if (base.order() < 2) continue;
    if (solver_tm(corona2(base).graph) != 2 * base.order()) return false;
  }
  return true;
}

bool criterion_diameter() {
  for (const Graph& g : enumerate_connected_graphs(6, true)) {
    if (g.order() < 2 || min_degree(g) < 1) continue;
    if (solver_tm(g) == 2 && diameter(g) >= 4) return false;
  }
  Graph c4 = make_family(FamilySpec::cycle(4));
  return diameter(c4) == 2 && solver_tm(c4) == 3;
}

bool criterion_property_suites() {
  for (const Graph& g : enumerate_connected_graphs(5, true)) {
    if (g.order() < 2) continue;
    if (verify_observation(g, cfg).status == CheckStatus::Fail) return false;
    if (verify_lemma_edge_lower(g, cfg).status == CheckStatus::Fail) return false;
  }
  std::mt19937 gen(1234);
  for (int trial = 0; trial < 1000; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 30)(gen);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.05, 0.95)(gen));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(gen)) edges.emplace_back(i, j);
    Graph g(n, std::move(edges));
    std::string line = encode_graph6(g);
    if (!(parse_graph6(line) == g) || encode_graph6(parse_graph6(line)) != line) return false;
  }
  std::printf("       witnesses certified: %lld/%lld\n", witnesses_valid, witnesses_checked);
  return witnesses_checked > 0 && witnesses_valid == witnesses_checked;
}

bool criterion_performance() {
  auto t0 = Clock::now();
  int p14 = solver_tm(make_family(FamilySpec::path(14)));
  double p14_seconds = std::chrono::duration<double>(Clock::now() - t0).count();

  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::ExhaustiveConnected;
  spec.max_n = 5;
  spec.jobs = 1;
  CorpusReport report = run_corpus(spec, cfg);
  std::printf("       gamma_tm(P_14) in %.3fs; exhaustive n<=5 suite in %.3fs (%d pass, %d fail)\n",
              p14_seconds, report.elapsed_seconds, report.pass, report.fail);
  return p14 == 8 && p14_seconds < 10.0 && report.elapsed_seconds < 120.0 && report.fail == 0;
}

}  // namespace

int main() {
  report(1, "closed forms match the exact solver on all family sweeps", criterion_formula_oracle());
  report(2, "figure fixtures reproduce exactly", criterion_figures());
  report(3, "direct search equals gamma_t of the total graph on all connected n<=6",
         criterion_total_graph_identity());
  report(4, "sandwich bounds hold on all connected n<=6 with both tightness fixtures",
         criterion_sandwich());
  report(5, "line-graph closed forms match exact solves", criterion_line_formulas());
  report(6, "wheel refinement is tight and beats the plain sum for 4<=n<=8",
         criterion_wheel_refinement());
  report(7, "tree suite: iff, 2n/3 bound, constructions validate", criterion_trees());
  report(8, "2-corona value is 2n over all connected bases n<=5", criterion_corona());
  report(9, "diameter implication holds on n<=6; C_4 converse counterexample reproduces",
         criterion_diameter());
  report(10, "subset property suites, graph6 round-trip, witness validity", criterion_property_suites());
  report(11, "performance targets met", criterion_performance());
  return failures == 0 ? 0 : 1;
}
