#include <doctest.h>

#include <json.hpp>

#include "domlab/checks.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"
#include "domlab/solve.hpp"

using namespace domlab;

namespace {
const SolverConfig kCfg = SolverConfig::defaults();
}

TEST_SUITE("checks") {

TEST_CASE("sandwich check on the printed tightness examples") {
  TheoremReport k6 = verify_sandwich(make_family(FamilySpec::complete(6)), kCfg);
  CHECK(k6.status == CheckStatus::Pass);
  CHECK(k6.lhs == 4);  // equals gamma_t(L(K_6)) — lower bound tight

  TheoremReport p3 = verify_sandwich(make_family(FamilySpec::path(3)), kCfg);
  CHECK(p3.status == CheckStatus::Pass);
  CHECK(p3.lhs == 2);

  TheoremReport fix = verify_sandwich(upper_tightness_fixture(), kCfg);
  CHECK(fix.status == CheckStatus::Pass);
  CHECK(fix.lhs == 6);
  CHECK(fix.rhs == 6);  // upper bound tight: 2 + 4

  CHECK(verify_sandwich(make_family(FamilySpec::complete(2)), kCfg).status == CheckStatus::Skipped);
}

TEST_CASE("tightness fixture certified by the exact solver") {
  Graph g = upper_tightness_fixture();
  CHECK(gamma_t(g, kCfg).value == 2);
  CHECK(gamma_t(line_graph(g).graph, kCfg).value == 4);
  CHECK(gamma_tm(g, kCfg).value == 6);
}

TEST_CASE("total graph identity check") {
  CHECK(verify_total_graph_identity(make_family(FamilySpec::cycle(5)), kCfg).status == CheckStatus::Pass);
  CHECK(verify_total_graph_identity(make_family(FamilySpec::complete_bipartite(2, 3)), kCfg).status ==
        CheckStatus::Pass);
  for (const Graph& t : random_trees(3, 9, 7))
    CHECK(verify_total_graph_identity(t, kCfg).status == CheckStatus::Pass);
}

TEST_CASE("refined upper bound check reports both clique readings") {
  TheoremReport w6 = verify_upper_min(make_family(FamilySpec::wheel(6)), kCfg);
  CHECK(w6.status == CheckStatus::Pass);
  CHECK(w6.lhs == 4);
  CHECK(w6.rhs == 4);  // bound met with equality
  CHECK(w6.note.find("c_transversal=") != std::string::npos);
  CHECK(w6.note.find("c_disjoint_cover=") != std::string::npos);

  CHECK(verify_upper_min(make_family(FamilySpec::complete(4)), kCfg).status == CheckStatus::Pass);
  CHECK(verify_upper_min(make_family(FamilySpec::cycle(7)), kCfg).status == CheckStatus::Pass);
}

TEST_CASE("diameter implication check and the recorded converse") {
  TheoremReport c4 = verify_diam(make_family(FamilySpec::cycle(4)), kCfg);
  CHECK(c4.status == CheckStatus::Pass);
  CHECK(c4.note.find("false") != std::string::npos);  // diam 2 but gamma_tm 3

  TheoremReport star = verify_diam(make_family(FamilySpec::complete_bipartite(1, 5)), kCfg);
  CHECK(star.status == CheckStatus::Pass);
  CHECK(star.lhs == 2);

  TheoremReport p8 = verify_diam(make_family(FamilySpec::path(8)), kCfg);
  CHECK(p8.status == CheckStatus::Pass);
  CHECK(p8.lhs == 5);  // vacuous case: gamma_tm(P_8) = 5 > 2
}

TEST_CASE("tree checks") {
  TheoremReport ds = verify_tree_iff(make_family(FamilySpec::double_star(3)), kCfg);
  CHECK(ds.status == CheckStatus::Pass);
  CHECK(verify_tree_iff(make_family(FamilySpec::complete_bipartite(1, 4)), kCfg).status ==
        CheckStatus::Pass);
  CHECK(verify_tree_iff(make_family(FamilySpec::path(4)), kCfg).status == CheckStatus::Pass);
  CHECK(verify_tree_iff(make_family(FamilySpec::cycle(4)), kCfg).status == CheckStatus::Skipped);

  TheoremReport bound = verify_tree_bound(make_family(FamilySpec::double_star(3)), kCfg);
  CHECK(bound.status == CheckStatus::Pass);
  CHECK(bound.lhs == 4);
  CHECK(bound.rhs == 4);  // floor(2*7/3), tight for the 2-corona shape
}

TEST_CASE("corona check treats its input as the base") {
  // the corona over P_6 has 35 elements, just past the default cap
  SolverConfig wide = kCfg;
  wide.element_cap = 40;
  TheoremReport p6 = verify_corona(make_family(FamilySpec::path(6)), wide);
  CHECK(p6.status == CheckStatus::Pass);
  CHECK(p6.lhs == 12);
  CHECK(verify_corona(make_family(FamilySpec::complete(2)), kCfg).lhs == 4);
  CHECK(verify_corona(make_family(FamilySpec::cycle(3)), kCfg).lhs == 6);
}

TEST_CASE("hamiltonian bound check") {
  TheoremReport k5 = verify_ham_bound(make_family(FamilySpec::complete(5)), kCfg);
  CHECK(k5.status == CheckStatus::Pass);
  CHECK(k5.lhs == 4);
  CHECK(k5.rhs == 4);

  TheoremReport star = verify_ham_bound(make_family(FamilySpec::complete_bipartite(1, 3)), kCfg);
  CHECK(star.status == CheckStatus::Skipped);
  CHECK(star.reason == "no Hamiltonian path");

  TheoremReport c9 = verify_ham_bound(make_family(FamilySpec::cycle(9)), kCfg);
  CHECK(c9.status == CheckStatus::Pass);
  CHECK(c9.lhs == 6);
  CHECK(c9.rhs == 6);
}

TEST_CASE("subset-enumeration checks") {
  for (const char* fam : {"p4", "k3", "c4"}) {
    Graph g = fam[0] == 'p' ? make_family(FamilySpec::path(4))
              : fam[0] == 'k' ? make_family(FamilySpec::complete(3))
                              : make_family(FamilySpec::cycle(4));
    CHECK(verify_observation(g, kCfg).status == CheckStatus::Pass);
  }
  CHECK(verify_lemma_edge_lower(make_family(FamilySpec::complete(4)), kCfg).status == CheckStatus::Pass);
  CHECK(verify_lemma_edge_lower(make_family(FamilySpec::complete(5)), kCfg).status == CheckStatus::Pass);
  CHECK(verify_lemma_edge_lower(make_family(FamilySpec::path(5)), kCfg).status == CheckStatus::Pass);
}

TEST_CASE("check registry") {
  auto ids = all_check_ids();
  CHECK(ids.size() == 10);
  for (const std::string& id : ids) {
    TheoremReport r = run_check(id, make_family(FamilySpec::path(4)), kCfg);
    CHECK(r.theorem_id == id);
    CHECK(r.graph6 == encode_graph6(make_family(FamilySpec::path(4))));
  }
  CHECK_THROWS_AS(run_check("no-such-check", make_family(FamilySpec::path(3)), kCfg), Error);
}

TEST_CASE("connected-graph enumeration matches the known unlabeled counts") {
  auto graphs = enumerate_connected_graphs(5, true);
  int by_n[6] = {0, 0, 0, 0, 0, 0};
  for (const Graph& g : graphs) ++by_n[g.order()];
  CHECK(by_n[1] == 1);
  CHECK(by_n[2] == 1);
  CHECK(by_n[3] == 2);
  CHECK(by_n[4] == 6);
  CHECK(by_n[5] == 21);

  // labeled mode keeps isomorphic duplicates: 1, 1, 4, 38, 728
  auto labeled = enumerate_connected_graphs(4, false);
  int labeled_by_n[5] = {0, 0, 0, 0, 0};
  for (const Graph& g : labeled) ++labeled_by_n[g.order()];
  CHECK(labeled_by_n[3] == 4);
  CHECK(labeled_by_n[4] == 38);
}

TEST_CASE("tree enumeration matches the known unlabeled counts") {
  auto trees = enumerate_trees(9);
  int by_n[10] = {};
  for (const Graph& t : trees) {
    CHECK(is_tree(t));
    ++by_n[t.order()];
  }
  const int expected[] = {1, 1, 2, 3, 6, 11, 23, 47};  // n = 2..9
  for (int n = 2; n <= 9; ++n) CHECK(by_n[n] == expected[n - 2]);
}

TEST_CASE("random generators are seed-deterministic") {
  auto a = random_trees(20, 12, 42);
  auto b = random_trees(20, 12, 42);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i] == b[i]);
    CHECK(is_tree(a[i]));
  }
  CHECK(random_trees(5, 12, 1) != random_trees(5, 12, 2));

  auto c = random_connected(10, 7, 0.4, 9);
  auto d = random_connected(10, 7, 0.4, 9);
  for (std::size_t i = 0; i < c.size(); ++i) {
    CHECK(c[i] == d[i]);
    CHECK(is_connected(c[i]));
  }
}

TEST_CASE("corpus runs are reproducible and worker-count independent") {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::ExhaustiveConnected;
  spec.max_n = 4;
  spec.jobs = 1;
  CorpusReport serial = run_corpus(spec, kCfg);
  spec.jobs = 4;
  CorpusReport parallel = run_corpus(spec, kCfg);
  CHECK(corpus_report_to_json(serial, false) == corpus_report_to_json(parallel, false));
  CHECK(serial.fail == 0);
  for (std::size_t i = 1; i < serial.results.size(); ++i) {
    const TheoremReport& prev = serial.results[i - 1];
    const TheoremReport& cur = serial.results[i];
    CHECK((prev.graph_digest < cur.graph_digest ||
           (prev.graph_digest == cur.graph_digest && prev.theorem_id <= cur.theorem_id)));
  }
}

TEST_CASE("corpus report JSON schema") {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::FromGraphs;
  spec.graphs = {make_family(FamilySpec::cycle(4))};
  spec.checks = {"diam-implication"};
  CorpusReport report = run_corpus(spec, kCfg);
  auto j = nlohmann::json::parse(corpus_report_to_json(report, true));
  CHECK(j["version"] == 1);
  CHECK(j.contains("corpus"));
  REQUIRE(j["results"].size() == 1);
  CHECK(j["results"][0]["theorem_id"] == "diam-implication");
  CHECK(j["results"][0]["status"] == "pass");
  CHECK(j["results"][0]["note"].get<std::string>().find("false") != std::string::npos);
  CHECK(j["results"][0].contains("elapsed_seconds"));
  CHECK(j["summary"]["pass"] == 1);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["summary"]["skipped"] == 0);

  auto no_timing = nlohmann::json::parse(corpus_report_to_json(report, false));
  CHECK_FALSE(no_timing["results"][0].contains("elapsed_seconds"));
}

TEST_CASE("unknown corpus check ids are rejected up front") {
  CorpusSpec spec;
  spec.mode = CorpusSpec::Mode::FromGraphs;
  spec.graphs = {make_family(FamilySpec::path(3))};
  spec.checks = {"bogus"};
  CHECK_THROWS_AS(run_corpus(spec, kCfg), Error);
}

TEST_CASE("cap overruns surface as skips, never crashes") {
  SolverConfig tiny;
  tiny.element_cap = 3;
  CHECK(verify_corona(make_family(FamilySpec::complete(5)), tiny).status == CheckStatus::Skipped);
  CHECK(verify_sandwich(make_family(FamilySpec::complete(5)), tiny).status == CheckStatus::Skipped);
}

TEST_CASE("fail reports serialize the edge list for replay") {
  Graph c4 = make_family(FamilySpec::cycle(4));
  CorpusReport report;
  report.corpus_desc = "synthetic";
  TheoremReport r;
  r.theorem_id = "sandwich";
  r.graph6 = encode_graph6(c4);
  r.graph_digest = graph_digest(c4);
  r.status = CheckStatus::Fail;
  r.reason = "synthetic failure";
  r.n = c4.order();
  r.edges = c4.edges();
  report.results.push_back(r);
  report.fail = 1;

  auto j = nlohmann::json::parse(corpus_report_to_json(report, false));
  CHECK(j["results"][0]["n"] == 4);
  REQUIRE(j["results"][0]["edges"].size() == 4);
  Graph replay(j["results"][0]["n"].get<int>(), [&] {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["results"][0]["edges"]) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    return edges;
  }());
  CHECK(replay == c4);
}

TEST_CASE("alpha scan reproduces the printed ratio data points") {
  CorpusSpec stars;
  stars.mode = CorpusSpec::Mode::FromGraphs;
  for (int n = 1; n <= 5; ++n) stars.graphs.push_back(make_family(FamilySpec::complete_bipartite(1, n)));
  AlphaScanReport sr = alpha_scan(stars, kCfg);
  CHECK(sr.entries.size() == 5);
  CHECK(sr.min_ratio == doctest::Approx(1.0));

  CorpusSpec wheels;
  wheels.mode = CorpusSpec::Mode::FromGraphs;
  for (int n = 4; n <= 8; ++n) wheels.graphs.push_back(make_family(FamilySpec::wheel(n)));
  AlphaScanReport wr = alpha_scan(wheels, kCfg);
  for (const AlphaScanEntry& e : wr.entries) {
    int n = parse_graph6(e.graph6).order() - 1;
    CHECK(e.gamma_t_value == 2);
    CHECK(e.gamma_tm_value == (n + 1) / 2 + 1);
    CHECK(e.ratio == doctest::Approx(((n + 1) / 2 + 1) / 2.0));
  }
}

}  // TEST_SUITE
