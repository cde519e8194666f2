#ifndef DOMLAB_CHECKS_HPP
#define DOMLAB_CHECKS_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"
#include "domlab/solve.hpp"

namespace domlab {

enum class CheckStatus { Pass, Fail, Skipped };
const char* check_status_name(CheckStatus s);

/// Structured pass/fail record of one theorem checked on one graph.
/// Fail reports always carry the full edge list for replay.
struct TheoremReport {
  std::string theorem_id;
  std::string graph_digest;
  std::string graph6;
  CheckStatus status = CheckStatus::Skipped;
  std::string reason;  // skip reason or failure description
  long long lhs = -1;
  long long rhs = -1;
  std::string note;  // recorded side facts (converse truth, both c readings, ...)
  std::vector<std::string> witnesses;
  int n = 0;
  std::vector<Edge> edges;
  double elapsed_seconds = 0;
};

TheoremReport verify_sandwich(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_total_graph_identity(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_upper_min(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_diam(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_tree_iff(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_tree_bound(const Graph& g, const SolverConfig& cfg);
/// Treats the input graph as the corona base.
TheoremReport verify_corona(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_ham_bound(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_observation(const Graph& g, const SolverConfig& cfg);
TheoremReport verify_lemma_edge_lower(const Graph& g, const SolverConfig& cfg);

std::vector<std::string> all_check_ids();
TheoremReport run_check(const std::string& id, const Graph& g, const SolverConfig& cfg);

struct CorpusSpec {
  enum class Mode { ExhaustiveConnected, RandomTrees, RandomConnected, FromGraphs };
  Mode mode = Mode::ExhaustiveConnected;
  int max_n = 5;
  int count = 0;
  double edge_prob = 0.5;
  unsigned seed = 0;
  bool dedup_isomorphism = true;
  std::vector<Graph> graphs;           // FromGraphs
  std::vector<std::string> checks;     // empty = all
  int jobs = 1;
};

struct CorpusReport {
  std::string corpus_desc;
  std::vector<TheoremReport> results;  // sorted by (graph_digest, theorem_id)
  int pass = 0;
  int fail = 0;
  int skipped = 0;
  double elapsed_seconds = 0;
};

/// Runs every requested check on every corpus graph; deterministic given the
/// seed, results merged in digest order regardless of worker count.
CorpusReport run_corpus(const CorpusSpec& spec, const SolverConfig& cfg = SolverConfig::defaults());

/// JSON report schema: {version, corpus, results: [...], summary: {...}}.
/// Timing fields are omitted when include_timing is false so reruns compare
/// byte for byte.
std::string corpus_report_to_json(const CorpusReport& report, bool include_timing = true);

struct AlphaScanEntry {
  std::string graph_digest;
  std::string graph6;
  int gamma_tm_value = 0;
  int gamma_t_value = 0;
  double ratio = 0;
};

struct AlphaScanReport {
  std::vector<AlphaScanEntry> entries;
  double min_ratio = 0;
  std::string min_graph6;
};

/// Exploratory gamma_tm / gamma_t ratio scan; carries no pass/fail claim.
AlphaScanReport alpha_scan(const CorpusSpec& spec, const SolverConfig& cfg = SolverConfig::defaults());

/// Corpus generators.
std::vector<Graph> enumerate_connected_graphs(int max_n, bool dedup_isomorphism);
std::vector<Graph> enumerate_trees(int max_n);
std::vector<Graph> random_trees(int count, int max_n, unsigned seed);
std::vector<Graph> random_connected(int count, int max_n, double edge_prob, unsigned seed);

/// Reconstruction of the two-block tightness fixture: a pendant vertex on a
/// K_4 block, mirrored, joined by a bridge between the two block vertices
/// carrying the pendants.
Graph upper_tightness_fixture();

}  // namespace domlab

#endif
