#ifndef DOMLAB_SOLVE_HPP
#define DOMLAB_SOLVE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "domlab/families.hpp"
#include "domlab/graph.hpp"

namespace domlab {

enum class SolveMethod { TotalGraphReduction, DirectSearch, BruteForce };
const char* solve_method_name(SolveMethod m);

struct SolverConfig {
  std::optional<long long> node_budget;
  int element_cap = 34;
  bool deterministic_tie_break = true;

  /// Default config; DOMLAB_ELEMENT_CAP overrides the element cap.
  static SolverConfig defaults();
};

/// A certified answer: the invariant value, a witness validated against the
/// corresponding predicate, and solver telemetry.
struct SolveResult {
  int value;
  MixedSet witness;
  SolveMethod method;
  long long nodes_explored;
  double elapsed_seconds;
};

bool is_tds(const Graph& g, const std::vector<int>& s);
bool is_mds(const Graph& g, const MixedSet& s);
bool is_tmds(const Graph& g, const MixedSet& s);

/// Exact total domination number, branch and bound seeded by a greedy cover.
SolveResult gamma_t(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Exact total mixed domination number via total domination of the total
/// graph; the witness is mapped back through the provenance labels.
SolveResult gamma_tm(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Independent oracle: cardinality-increasing exhaustive search over subsets
/// of V ∪ E, no total-graph reduction.
SolveResult gamma_tm_direct(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Exact mixed domination number by cardinality-increasing search.
SolveResult gamma_m(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Exact minimum vertex cover beta(G).
SolveResult min_vertex_cover(const Graph& g);

/// All total dominating sets of minimum size.
std::vector<std::vector<int>> enumerate_min_tds(const Graph& g,
                                                const SolverConfig& cfg = SolverConfig::defaults());

/// All total mixed dominating sets of minimum size.
std::vector<MixedSet> enumerate_min_tmds(const Graph& g,
                                         const SolverConfig& cfg = SolverConfig::defaults());

/// min over min-TDSs S of G of beta(G - S).
int beta_param(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Minimum size of a vertex set of H - D meeting every maximal clique of
/// H - D (clique transversal).
int clique_transversal_param(const Graph& h, const std::vector<int>& d);

/// Literal reading of the same parameter: minimum number of pairwise
/// disjoint maximal cliques of H - D covering all its vertices; nullopt if
/// no such cover exists.
std::optional<int> disjoint_clique_cover_param(const Graph& h, const std::vector<int>& d);

struct CliqueParams {
  int transversal;
  std::optional<int> disjoint_cover;
};

/// Both readings of c_{L(G)}, each minimized over all min-TDSs of L(G).
CliqueParams c_line_params(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());
int c_line_param(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Deterministic greedy TMDS, used to seed the branch and bound.
MixedSet greedy_tmds(const Graph& g, const SolverConfig& cfg = SolverConfig::defaults());

/// Per-element mixed-neighborhood bitmasks over the id universe of
/// element_id (vertices then canonical edges).
std::vector<std::uint64_t> mixed_neighborhood_masks(const Graph& g);

}  // namespace domlab

#endif
