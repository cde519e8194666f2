#include "domlab/solve.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdlib>
#include <string>

namespace domlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::uint64_t full_mask(int n) {
  return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

std::uint64_t vertex_set_mask(const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int v : s) m |= bit(v);
  return m;
}

std::vector<int> mask_vertices(std::uint64_t m) {
  std::vector<int> out;
  for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
  return out;
}

void require_min_degree_one(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::EmptyGraph, "empty graph");
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) throw Error(Errc::IsolatedVertex, "vertex " + std::to_string(v) + " is isolated");
}

// Gosper's hack: next bitmask with the same popcount.
std::uint64_t next_combination(std::uint64_t x) {
  std::uint64_t c = x & (~x + 1);
  std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

// Exact minimum "hitting" search common to total domination: find the
// smallest set S with cover[v] & S != 0 for every v in `targets`, where
// cover[v] lists the elements whose selection satisfies v. Branches on the
// lowest unsatisfied target, candidates in ascending order.
struct CoverSearch {
  const std::vector<std::uint64_t>& cover;   // per target: which picks satisfy it
  const std::vector<std::uint64_t>& gain;    // per pick: which targets it satisfies
  std::uint64_t targets;
  int max_gain;                              // max popcount of gain, for the bound
  std::optional<long long> budget;
  long long nodes = 0;
  int best;
  std::uint64_t best_set;

  void run(std::uint64_t seed_set, int seed_size) {
    best = seed_size;
    best_set = seed_set;
    dfs(0, 0, 0);
  }

  void dfs(std::uint64_t chosen, std::uint64_t satisfied, int count) {
    ++nodes;
    if (budget && nodes > *budget) throw Error(Errc::BudgetExhausted, "node budget exhausted");
    std::uint64_t unsat = targets & ~satisfied;
    if (!unsat) {
      if (count < best) {
        best = count;
        best_set = chosen;
      }
      return;
    }
    int lb = (std::popcount(unsat) + max_gain - 1) / max_gain;
    if (count + lb >= best) return;
    int v = std::countr_zero(unsat);
    for (std::uint64_t cand = cover[static_cast<std::size_t>(v)]; cand; cand &= cand - 1) {
      int u = std::countr_zero(cand);
      dfs(chosen | bit(u), satisfied | gain[static_cast<std::size_t>(u)], count + 1);
    }
  }
};

// Greedy seed for CoverSearch: repeatedly take the pick satisfying the most
// unsatisfied targets, lowest index on ties.
std::uint64_t greedy_cover(const std::vector<std::uint64_t>& gain, std::uint64_t targets, int* out_size) {
  std::uint64_t chosen = 0, satisfied = 0;
  int size = 0;
  while (targets & ~satisfied) {
    int best_u = -1, best_gain = 0;
    for (int u = 0; u < static_cast<int>(gain.size()); ++u) {
      int gn = std::popcount(gain[static_cast<std::size_t>(u)] & targets & ~satisfied);
      if (gn > best_gain) {
        best_gain = gn;
        best_u = u;
      }
    }
    if (best_u < 0) throw Error(Errc::IsolatedVertex, "uncoverable element");
    chosen |= bit(best_u);
    satisfied |= gain[static_cast<std::size_t>(best_u)];
    ++size;
  }
  *out_size = size;
  return chosen;
}

// Total domination instance over a graph H: cover[v] = gain[v] = N_H(v).
SolveResult solve_total_domination(const Graph& h, const SolverConfig& cfg, SolveMethod method) {
  auto t0 = Clock::now();
  require_min_degree_one(h);
  int n = h.order();
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = h.adjacency_mask(v);
  int seed_size = 0;
  std::uint64_t seed = greedy_cover(adj, full_mask(n), &seed_size);
  CoverSearch search{adj, adj, full_mask(n), max_degree(h), cfg.node_budget};
  search.run(seed, seed_size);
  std::vector<MixedElement> witness;
  for (int v : mask_vertices(search.best_set)) witness.push_back(MixedElement::vertex(v));
  SolveResult res{search.best, MixedSet(h, std::move(witness)), method, search.nodes, seconds_since(t0)};
  std::vector<int> ws = mask_vertices(search.best_set);
  if (!is_tds(h, ws)) throw Error(Errc::ConstructionFailed, "solver produced an invalid TDS witness");
  return res;
}

void check_element_cap(const Graph& g, const SolverConfig& cfg) {
  if (element_count(g) > cfg.element_cap)
    throw Error(Errc::TooLarge, "|V|+|E| = " + std::to_string(element_count(g)) + " exceeds element cap " +
                                    std::to_string(cfg.element_cap));
}

}  // namespace

const char* solve_method_name(SolveMethod m) {
  switch (m) {
    case SolveMethod::TotalGraphReduction: return "total-graph-reduction";
    case SolveMethod::DirectSearch: return "direct-search";
    case SolveMethod::BruteForce: return "brute-force";
  }
  return "?";
}

SolverConfig SolverConfig::defaults() {
  SolverConfig cfg;
  if (const char* cap = std::getenv("DOMLAB_ELEMENT_CAP")) {
    int v = std::atoi(cap);
    if (v > 0) cfg.element_cap = v;
  }
  return cfg;
}

bool is_tds(const Graph& g, const std::vector<int>& s) {
  std::uint64_t m = vertex_set_mask(s);
  for (int v = 0; v < g.order(); ++v)
    if (!(g.adjacency_mask(v) & m)) return false;
  return true;
}

std::vector<std::uint64_t> mixed_neighborhood_masks(const Graph& g) {
  int n = g.order();
  int m = g.size();
  std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n + m), 0);
  for (int v = 0; v < n; ++v) nbr[static_cast<std::size_t>(v)] = g.adjacency_mask(v);
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    nbr[static_cast<std::size_t>(e.u)] |= bit(n + k);
    nbr[static_cast<std::size_t>(e.v)] |= bit(n + k);
    nbr[static_cast<std::size_t>(n + k)] |= bit(e.u) | bit(e.v);
    for (int j = k + 1; j < m; ++j) {
      const Edge& f = g.edges()[static_cast<std::size_t>(j)];
      if (f.contains(e.u) || f.contains(e.v)) {
        nbr[static_cast<std::size_t>(n + k)] |= bit(n + j);
        nbr[static_cast<std::size_t>(n + j)] |= bit(n + k);
      }
    }
  }
  return nbr;
}

namespace {

std::uint64_t mixed_set_mask(const Graph& g, const MixedSet& s) {
  std::uint64_t m = 0;
  for (const MixedElement& x : s.elements()) m |= bit(element_id(g, x));
  return m;
}

MixedSet mask_to_mixed_set(const Graph& g, std::uint64_t m) {
  std::vector<MixedElement> els;
  for (; m; m &= m - 1) els.push_back(element_of(g, std::countr_zero(m)));
  return MixedSet(g, std::move(els));
}

}  // namespace

bool is_mds(const Graph& g, const MixedSet& s) {
  auto nbr = mixed_neighborhood_masks(g);
  std::uint64_t sm = mixed_set_mask(g, s);
  for (int x = 0; x < element_count(g); ++x)
    if (!(sm & bit(x)) && !(nbr[static_cast<std::size_t>(x)] & sm)) return false;
  return true;
}

bool is_tmds(const Graph& g, const MixedSet& s) {
  require_min_degree_one(g);
  auto nbr = mixed_neighborhood_masks(g);
  std::uint64_t sm = mixed_set_mask(g, s);
  for (int x = 0; x < element_count(g); ++x)
    if (!(nbr[static_cast<std::size_t>(x)] & sm)) return false;
  return true;
}

SolveResult gamma_t(const Graph& g, const SolverConfig& cfg) {
  return solve_total_domination(g, cfg, SolveMethod::DirectSearch);
}

SolveResult gamma_tm(const Graph& g, const SolverConfig& cfg) {
  auto t0 = Clock::now();
  require_min_degree_one(g);
  check_element_cap(g, cfg);
  LabeledGraph t = total_graph(g);
  SolveResult inner = solve_total_domination(t.graph, cfg, SolveMethod::TotalGraphReduction);
  std::vector<MixedElement> witness;
  for (const MixedElement& x : inner.witness.elements())
    witness.push_back(t.labels[static_cast<std::size_t>(x.vertex_id())]);
  MixedSet mapped(g, std::move(witness));
  if (!is_tmds(g, mapped)) throw Error(Errc::ConstructionFailed, "mapped witness is not a TMDS");
  return SolveResult{inner.value, std::move(mapped), SolveMethod::TotalGraphReduction, inner.nodes_explored,
                     seconds_since(t0)};
}

namespace {

// Smallest k-subset (ascending mask order) satisfying pred; nullopt if none.
template <typename Pred>
std::optional<std::uint64_t> first_k_subset(int universe, int k, Pred&& pred, long long* nodes) {
  if (k == 0) return pred(std::uint64_t{0}) ? std::optional<std::uint64_t>(0) : std::nullopt;
  if (k > universe) return std::nullopt;
  std::uint64_t m = (std::uint64_t{1} << k) - 1;
  std::uint64_t limit = full_mask(universe);
  while (m <= limit) {
    ++*nodes;
    if (pred(m)) return m;
    if (m == (limit & ~(full_mask(universe - k)))) break;  // highest k-subset
    m = next_combination(m);
  }
  return std::nullopt;
}

SolveResult solve_increasing(const Graph& g, const std::vector<std::uint64_t>& nbr, bool total,
                             const SolverConfig& cfg) {
  auto t0 = Clock::now();
  int u = element_count(g);
  long long nodes = 0;
  auto valid = [&](std::uint64_t s) {
    for (int x = 0; x < u; ++x) {
      if (!total && (s & bit(x))) continue;
      if (!(nbr[static_cast<std::size_t>(x)] & s)) return false;
    }
    return true;
  };
  for (int k = 0; k <= u; ++k) {
    if (cfg.node_budget && nodes > *cfg.node_budget) throw Error(Errc::BudgetExhausted, "node budget exhausted");
    if (auto m = first_k_subset(u, k, valid, &nodes)) {
      return SolveResult{k, mask_to_mixed_set(g, *m), SolveMethod::BruteForce, nodes, seconds_since(t0)};
    }
  }
  throw Error(Errc::ConstructionFailed, "no dominating set exists");
}

}  // namespace

SolveResult gamma_tm_direct(const Graph& g, const SolverConfig& cfg) {
  require_min_degree_one(g);
  check_element_cap(g, cfg);
  return solve_increasing(g, mixed_neighborhood_masks(g), /*total=*/true, cfg);
}

SolveResult gamma_m(const Graph& g, const SolverConfig& cfg) {
  if (g.order() < 1) throw Error(Errc::EmptyGraph, "empty graph");
  check_element_cap(g, cfg);
  return solve_increasing(g, mixed_neighborhood_masks(g), /*total=*/false, cfg);
}

namespace {

struct VertexCoverSearch {
  const Graph& g;
  int best;
  std::uint64_t best_set;
  long long nodes = 0;

  void dfs(std::uint64_t chosen, int count) {
    ++nodes;
    if (count >= best) return;
    for (const Edge& e : g.edges()) {
      if ((chosen & bit(e.u)) || (chosen & bit(e.v))) continue;
      dfs(chosen | bit(e.u), count + 1);
      dfs(chosen | bit(e.v), count + 1);
      return;
    }
    best = count;
    best_set = chosen;
  }
};

}  // namespace

SolveResult min_vertex_cover(const Graph& g) {
  auto t0 = Clock::now();
  VertexCoverSearch search{g, g.order() + 1, 0};
  // all endpoints of one side bound the optimum; start from the trivial cover
  std::uint64_t trivial = 0;
  for (const Edge& e : g.edges()) trivial |= bit(e.u);
  search.best = std::popcount(trivial) + 1;
  search.best_set = trivial;
  if (g.size() == 0) {
    search.best = 0;
    search.best_set = 0;
  } else {
    search.dfs(0, 0);
  }
  std::vector<MixedElement> witness;
  for (int v : mask_vertices(search.best_set)) witness.push_back(MixedElement::vertex(v));
  return SolveResult{search.best, MixedSet(g, std::move(witness)), SolveMethod::DirectSearch, search.nodes,
                     seconds_since(t0)};
}

std::vector<std::vector<int>> enumerate_min_tds(const Graph& g, const SolverConfig& cfg) {
  int value = gamma_t(g, cfg).value;
  int n = g.order();
  std::vector<std::vector<int>> out;
  std::uint64_t m = (std::uint64_t{1} << value) - 1;
  std::uint64_t limit = full_mask(n);
  while (m <= limit) {
    std::vector<int> s = mask_vertices(m);
    if (is_tds(g, s)) out.push_back(std::move(s));
    if (m == (limit & ~full_mask(n - value))) break;
    m = next_combination(m);
  }
  return out;
}

std::vector<MixedSet> enumerate_min_tmds(const Graph& g, const SolverConfig& cfg) {
  int value = gamma_tm_direct(g, cfg).value;
  auto nbr = mixed_neighborhood_masks(g);
  int u = element_count(g);
  std::vector<MixedSet> out;
  std::uint64_t m = (std::uint64_t{1} << value) - 1;
  std::uint64_t limit = full_mask(u);
  auto valid = [&](std::uint64_t s) {
    for (int x = 0; x < u; ++x)
      if (!(nbr[static_cast<std::size_t>(x)] & s)) return false;
    return true;
  };
  while (m <= limit) {
    if (valid(m)) out.push_back(mask_to_mixed_set(g, m));
    if (m == (limit & ~full_mask(u - value))) break;
    m = next_combination(m);
  }
  return out;
}

namespace {

Graph delete_vertices(const Graph& g, const std::vector<int>& removed, std::vector<int>* old_ids) {
  std::uint64_t rm = vertex_set_mask(removed);
  std::vector<int> newid(static_cast<std::size_t>(g.order()), -1);
  old_ids->clear();
  int next = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (rm & bit(v)) continue;
    newid[static_cast<std::size_t>(v)] = next++;
    old_ids->push_back(v);
  }
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    int a = newid[static_cast<std::size_t>(e.u)];
    int b = newid[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) edges.emplace_back(a, b);
  }
  return Graph(next, std::move(edges));
}

// Bron-Kerbosch with pivot; cliques come out sorted for determinism.
void bron_kerbosch(const Graph& g, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>* out) {
  if (!p && !x) {
    out->push_back(r);
    return;
  }
  std::uint64_t px = p | x;
  int pivot = std::countr_zero(px);
  int best_deg = -1;
  for (std::uint64_t t = px; t; t &= t - 1) {
    int v = std::countr_zero(t);
    int d = std::popcount(g.adjacency_mask(v) & p);
    if (d > best_deg) {
      best_deg = d;
      pivot = v;
    }
  }
  std::uint64_t cand = p & ~g.adjacency_mask(pivot);
  for (std::uint64_t t = cand; t; t &= t - 1) {
    int v = std::countr_zero(t);
    bron_kerbosch(g, r | bit(v), p & g.adjacency_mask(v), x & g.adjacency_mask(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<std::uint64_t> maximal_cliques(const Graph& g) {
  std::vector<std::uint64_t> out;
  if (g.order() > 0) bron_kerbosch(g, 0, full_mask(g.order()), 0, &out);
  std::sort(out.begin(), out.end());
  return out;
}

struct HittingSetSearch {
  const std::vector<std::uint64_t>& sets;
  int best;

  void dfs(std::uint64_t chosen, int count) {
    if (count >= best) return;
    for (std::uint64_t s : sets) {
      if (s & chosen) continue;
      for (std::uint64_t t = s; t; t &= t - 1) dfs(chosen | bit(std::countr_zero(t)), count + 1);
      return;
    }
    best = count;
  }
};

struct DisjointCoverSearch {
  const std::vector<std::uint64_t>& cliques;
  std::uint64_t all;
  int best = -1;

  void dfs(std::uint64_t covered, int count) {
    if (best >= 0 && count >= best) return;
    if (covered == all) {
      best = count;
      return;
    }
    int v = std::countr_zero(all & ~covered);
    for (std::uint64_t c : cliques)
      if ((c & bit(v)) && !(c & covered)) dfs(covered | c, count + 1);
  }
};

}  // namespace

int clique_transversal_param(const Graph& h, const std::vector<int>& d) {
  std::vector<int> old_ids;
  Graph residual = delete_vertices(h, d, &old_ids);
  if (residual.order() == 0) throw Error(Errc::EmptyResidual, "H - D is empty");
  auto cliques = maximal_cliques(residual);
  HittingSetSearch search{cliques, static_cast<int>(cliques.size()) + 1};
  search.dfs(0, 0);
  return search.best;
}

std::optional<int> disjoint_clique_cover_param(const Graph& h, const std::vector<int>& d) {
  std::vector<int> old_ids;
  Graph residual = delete_vertices(h, d, &old_ids);
  if (residual.order() == 0) throw Error(Errc::EmptyResidual, "H - D is empty");
  auto cliques = maximal_cliques(residual);
  DisjointCoverSearch search{cliques, full_mask(residual.order())};
  search.dfs(0, 0);
  if (search.best < 0) return std::nullopt;
  return search.best;
}

int beta_param(const Graph& g, const SolverConfig& cfg) {
  auto min_tdss = enumerate_min_tds(g, cfg);
  int best = g.order() + 1;
  for (const auto& s : min_tdss) {
    std::vector<int> old_ids;
    Graph residual = delete_vertices(g, s, &old_ids);
    best = std::min(best, min_vertex_cover(residual).value);
  }
  return best;
}

CliqueParams c_line_params(const Graph& g, const SolverConfig& cfg) {
  Graph l = line_graph(g).graph;
  CliqueParams out{l.order() + 1, std::nullopt};
  for (const auto& d : enumerate_min_tds(l, cfg)) {
    if (static_cast<int>(d.size()) == l.order()) {
      // D swallows all of L(G); nothing is left to transverse or cover
      out.transversal = 0;
      out.disjoint_cover = 0;
      continue;
    }
    out.transversal = std::min(out.transversal, clique_transversal_param(l, d));
    if (auto raw = disjoint_clique_cover_param(l, d))
      out.disjoint_cover = out.disjoint_cover ? std::min(*out.disjoint_cover, *raw) : *raw;
  }
  return out;
}

int c_line_param(const Graph& g, const SolverConfig& cfg) {
  return c_line_params(g, cfg).transversal;
}

MixedSet greedy_tmds(const Graph& g, const SolverConfig&) {
  require_min_degree_one(g);
  auto nbr = mixed_neighborhood_masks(g);
  int size = 0;
  std::uint64_t chosen = greedy_cover(nbr, full_mask(element_count(g)), &size);
  MixedSet s = mask_to_mixed_set(g, chosen);
  if (!is_tmds(g, s)) throw Error(Errc::ConstructionFailed, "greedy produced an invalid TMDS");
  return s;
}

}  // namespace domlab
