#include "domlab/checks.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include <json.hpp>

#include "domlab/closed_forms.hpp"
#include "domlab/families.hpp"
#include "domlab/io.hpp"

namespace domlab {

namespace {

using Clock = std::chrono::steady_clock;

TheoremReport base_report(const std::string& id, const Graph& g) {
  TheoremReport r;
  r.theorem_id = id;
  r.graph6 = encode_graph6(g);
  r.graph_digest = graph_digest(g);
  r.n = g.order();
  r.edges = g.edges();
  return r;
}

bool has_isolated(const Graph& g) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) return true;
  return g.order() == 0;
}

TheoremReport skip(TheoremReport r, std::string reason) {
  r.status = CheckStatus::Skipped;
  r.reason = std::move(reason);
  return r;
}

bool common_skip(const Graph& g, const SolverConfig& cfg, TheoremReport& r, bool need_connected = true) {
  if (g.order() == 0) {
    r = skip(std::move(r), "empty graph");
    return true;
  }
  if (has_isolated(g)) {
    r = skip(std::move(r), "isolated vertex");
    return true;
  }
  if (need_connected && !is_connected(g)) {
    r = skip(std::move(r), "disconnected");
    return true;
  }
  if (element_count(g) > cfg.element_cap) {
    r = skip(std::move(r), "element cap exceeded");
    return true;
  }
  return false;
}

std::string int_note(std::initializer_list<std::pair<const char*, long long>> kv) {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ", ";
    out += std::string(k) + "=" + std::to_string(v);
  }
  return out;
}

}  // namespace

const char* check_status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Skipped: return "skipped";
  }
  return "?";
}

TheoremReport verify_sandwich(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("sandwich", g);
  if (common_skip(g, cfg, r)) return r;
  Graph l = line_graph(g).graph;
  if (l.order() == 0 || has_isolated(l))
    return skip(std::move(r), "gamma_t of the line graph is undefined");
  int gt = gamma_t(g, cfg).value;
  int gl = gamma_t(l, cfg).value;
  SolveResult tm = gamma_tm(g, cfg);
  r.lhs = tm.value;
  r.rhs = gt + gl;
  r.note = int_note({{"gamma_t", gt}, {"gamma_t_line", gl}, {"gamma_tm", tm.value}});
  r.witnesses.push_back(format_mixed_set(tm.witness));
  bool ok = std::max(gt, gl) <= tm.value && tm.value <= gt + gl;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) r.reason = "sandwich inequality violated";
  return r;
}

TheoremReport verify_total_graph_identity(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("total-graph-identity", g);
  if (common_skip(g, cfg, r, /*need_connected=*/false)) return r;
  SolveResult direct = gamma_tm_direct(g, cfg);
  SolveResult via_total = gamma_t(total_graph(g).graph, cfg);
  r.lhs = direct.value;
  r.rhs = via_total.value;
  r.witnesses.push_back(format_mixed_set(direct.witness));
  r.status = direct.value == via_total.value ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail) r.reason = "gamma_tm_direct != gamma_t(T(G))";
  return r;
}

TheoremReport verify_upper_min(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("upper-min", g);
  if (common_skip(g, cfg, r)) return r;
  Graph l = line_graph(g).graph;
  if (l.order() == 0 || has_isolated(l))
    return skip(std::move(r), "gamma_t of the line graph is undefined");
  int gtm = gamma_tm(g, cfg).value;
  int gt = gamma_t(g, cfg).value;
  int beta = beta_param(g, cfg);
  int gl = gamma_t(l, cfg).value;
  CliqueParams cp = c_line_params(g, cfg);
  int ub = std::min(gl + cp.transversal, gt + beta);
  r.lhs = gtm;
  r.rhs = ub;
  r.note = int_note({{"gamma_t", gt}, {"beta_param", beta}, {"gamma_t_line", gl}, {"c_transversal", cp.transversal}});
  r.note += ", c_disjoint_cover=" + (cp.disjoint_cover ? std::to_string(*cp.disjoint_cover) : std::string("none"));
  r.status = gtm <= ub ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail) r.reason = "refined upper bound violated";
  return r;
}

TheoremReport verify_diam(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("diam-implication", g);
  if (common_skip(g, cfg, r)) return r;
  if (g.order() < 2) return skip(std::move(r), "order below 2");
  int gtm = gamma_tm(g, cfg).value;
  int d = diameter(g);
  r.lhs = gtm;
  r.rhs = d;
  bool converse = d <= 3 ? gtm == 2 : true;
  r.note = std::string("converse (diam<=3 implies gamma_tm=2): ") + (d <= 3 ? (converse && gtm == 2 ? "true" : "false") : "n/a");
  bool ok = !(gtm == 2 && d >= 4);
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) r.reason = "gamma_tm = 2 with diameter >= 4";
  return r;
}

TheoremReport verify_tree_iff(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("tree-iff", g);
  if (!is_tree(g) || g.order() < 2) return skip(std::move(r), "not a tree of order >= 2");
  if (common_skip(g, cfg, r)) return r;
  int gtm = gamma_tm(g, cfg).value;
  int d = diameter(g);
  r.lhs = gtm;
  r.rhs = d;
  r.status = ((gtm == 2) == (d <= 3)) ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail) r.reason = "tree iff characterization violated";
  return r;
}

TheoremReport verify_tree_bound(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("tree-2n3", g);
  if (!is_tree(g) || g.order() < 3) return skip(std::move(r), "not a tree of order >= 3");
  if (common_skip(g, cfg, r)) return r;
  int gtm = gamma_tm(g, cfg).value;
  int bound = 2 * g.order() / 3;
  r.lhs = gtm;
  r.rhs = bound;
  bool construction_ok = true;
  try {
    FormulaResult fr = tree_tmds(g);
    r.witnesses.push_back(format_mixed_set(fr.witness));
    r.note = int_note({{"construction_size", fr.value}});
  } catch (const Error& e) {
    construction_ok = false;
    r.note = std::string("construction failed: ") + e.what();
  }
  bool ok = gtm <= bound && construction_ok;
  r.status = ok ? CheckStatus::Pass : CheckStatus::Fail;
  if (!ok) r.reason = construction_ok ? "bound violated" : "tree construction failed";
  return r;
}

TheoremReport verify_corona(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("corona-2n", g);
  if (g.order() < 2) return skip(std::move(r), "base order below 2");
  if (!is_connected(g)) return skip(std::move(r), "base disconnected");
  Graph c2 = corona2(g).graph;
  if (element_count(c2) > cfg.element_cap) return skip(std::move(r), "corona exceeds element cap");
  int gtm = gamma_tm(c2, cfg).value;
  r.lhs = gtm;
  r.rhs = 2 * g.order();
  r.status = gtm == 2 * g.order() ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail) r.reason = "gamma_tm(G o P_2) != 2n";
  return r;
}

TheoremReport verify_ham_bound(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("ham-bound", g);
  if (common_skip(g, cfg, r)) return r;
  if (g.order() < 2) return skip(std::move(r), "order below 2");
  if (g.order() > 20) return skip(std::move(r), "above Hamiltonian search cap");
  auto path = hamiltonian_path(g);
  if (!path) return skip(std::move(r), "no Hamiltonian path");
  int n = g.order();
  int bound = 2 * n / 3 + (n % 3 == 0 ? 0 : 1);
  int gtm = gamma_tm(g, cfg).value;
  r.lhs = gtm;
  r.rhs = bound;
  bool construction_ok = true;
  try {
    FormulaResult fr = hamiltonian_tmds(g, *path);
    r.witnesses.push_back(format_mixed_set(fr.witness));
  } catch (const Error& e) {
    construction_ok = false;
    r.note = std::string("construction failed: ") + e.what();
  }
  r.status = (gtm <= bound && construction_ok) ? CheckStatus::Pass : CheckStatus::Fail;
  if (r.status == CheckStatus::Fail) r.reason = "Hamiltonian-path bound violated";
  return r;
}

TheoremReport verify_observation(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("obs-2.1", g);
  if (common_skip(g, cfg, r, /*need_connected=*/false)) return r;
  if (g.order() > 12 || g.size() > 12) return skip(std::move(r), "too large for subset enumeration");
  int n = g.order();
  int m = g.size();
  auto nbr = mixed_neighborhood_masks(g);
  auto tmds_mask = [&](std::uint64_t s) {
    for (int x = 0; x < n + m; ++x)
      if (!(nbr[static_cast<std::size_t>(x)] & s)) return false;
    return true;
  };
  // bullet 3: a TDS of G is a TMDS of G iff its complement is independent
  for (std::uint64_t vs = 0; vs < (std::uint64_t{1} << n); ++vs) {
    std::vector<int> s;
    for (int v = 0; v < n; ++v)
      if ((vs >> v) & 1) s.push_back(v);
    if (!is_tds(g, s)) continue;
    std::vector<int> comp;
    for (int v = 0; v < n; ++v)
      if (!((vs >> v) & 1)) comp.push_back(v);
    bool tm = tmds_mask(vs);  // vertex ids coincide with element ids
    bool ind = is_independent(g, comp);
    if (tm != ind) {
      r.status = CheckStatus::Fail;
      r.reason = "bullet 3 equivalence violated";
      return r;
    }
  }
  // bullet 2: a TDS S of L(G) is a TMDS of G iff its endpoint indices cover V
  Graph l = line_graph(g).graph;
  int bullet1_discrepancies = 0;
  for (std::uint64_t es = 0; es < (std::uint64_t{1} << m); ++es) {
    std::vector<int> sl;
    for (int k = 0; k < m; ++k)
      if ((es >> k) & 1) sl.push_back(k);
    bool tds_l = is_tds(l, sl);
    // bullet 1, standard reading: TDS of L(G) iff every edge shares an
    // endpoint with a distinct member of S
    bool standard = true;
    for (int k = 0; k < m && standard; ++k) {
      const Edge& e = g.edges()[static_cast<std::size_t>(k)];
      bool hit = false;
      for (int j : sl)
        if (j != k) {
          const Edge& f = g.edges()[static_cast<std::size_t>(j)];
          if (f.contains(e.u) || f.contains(e.v)) {
            hit = true;
            break;
          }
        }
      if (!hit) standard = false;
    }
    if (standard != tds_l) ++bullet1_discrepancies;
    if (!tds_l) continue;
    std::uint64_t em = es << n;
    bool tm = tmds_mask(em);
    std::uint64_t touched = 0;
    for (int k : sl) {
      const Edge& e = g.edges()[static_cast<std::size_t>(k)];
      touched |= (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v);
    }
    bool covers = touched == ((std::uint64_t{1} << n) - 1);
    if (tm != covers) {
      r.status = CheckStatus::Fail;
      r.reason = "bullet 2 equivalence violated";
      return r;
    }
  }
  r.note = int_note({{"bullet1_discrepancies", bullet1_discrepancies}});
  r.status = CheckStatus::Pass;
  return r;
}

TheoremReport verify_lemma_edge_lower(const Graph& g, const SolverConfig& cfg) {
  TheoremReport r = base_report("lemma-edge-lower", g);
  if (common_skip(g, cfg, r, /*need_connected=*/false)) return r;
  if (element_count(g) > 24) return skip(std::move(r), "too large for min-TMDS enumeration");
  for (const MixedSet& s : enumerate_min_tmds(g, cfg)) {
    std::uint64_t covered = 0;
    int edge_count = 0;
    for (const MixedElement& x : s.elements()) {
      if (!x.is_edge()) continue;
      ++edge_count;
      covered |= (std::uint64_t{1} << x.as_edge().u) | (std::uint64_t{1} << x.as_edge().v);
    }
    int a = 0;
    for (int v = 0; v < g.order(); ++v)
      if (((covered >> v) & 1) && !s.contains(MixedElement::vertex(v))) ++a;
    int bound = 2 * a / 3 + (a % 3 == 0 ? 0 : 1);
    if (edge_count < bound) {
      r.status = CheckStatus::Fail;
      r.reason = "edge lower bound violated";
      r.lhs = edge_count;
      r.rhs = bound;
      r.witnesses.push_back(format_mixed_set(s));
      return r;
    }
  }
  r.status = CheckStatus::Pass;
  return r;
}

namespace {

using CheckFn = TheoremReport (*)(const Graph&, const SolverConfig&);

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"sandwich", verify_sandwich},
      {"total-graph-identity", verify_total_graph_identity},
      {"upper-min", verify_upper_min},
      {"diam-implication", verify_diam},
      {"tree-iff", verify_tree_iff},
      {"tree-2n3", verify_tree_bound},
      {"corona-2n", verify_corona},
      {"ham-bound", verify_ham_bound},
      {"obs-2.1", verify_observation},
      {"lemma-edge-lower", verify_lemma_edge_lower},
  };
  return checks;
}

}  // namespace

std::vector<std::string> all_check_ids() {
  std::vector<std::string> out;
  for (const auto& [id, fn] : registry()) out.push_back(id);
  return out;
}

TheoremReport run_check(const std::string& id, const Graph& g, const SolverConfig& cfg) {
  for (const auto& [name, fn] : registry()) {
    if (name != id) continue;
    auto t0 = Clock::now();
    TheoremReport r;
    try {
      r = fn(g, cfg);
    } catch (const std::exception& e) {
      r = base_report(id, g);
      r.status = CheckStatus::Fail;
      r.reason = std::string("unexpected error: ") + e.what();
    }
    r.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
  }
  throw Error(Errc::InvalidParams, "unknown check id: " + id);
}

namespace {

int pair_index(int i, int j, int n) {
  // i < j, row-major over the upper triangle
  return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t canonical_edge_mask(std::uint64_t mask, int n) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t pm = 0;
    for (int i = 0; i < n && pm < best; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (!((mask >> pair_index(i, j, n)) & 1)) continue;
        int a = perm[static_cast<std::size_t>(i)];
        int b = perm[static_cast<std::size_t>(j)];
        if (a > b) std::swap(a, b);
        pm |= std::uint64_t{1} << pair_index(a, b, n);
      }
    if (pm < best) best = pm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Graph graph_from_edge_mask(std::uint64_t mask, int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if ((mask >> pair_index(i, j, n)) & 1) edges.emplace_back(i, j);
  return Graph(n, std::move(edges));
}

// AHU canonical encoding of a tree, used to deduplicate Prüfer output.
std::string ahu_encode(const Graph& t, int root, int parent) {
  std::vector<std::string> children;
  for (int u : open_neighborhood(t, root))
    if (u != parent) children.push_back(ahu_encode(t, u, root));
  std::sort(children.begin(), children.end());
  std::string out = "(";
  for (const std::string& c : children) out += c;
  return out + ")";
}

std::string tree_canonical(const Graph& t) {
  int n = t.order();
  if (n == 1) return "()";
  // peel leaves to find the one or two centers
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<int> layer;
  int remaining = n;
  for (int v = 0; v < n; ++v) {
    deg[static_cast<std::size_t>(v)] = t.degree(v);
    if (deg[static_cast<std::size_t>(v)] <= 1) layer.push_back(v);
  }
  std::vector<bool> removed(static_cast<std::size_t>(n), false);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : layer) {
      removed[static_cast<std::size_t>(v)] = true;
      --remaining;
      for (int u : open_neighborhood(t, v))
        if (!removed[static_cast<std::size_t>(u)] && --deg[static_cast<std::size_t>(u)] == 1) next.push_back(u);
    }
    layer = std::move(next);
  }
  std::vector<int> centers;
  for (int v = 0; v < n; ++v)
    if (!removed[static_cast<std::size_t>(v)]) centers.push_back(v);
  if (centers.size() == 1) return ahu_encode(t, centers[0], -1);
  std::string a = ahu_encode(t, centers[0], centers[1]);
  std::string b = ahu_encode(t, centers[1], centers[0]);
  if (b < a) std::swap(a, b);
  return a + "|" + b;
}

Graph prufer_decode(const std::vector<int>& seq, int n) {
  std::vector<int> deg(static_cast<std::size_t>(n), 1);
  for (int v : seq) ++deg[static_cast<std::size_t>(v)];
  std::vector<std::pair<int, int>> edges;
  std::vector<int> next_leaf;
  for (int v = n - 1; v >= 0; --v)
    if (deg[static_cast<std::size_t>(v)] == 1) next_leaf.push_back(v);
  // next_leaf is a min-heap substitute: back() is the smallest leaf
  auto pop_leaf = [&]() {
    int v = next_leaf.back();
    next_leaf.pop_back();
    return v;
  };
  for (int v : seq) {
    int leaf = pop_leaf();
    edges.emplace_back(leaf, v);
    if (--deg[static_cast<std::size_t>(v)] == 1) {
      // keep descending order so back() stays minimal
      auto it = std::lower_bound(next_leaf.begin(), next_leaf.end(), v, std::greater<int>());
      next_leaf.insert(it, v);
    }
  }
  int a = pop_leaf();
  int b = pop_leaf();
  edges.emplace_back(a, b);
  return Graph(n, std::move(edges));
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int max_n, bool dedup_isomorphism) {
  std::vector<Graph> out;
  for (int n = 1; n <= max_n; ++n) {
    int pairs = n * (n - 1) / 2;
    if (pairs > 62) throw Error(Errc::CapExceeded, "exhaustive enumeration beyond n=11 is not supported");
    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
      Graph g = graph_from_edge_mask(mask, n);
      if (!is_connected(g)) continue;
      if (dedup_isomorphism) {
        std::uint64_t canon = canonical_edge_mask(mask, n);
        if (!seen.insert(canon).second) continue;
      }
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> enumerate_trees(int max_n) {
  std::vector<Graph> out;
  for (int n = 2; n <= max_n; ++n) {
    if (n == 2) {
      out.push_back(Graph(2, {{0, 1}}));
      continue;
    }
    std::unordered_set<std::string> seen;
    std::vector<int> seq(static_cast<std::size_t>(n - 2), 0);
    while (true) {
      Graph t = prufer_decode(seq, n);
      if (seen.insert(tree_canonical(t)).second) out.push_back(std::move(t));
      int i = n - 3;
      while (i >= 0 && seq[static_cast<std::size_t>(i)] == n - 1) seq[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++seq[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

std::vector<Graph> random_trees(int count, int max_n, unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<Graph> out;
  std::uniform_int_distribution<int> order(2, max_n);
  for (int i = 0; i < count; ++i) {
    int n = order(gen);
    if (n == 2) {
      out.push_back(Graph(2, {{0, 1}}));
      continue;
    }
    std::uniform_int_distribution<int> label(0, n - 1);
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& v : seq) v = label(gen);
    out.push_back(prufer_decode(seq, n));
  }
  return out;
}

std::vector<Graph> random_connected(int count, int max_n, double edge_prob, unsigned seed) {
  std::mt19937 gen(seed);
  std::vector<Graph> out;
  std::uniform_int_distribution<int> order(2, max_n);
  std::bernoulli_distribution coin(edge_prob);
  for (int i = 0; i < count; ++i) {
    int n = order(gen);
    while (true) {
      std::vector<std::pair<int, int>> edges;
      for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
          if (coin(gen)) edges.emplace_back(a, b);
      Graph g(n, std::move(edges));
      if (is_connected(g)) {
        out.push_back(std::move(g));
        break;
      }
    }
  }
  return out;
}

Graph upper_tightness_fixture() {
  return Graph(10, {{0, 1},
                    {1, 2},
                    {1, 3},
                    {1, 4},
                    {2, 3},
                    {2, 4},
                    {3, 4},
                    {1, 5},
                    {5, 6},
                    {5, 7},
                    {5, 8},
                    {6, 7},
                    {6, 8},
                    {7, 8},
                    {5, 9}});
}

namespace {

std::vector<Graph> corpus_graphs(const CorpusSpec& spec, std::string* desc) {
  switch (spec.mode) {
    case CorpusSpec::Mode::ExhaustiveConnected:
      *desc = "exhaustive-connected max_n=" + std::to_string(spec.max_n) +
              " dedup=" + (spec.dedup_isomorphism ? "1" : "0");
      return enumerate_connected_graphs(spec.max_n, spec.dedup_isomorphism);
    case CorpusSpec::Mode::RandomTrees:
      *desc = "random-trees count=" + std::to_string(spec.count) + " max_n=" + std::to_string(spec.max_n) +
              " seed=" + std::to_string(spec.seed);
      return random_trees(spec.count, spec.max_n, spec.seed);
    case CorpusSpec::Mode::RandomConnected:
      *desc = "random-connected count=" + std::to_string(spec.count) + " max_n=" + std::to_string(spec.max_n) +
              " p=" + std::to_string(spec.edge_prob) + " seed=" + std::to_string(spec.seed);
      return random_connected(spec.count, spec.max_n, spec.edge_prob, spec.seed);
    case CorpusSpec::Mode::FromGraphs:
      *desc = "from-file count=" + std::to_string(spec.graphs.size());
      return spec.graphs;
  }
  throw Error(Errc::InvalidParams, "unknown corpus mode");
}

}  // namespace

CorpusReport run_corpus(const CorpusSpec& spec, const SolverConfig& cfg) {
  auto t0 = Clock::now();
  CorpusReport report;
  std::vector<Graph> graphs = corpus_graphs(spec, &report.corpus_desc);
  std::vector<std::string> checks = spec.checks.empty() ? all_check_ids() : spec.checks;
  for (const std::string& id : checks) run_check(id, Graph(1, {}), cfg);  // validate ids up front

  std::vector<std::vector<TheoremReport>> per_graph(graphs.size());
  int jobs = std::max(1, spec.jobs);
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= graphs.size()) break;
      for (const std::string& id : checks) per_graph[i].push_back(run_check(id, graphs[i], cfg));
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (auto& batch : per_graph)
    for (auto& r : batch) report.results.push_back(std::move(r));
  std::sort(report.results.begin(), report.results.end(), [](const TheoremReport& a, const TheoremReport& b) {
    if (a.graph_digest != b.graph_digest) return a.graph_digest < b.graph_digest;
    return a.theorem_id < b.theorem_id;
  });
  for (const TheoremReport& r : report.results) {
    if (r.status == CheckStatus::Pass) ++report.pass;
    else if (r.status == CheckStatus::Fail) ++report.fail;
    else ++report.skipped;
  }
  report.elapsed_seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return report;
}

std::string corpus_report_to_json(const CorpusReport& report, bool include_timing) {
  nlohmann::ordered_json j;
  j["version"] = 1;
  j["corpus"] = report.corpus_desc;
  j["results"] = nlohmann::ordered_json::array();
  for (const TheoremReport& r : report.results) {
    nlohmann::ordered_json e;
    e["theorem_id"] = r.theorem_id;
    e["graph_digest"] = r.graph_digest;
    e["graph6"] = r.graph6;
    e["status"] = check_status_name(r.status);
    if (!r.reason.empty()) e["reason"] = r.reason;
    if (r.lhs >= 0) e["lhs"] = r.lhs;
    if (r.rhs >= 0) e["rhs"] = r.rhs;
    if (!r.note.empty()) e["note"] = r.note;
    if (!r.witnesses.empty()) e["witnesses"] = r.witnesses;
    if (r.status == CheckStatus::Fail) {
      e["n"] = r.n;
      auto edges = nlohmann::ordered_json::array();
      for (const Edge& ed : r.edges) edges.push_back({ed.u, ed.v});
      e["edges"] = edges;
    }
    if (include_timing) e["elapsed_seconds"] = r.elapsed_seconds;
    j["results"].push_back(std::move(e));
  }
  j["summary"] = {{"pass", report.pass}, {"fail", report.fail}, {"skipped", report.skipped}};
  if (include_timing) j["elapsed_seconds"] = report.elapsed_seconds;
  return j.dump(2);
}

AlphaScanReport alpha_scan(const CorpusSpec& spec, const SolverConfig& cfg) {
  std::string desc;
  std::vector<Graph> graphs = corpus_graphs(spec, &desc);
  AlphaScanReport out;
  out.min_ratio = 0;
  for (const Graph& g : graphs) {
    if (g.order() < 2 || has_isolated(g) || !is_connected(g)) continue;
    if (element_count(g) > cfg.element_cap) continue;
    AlphaScanEntry e;
    e.graph6 = encode_graph6(g);
    e.graph_digest = graph_digest(g);
    e.gamma_tm_value = gamma_tm(g, cfg).value;
    e.gamma_t_value = gamma_t(g, cfg).value;
    e.ratio = static_cast<double>(e.gamma_tm_value) / e.gamma_t_value;
    if (out.entries.empty() || e.ratio < out.min_ratio) {
      out.min_ratio = e.ratio;
      out.min_graph6 = e.graph6;
    }
    out.entries.push_back(std::move(e));
  }
  std::sort(out.entries.begin(), out.entries.end(),
            [](const AlphaScanEntry& a, const AlphaScanEntry& b) { return a.graph_digest < b.graph_digest; });
  return out;
}

}  // namespace domlab
