#include "domlab/closed_forms.hpp"

#include <algorithm>

#include "domlab/solve.hpp"

namespace domlab {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int path_value(int n) {
  int c = ceil_div(n, 7);
  switch (n % 7) {
    case 1: return 4 * c - 3;
    case 2:
    case 3:
    case 4: return 4 * c - 2;
    case 5: return 4 * c - 1;
    default: return 4 * c;  // 0, 6
  }
}

int cycle_value(int n) {
  int c = ceil_div(n, 7);
  switch (n % 7) {
    case 1: return 4 * c - 3;
    case 2:
    case 3: return 4 * c - 2;
    case 4: return 4 * c - 1;
    default: return 4 * c;  // 0, 5, 6
  }
}

int complete_value(int n) { return 2 * n / 3 + (n % 3 == 0 ? 0 : 1); }

void check_spec(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path:
      if (spec.a < 2) throw Error(Errc::InvalidParams, "path needs n >= 2");
      break;
    case Family::Cycle:
      if (spec.a < 3) throw Error(Errc::InvalidParams, "cycle needs n >= 3");
      break;
    case Family::Complete:
      if (spec.a < 2) throw Error(Errc::InvalidParams, "complete needs n >= 2");
      break;
    case Family::CompleteBipartite:
      if (spec.a < 1 || spec.b < spec.a) throw Error(Errc::InvalidParams, "complete-bipartite needs 1 <= m <= n");
      break;
    case Family::Wheel:
      if (spec.a < 3) throw Error(Errc::InvalidParams, "wheel needs n >= 3");
      break;
    case Family::DoubleStar:
      if (spec.a < 1) throw Error(Errc::InvalidParams, "double-star needs n >= 1");
      break;
    case Family::Corona2:
      if (!spec.base || spec.base->order() < 2 || !is_connected(*spec.base))
        throw Error(Errc::InvalidParams, "corona2 needs a connected base of order >= 2");
      break;
  }
}

// Residue chain shared by the path and cycle witnesses (0-indexed):
// vertices 7i+1, 7i+2 and edges (7i+4, 7i+5), (7i+5, 7i+6).
std::vector<MixedElement> residue_chain(int n) {
  std::vector<MixedElement> s;
  for (int i = 0; 7 * i + 6 < n; ++i) {
    s.push_back(MixedElement::vertex(7 * i + 1));
    s.push_back(MixedElement::vertex(7 * i + 2));
    s.push_back(MixedElement::edge(7 * i + 4, 7 * i + 5));
    s.push_back(MixedElement::edge(7 * i + 5, 7 * i + 6));
  }
  return s;
}

}  // namespace

int gamma_tm_formula(const FamilySpec& spec) {
  check_spec(spec);
  switch (spec.family) {
    case Family::Path: return path_value(spec.a);
    case Family::Cycle: return cycle_value(spec.a);
    case Family::Complete: return complete_value(spec.a);
    case Family::CompleteBipartite: return spec.a + 1;
    case Family::Wheel: return ceil_div(spec.a, 2) + 1;
    case Family::DoubleStar: return spec.a + 1;
    case Family::Corona2: return 2 * spec.base->order();
  }
  throw Error(Errc::UnsupportedFamily, "unknown family");
}

std::string gamma_tm_case(const FamilySpec& spec) {
  check_spec(spec);
  switch (spec.family) {
    case Family::Path:
      switch (spec.a % 7) {
        case 1: return "4*ceil(n/7)-3 (n = 1 mod 7)";
        case 2:
        case 3:
        case 4: return "4*ceil(n/7)-2 (n = 2,3,4 mod 7)";
        case 5: return "4*ceil(n/7)-1 (n = 5 mod 7)";
        default: return "4*ceil(n/7) (n = 0,6 mod 7)";
      }
    case Family::Cycle:
      switch (spec.a % 7) {
        case 1: return "4*ceil(n/7)-3 (n = 1 mod 7)";
        case 2:
        case 3: return "4*ceil(n/7)-2 (n = 2,3 mod 7)";
        case 4: return "4*ceil(n/7)-1 (n = 4 mod 7)";
        default: return "4*ceil(n/7) (n = 0,5,6 mod 7)";
      }
    case Family::Complete:
      return spec.a % 3 == 0 ? "floor(2n/3) (n = 0 mod 3)" : "floor(2n/3)+1 (n = 1,2 mod 3)";
    case Family::CompleteBipartite: return "m+1";
    case Family::Wheel: return "ceil(n/2)+1";
    case Family::DoubleStar: return "n+1";
    case Family::Corona2: return "2n";
  }
  return "?";
}

namespace {

FormulaResult make_result(const Graph& g, std::vector<MixedElement> els, int expected, std::string tag,
                          std::optional<FamilySpec> family) {
  MixedSet witness(g, std::move(els));
  if (witness.size() != expected)
    throw Error(Errc::ConstructionFailed, "witness size " + std::to_string(witness.size()) + " != closed form " +
                                              std::to_string(expected));
  if (!is_tmds(g, witness)) throw Error(Errc::ConstructionFailed, "constructed witness is not a TMDS");
  return FormulaResult{expected, std::move(witness), std::move(tag), std::move(family)};
}

}  // namespace

FormulaResult gamma_tm_witness(const FamilySpec& spec) {
  check_spec(spec);
  int expected = gamma_tm_formula(spec);
  Graph g = make_family(spec);
  std::vector<MixedElement> s;
  switch (spec.family) {
    case Family::Path: {
      int n = spec.a;
      s = residue_chain(n);
      switch (n % 7) {
        case 0: break;
        case 1: s.push_back(MixedElement::edge(n - 2, n - 1)); break;
        case 2:
        case 3:
          s.push_back(MixedElement::vertex(n - 2));
          s.push_back(MixedElement::vertex(n - 1));
          break;
        case 4:
          s.push_back(MixedElement::vertex(n - 3));
          s.push_back(MixedElement::vertex(n - 2));
          break;
        case 5:
          s.push_back(MixedElement::vertex(n - 4));
          s.push_back(MixedElement::vertex(n - 3));
          s.push_back(MixedElement::vertex(n - 2));
          break;
        case 6:
          s.push_back(MixedElement::vertex(n - 5));
          s.push_back(MixedElement::vertex(n - 4));
          s.push_back(MixedElement::edge(n - 3, n - 2));
          s.push_back(MixedElement::edge(n - 2, n - 1));
          break;
      }
      return make_result(g, std::move(s), expected, "S_0 residue chain + path tail", spec);
    }
    case Family::Cycle: {
      int n = spec.a;
      s = residue_chain(n);
      switch (n % 7) {
        case 0: break;
        case 1: s.push_back(MixedElement::edge(n - 2, n - 1)); break;
        case 2:
        case 3:
          s.push_back(MixedElement::vertex(n - 2));
          s.push_back(MixedElement::vertex(n - 1));
          break;
        case 4:
          s.push_back(MixedElement::vertex(n - 3));
          s.push_back(MixedElement::vertex(n - 2));
          s.push_back(MixedElement::vertex(n - 1));
          break;
        case 5:
          s.push_back(MixedElement::vertex(n - 4));
          s.push_back(MixedElement::vertex(n - 3));
          s.push_back(MixedElement::vertex(n - 2));
          s.push_back(MixedElement::vertex(n - 1));
          break;
        case 6:
          s.push_back(MixedElement::vertex(n - 5));
          s.push_back(MixedElement::vertex(n - 4));
          s.push_back(MixedElement::edge(n - 3, n - 2));
          s.push_back(MixedElement::edge(n - 2, n - 1));
          break;
      }
      return make_result(g, std::move(s), expected, "S_0 residue chain + cycle tail", spec);
    }
    case Family::Complete: {
      int n = spec.a;
      if (n == 2) {
        s = {MixedElement::vertex(0), MixedElement::vertex(1)};
        return make_result(g, std::move(s), expected, "both endpoints", spec);
      }
      if (n == 3) {
        s = {MixedElement::vertex(1), MixedElement::vertex(2)};
        return make_result(g, std::move(s), expected, "cycle tail", spec);
      }
      int k = n / 3;
      for (int i = 0; i < k; ++i) {
        s.push_back(MixedElement::edge(3 * i, 3 * i + 1));
        s.push_back(MixedElement::edge(3 * i + 1, 3 * i + 2));
      }
      if (n % 3 >= 1) s.push_back(MixedElement::edge(3 * k - 1, 3 * k));
      if (n % 3 == 2) s.push_back(MixedElement::edge(3 * k, 3 * k + 1));
      return make_result(g, std::move(s), expected, "S_0/S_1/S_2 edge chain", spec);
    }
    case Family::CompleteBipartite: {
      for (int i = 0; i < spec.a; ++i) s.push_back(MixedElement::vertex(i));
      s.push_back(MixedElement::vertex(spec.a));
      return make_result(g, std::move(s), expected, "small side plus one", spec);
    }
    case Family::Wheel: {
      int n = spec.a;
      s.push_back(MixedElement::vertex(0));
      for (int i = 1; i <= ceil_div(n, 2); ++i) s.push_back(MixedElement::vertex(2 * i - 1));
      return make_result(g, std::move(s), expected, "hub plus odd rim", spec);
    }
    case Family::DoubleStar: {
      for (int i = 0; i <= spec.a; ++i) s.push_back(MixedElement::vertex(i));
      return make_result(g, std::move(s), expected, "center plus middles", spec);
    }
    case Family::Corona2: {
      int n = spec.base->order();
      for (int i = 0; i < 2 * n; ++i) s.push_back(MixedElement::vertex(i));
      return make_result(g, std::move(s), expected, "base vertices plus middles", spec);
    }
  }
  throw Error(Errc::UnsupportedFamily, "unknown family");
}

FormulaResult gamma_t_line_formula(Family family, int n) {
  std::vector<Edge> chosen;
  Graph g;
  int expected;
  std::string tag;
  if (family == Family::Complete) {
    if (n < 4) throw Error(Errc::InvalidParams, "L(K_n) formula needs n >= 4");
    g = make_family(FamilySpec::complete(n));
    expected = 2 * n / 3;
    int k = n / 3;
    for (int i = 0; i < k; ++i) {
      chosen.push_back(Edge::make(3 * i, 3 * i + 1));
      chosen.push_back(Edge::make(3 * i + 1, 3 * i + 2));
    }
    if (n % 3 == 2) chosen.push_back(Edge::make(n - 3, n - 2));
    tag = "edge chain in K_n";
  } else if (family == Family::Wheel) {
    if (n < 3) throw Error(Errc::InvalidParams, "L(W_n) formula needs n >= 3");
    g = make_family(FamilySpec::wheel(n));
    expected = ceil_div(n, 2);
    for (int i = 1; i <= ceil_div(n, 2); ++i) chosen.push_back(Edge::make(0, 2 * i - 1));
    tag = "odd spokes of W_n";
  } else {
    throw Error(Errc::UnsupportedFamily, "line-graph formula covers complete and wheel only");
  }
  LabeledGraph l = line_graph(g);
  std::vector<MixedElement> els;
  std::vector<int> verts;
  for (const Edge& e : chosen) {
    int k = g.edge_index(e);
    els.push_back(MixedElement::vertex(k));
    verts.push_back(k);
  }
  MixedSet witness(l.graph, std::move(els));
  if (witness.size() != expected || !is_tds(l.graph, verts))
    throw Error(Errc::ConstructionFailed, "line-graph witness is not a min-TDS candidate");
  return FormulaResult{expected, std::move(witness), std::move(tag), std::nullopt};
}

FormulaResult hamiltonian_tmds(const Graph& g, const std::vector<int>& path) {
  int n = g.order();
  if (static_cast<int>(path.size()) != n) throw Error(Errc::NotHamiltonianPath, "path does not cover V");
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int v : path) {
    if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)])
      throw Error(Errc::NotHamiltonianPath, "path repeats or leaves the vertex range");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (std::size_t i = 0; i + 1 < path.size(); ++i)
    if (!g.has_edge(path[i], path[i + 1])) throw Error(Errc::NotHamiltonianPath, "non-adjacent consecutive vertices");
  int bound = 2 * n / 3 + (n % 3 == 0 ? 0 : 1);
  std::vector<MixedElement> s;
  if (n == 2) {
    s = {MixedElement::vertex(path[0]), MixedElement::vertex(path[1])};
  } else {
    for (int i = 0; 3 * i + 2 < n; ++i) {
      s.push_back(MixedElement::edge(path[static_cast<std::size_t>(3 * i)], path[static_cast<std::size_t>(3 * i + 1)]));
      s.push_back(
          MixedElement::edge(path[static_cast<std::size_t>(3 * i + 1)], path[static_cast<std::size_t>(3 * i + 2)]));
    }
    if (n % 3 == 1) {
      s.push_back(MixedElement::edge(path[static_cast<std::size_t>(n - 2)], path[static_cast<std::size_t>(n - 1)]));
    } else if (n % 3 == 2) {
      s.push_back(MixedElement::edge(path[static_cast<std::size_t>(n - 3)], path[static_cast<std::size_t>(n - 2)]));
      s.push_back(MixedElement::edge(path[static_cast<std::size_t>(n - 2)], path[static_cast<std::size_t>(n - 1)]));
    }
  }
  return make_result(g, std::move(s), bound, "edge chain along Hamiltonian path", std::nullopt);
}

FormulaResult tree_tmds(const Graph& t) {
  if (!is_tree(t)) throw Error(Errc::NotATree, "input is not a tree");
  int n = t.order();
  if (n < 3) throw Error(Errc::TooSmall, "tree construction needs n >= 3");
  int root = -1;
  for (int v = 0; v < n; ++v)
    if (t.degree(v) == 1) {
      root = v;
      break;
    }
  // distance classes mod 3 from the chosen leaf
  std::vector<int> dist(static_cast<std::size_t>(n), -1);
  std::vector<int> queue{root};
  dist[static_cast<std::size_t>(root)] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int u : open_neighborhood(t, v))
      if (dist[static_cast<std::size_t>(u)] < 0) {
        dist[static_cast<std::size_t>(u)] = dist[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
  }
  int count[3] = {0, 0, 0};
  for (int v = 0; v < n; ++v) ++count[dist[static_cast<std::size_t>(v)] % 3];
  int drop = 0;
  for (int c = 1; c < 3; ++c)
    if (count[c] > count[drop]) drop = c;
  std::vector<bool> selected(static_cast<std::size_t>(n), false);
  for (int v = 0; v < n; ++v) selected[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(v)] % 3 != drop;
  // leaf replacement against the original selection: a selected leaf whose
  // neighbor is unselected is swapped for that neighbor
  std::vector<bool> adjusted = selected;
  for (int v = 0; v < n; ++v) {
    if (t.degree(v) != 1 || !selected[static_cast<std::size_t>(v)]) continue;
    int w = open_neighborhood(t, v)[0];
    if (!selected[static_cast<std::size_t>(w)]) {
      adjusted[static_cast<std::size_t>(v)] = false;
      adjusted[static_cast<std::size_t>(w)] = true;
    }
  }
  std::vector<MixedElement> s;
  for (int v = 0; v < n; ++v)
    if (adjusted[static_cast<std::size_t>(v)]) s.push_back(MixedElement::vertex(v));
  MixedSet witness(t, std::move(s));
  if (witness.size() > 2 * n / 3)
    throw Error(Errc::ConstructionFailed, "tree construction exceeded floor(2n/3)");
  if (!is_tmds(t, witness)) throw Error(Errc::ConstructionFailed, "tree construction is not a TMDS");
  int value = witness.size();
  return FormulaResult{value, std::move(witness), "distance mod 3 classes with leaf swaps", std::nullopt};
}

bool path_cycle_relation(int n) {
  if (n < 3) throw Error(Errc::InvalidParams, "relation defined for n >= 3");
  int p = path_value(n);
  int c = cycle_value(n);
  int r = n % 7;
  if (r == 4 || r == 5) return c == p + 1;
  return c == p;
}

}  // namespace domlab
