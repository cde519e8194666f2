#include "domlab/families.hpp"

#include <algorithm>
#include <utility>

namespace domlab {

const char* family_name(Family f) {
  switch (f) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::CompleteBipartite: return "complete-bipartite";
    case Family::Wheel: return "wheel";
    case Family::DoubleStar: return "double-star";
    case Family::Corona2: return "corona2";
  }
  return "?";
}

std::optional<Family> family_from_name(const std::string& name) {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite,
                   Family::Wheel, Family::DoubleStar, Family::Corona2})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

Graph make_family(const FamilySpec& spec) {
  std::vector<std::pair<int, int>> edges;
  switch (spec.family) {
    case Family::Path: {
      int n = spec.a;
      if (n < 2) throw Error(Errc::InvalidParams, "path needs n >= 2");
      for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
      return Graph(n, std::move(edges));
    }
    case Family::Cycle: {
      int n = spec.a;
      if (n < 3) throw Error(Errc::InvalidParams, "cycle needs n >= 3");
      for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
      return Graph(n, std::move(edges));
    }
    case Family::Complete: {
      int n = spec.a;
      if (n < 2) throw Error(Errc::InvalidParams, "complete needs n >= 2");
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
      return Graph(n, std::move(edges));
    }
    case Family::CompleteBipartite: {
      int m = spec.a, n = spec.b;
      if (m < 1 || n < m) throw Error(Errc::InvalidParams, "complete-bipartite needs 1 <= m <= n");
      for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.emplace_back(i, m + j);
      return Graph(m + n, std::move(edges));
    }
    case Family::Wheel: {
      // W_n has order n+1: hub 0, rim 1..n cyclic.
      int n = spec.a;
      if (n < 3) throw Error(Errc::InvalidParams, "wheel needs n >= 3");
      for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % n + 1);
      }
      return Graph(n + 1, std::move(edges));
    }
    case Family::DoubleStar: {
      int n = spec.a;
      if (n < 1) throw Error(Errc::InvalidParams, "double-star needs n >= 1");
      for (int i = 1; i <= n; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, n + i);
      }
      return Graph(2 * n + 1, std::move(edges));
    }
    case Family::Corona2: {
      if (!spec.base) throw Error(Errc::InvalidParams, "corona2 needs a base graph");
      return corona2(*spec.base).graph;
    }
  }
  throw Error(Errc::UnsupportedFamily, "unknown family");
}

LabeledGraph line_graph(const Graph& g) {
  int m = g.size();
  if (m < 1) throw Error(Errc::NoEdges, "line graph of an edgeless graph");
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      const Edge& e = g.edges()[static_cast<std::size_t>(j)];
      const Edge& f = g.edges()[static_cast<std::size_t>(k)];
      if (f.contains(e.u) || f.contains(e.v)) edges.emplace_back(j, k);
    }
  LabeledGraph out{Graph(m, std::move(edges)), {}};
  out.labels.reserve(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) out.labels.push_back(MixedElement::edge(g.edges()[static_cast<std::size_t>(k)]));
  return out;
}

LabeledGraph total_graph(const Graph& g) {
  int n = g.order();
  int m = g.size();
  if (m < 1) throw Error(Errc::NoEdges, "total graph of an edgeless graph");
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int k = 0; k < m; ++k) {
    const Edge& e = g.edges()[static_cast<std::size_t>(k)];
    edges.emplace_back(e.u, n + k);
    edges.emplace_back(e.v, n + k);
  }
  for (int j = 0; j < m; ++j)
    for (int k = j + 1; k < m; ++k) {
      const Edge& e = g.edges()[static_cast<std::size_t>(j)];
      const Edge& f = g.edges()[static_cast<std::size_t>(k)];
      if (f.contains(e.u) || f.contains(e.v)) edges.emplace_back(n + j, n + k);
    }
  LabeledGraph out{Graph(n + m, std::move(edges)), {}};
  out.labels.reserve(static_cast<std::size_t>(n + m));
  for (int v = 0; v < n; ++v) out.labels.push_back(MixedElement::vertex(v));
  for (int k = 0; k < m; ++k) out.labels.push_back(MixedElement::edge(g.edges()[static_cast<std::size_t>(k)]));
  return out;
}

LabeledGraph corona2(const Graph& g) {
  int n = g.order();
  if (n < 2) throw Error(Errc::TooSmall, "corona2 needs a base of order >= 2");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "corona2 needs a connected base");
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(e.u, e.v);
  for (int i = 0; i < n; ++i) {
    edges.emplace_back(i, n + i);
    edges.emplace_back(n + i, 2 * n + i);
  }
  LabeledGraph out{Graph(3 * n, std::move(edges)), {}};
  out.labels.reserve(static_cast<std::size_t>(3 * n));
  for (int v = 0; v < 3 * n; ++v) out.labels.push_back(MixedElement::vertex(v % n));
  return out;
}

Graph complement(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.has_edge(i, j)) edges.emplace_back(i, j);
  return Graph(g.order(), std::move(edges));
}

}  // namespace domlab
