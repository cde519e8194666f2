#include "domlab/graph.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <string>

namespace domlab {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::LoopEdge: return "LoopEdge";
    case Errc::EndpointOutOfRange: return "EndpointOutOfRange";
    case Errc::EdgeNotInGraph: return "EdgeNotInGraph";
    case Errc::ElementNotInGraph: return "ElementNotInGraph";
    case Errc::Disconnected: return "Disconnected";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::TooLarge: return "TooLarge";
    case Errc::TooSmall: return "TooSmall";
    case Errc::NoEdges: return "NoEdges";
    case Errc::InvalidParams: return "InvalidParams";
    case Errc::UnsupportedFamily: return "UnsupportedFamily";
    case Errc::IsolatedVertex: return "IsolatedVertex";
    case Errc::BudgetExhausted: return "BudgetExhausted";
    case Errc::EmptyResidual: return "EmptyResidual";
    case Errc::NotHamiltonianPath: return "NotHamiltonianPath";
    case Errc::NotATree: return "NotATree";
    case Errc::ConstructionFailed: return "ConstructionFailed";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::BadByte: return "BadByte";
    case Errc::TruncatedBits: return "TruncatedBits";
    case Errc::CapExceeded: return "CapExceeded";
  }
  return "UnknownError";
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
  if (n < 0) throw Error(Errc::InvalidParams, "negative vertex count");
  if (n > kMaxVertices)
    throw Error(Errc::TooLarge, "order " + std::to_string(n) + " exceeds " + std::to_string(kMaxVertices));
  edges_.reserve(edge_pairs.size());
  for (auto [a, b] : edge_pairs) {
    if (a == b) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(a));
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw Error(Errc::EndpointOutOfRange,
                  "edge (" + std::to_string(a) + "," + std::to_string(b) + ") with n=" + std::to_string(n));
    edges_.push_back(Edge::make(a, b));
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  adj_.assign(static_cast<std::size_t>(n), 0);
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
    adj_[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
  }
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
  return (adj_[static_cast<std::size_t>(u)] >> v) & 1;
}

int Graph::edge_index(Edge e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

int Graph::degree(int v) const {
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

Graph build_graph(int n, std::vector<std::pair<int, int>> edge_pairs) {
  return Graph(n, std::move(edge_pairs));
}

namespace {

void require_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order())
    throw Error(Errc::EndpointOutOfRange, "vertex " + std::to_string(v) + " with n=" + std::to_string(g.order()));
}

std::vector<int> mask_to_vertices(std::uint64_t m) {
  std::vector<int> out;
  while (m) {
    int v = std::countr_zero(m);
    out.push_back(v);
    m &= m - 1;
  }
  return out;
}

}  // namespace

std::vector<int> open_neighborhood(const Graph& g, int v) {
  require_vertex(g, v);
  return mask_to_vertices(g.adjacency_mask(v));
}

std::vector<Edge> incident_edges(const Graph& g, int v) {
  require_vertex(g, v);
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (e.contains(v)) out.push_back(e);
  return out;
}

std::vector<Edge> edge_neighbors(const Graph& g, Edge e) {
  if (!g.has_edge(e)) throw Error(Errc::EdgeNotInGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  std::vector<Edge> out;
  for (const Edge& f : g.edges())
    if (f != e && (f.contains(e.u) || f.contains(e.v))) out.push_back(f);
  return out;
}

std::vector<MixedElement> mixed_neighborhood(const Graph& g, MixedElement x) {
  std::vector<MixedElement> out;
  if (x.is_vertex()) {
    int v = x.vertex_id();
    if (v < 0 || v >= g.order()) throw Error(Errc::ElementNotInGraph, "vertex " + std::to_string(v));
    for (int u : open_neighborhood(g, v)) out.push_back(MixedElement::vertex(u));
    for (const Edge& e : incident_edges(g, v)) out.push_back(MixedElement::edge(e));
  } else {
    Edge e = x.as_edge();
    if (!g.has_edge(e))
      throw Error(Errc::ElementNotInGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    out.push_back(MixedElement::vertex(e.u));
    out.push_back(MixedElement::vertex(e.v));
    for (const Edge& f : edge_neighbors(g, e)) out.push_back(MixedElement::edge(f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_connected(const Graph& g) {
  int n = g.order();
  if (n <= 1) return true;
  std::uint64_t seen = 1;
  std::uint64_t frontier = 1;
  while (frontier) {
    std::uint64_t next = 0;
    for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adjacency_mask(std::countr_zero(f));
    frontier = next & ~seen;
    seen |= next;
  }
  std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
  return seen == all;
}

int diameter(const Graph& g) {
  int n = g.order();
  if (n == 0) throw Error(Errc::EmptyGraph, "diameter of empty graph");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "diameter undefined");
  int best = 0;
  for (int s = 0; s < n; ++s) {
    std::uint64_t seen = std::uint64_t{1} << s;
    std::uint64_t frontier = seen;
    int depth = 0;
    while (true) {
      std::uint64_t next = 0;
      for (std::uint64_t f = frontier; f; f &= f - 1) next |= g.adjacency_mask(std::countr_zero(f));
      next &= ~seen;
      if (!next) break;
      seen |= next;
      frontier = next;
      ++depth;
    }
    best = std::max(best, depth);
  }
  return best;
}

int min_degree(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::EmptyGraph, "min_degree of empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

int max_degree(const Graph& g) {
  if (g.order() == 0) throw Error(Errc::EmptyGraph, "max_degree of empty graph");
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

bool is_independent(const Graph& g, const std::vector<int>& s) {
  std::uint64_t m = 0;
  for (int v : s) {
    require_vertex(g, v);
    m |= std::uint64_t{1} << v;
  }
  for (std::uint64_t rest = m; rest; rest &= rest - 1)
    if (g.adjacency_mask(std::countr_zero(rest)) & m) return false;
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int cap) {
  int n = g.order();
  if (n > cap) throw Error(Errc::TooLarge, "order " + std::to_string(n) + " above Hamiltonian cap " + std::to_string(cap));
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<int>{0};
  // reach[mask] = set of possible endpoints of a path covering exactly mask
  std::vector<std::uint32_t> reach(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) reach[std::size_t{1} << v] = std::uint32_t{1} << v;
  std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    std::uint32_t ends = reach[mask];
    if (!ends) continue;
    for (std::uint32_t e = ends; e; e &= e - 1) {
      int v = std::countr_zero(e);
      std::uint32_t ext = static_cast<std::uint32_t>(g.adjacency_mask(v)) & ~mask;
      for (std::uint32_t x = ext; x; x &= x - 1) {
        int u = std::countr_zero(x);
        reach[mask | (std::uint32_t{1} << u)] |= std::uint32_t{1} << u;
      }
    }
  }
  if (!reach[full]) return std::nullopt;
  // backtrack a witness, lowest endpoint first
  std::vector<int> path;
  std::uint32_t mask = full;
  int v = std::countr_zero(reach[full]);
  while (true) {
    path.push_back(v);
    mask &= ~(std::uint32_t{1} << v);
    if (!mask) break;
    std::uint32_t prevs = reach[mask] & static_cast<std::uint32_t>(g.adjacency_mask(v));
    v = std::countr_zero(prevs);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

bool has_hamiltonian_path(const Graph& g, int cap) {
  return hamiltonian_path(g, cap).has_value();
}

MixedSet::MixedSet(const Graph& host, std::vector<MixedElement> elements)
    : host_(std::make_shared<Graph>(host)), elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  for (const MixedElement& x : elements_) {
    if (x.is_vertex()) {
      if (x.vertex_id() < 0 || x.vertex_id() >= host.order())
        throw Error(Errc::ElementNotInGraph, "vertex " + std::to_string(x.vertex_id()));
    } else if (!host.has_edge(x.as_edge())) {
      Edge e = x.as_edge();
      throw Error(Errc::ElementNotInGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    }
  }
}

bool MixedSet::contains(MixedElement x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x);
}

int element_count(const Graph& g) { return g.order() + g.size(); }

int element_id(const Graph& g, MixedElement x) {
  if (x.is_vertex()) {
    if (x.vertex_id() < 0 || x.vertex_id() >= g.order())
      throw Error(Errc::ElementNotInGraph, "vertex " + std::to_string(x.vertex_id()));
    return x.vertex_id();
  }
  int k = g.edge_index(x.as_edge());
  if (k < 0) {
    Edge e = x.as_edge();
    throw Error(Errc::ElementNotInGraph, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  }
  return g.order() + k;
}

MixedElement element_of(const Graph& g, int id) {
  if (id < 0 || id >= element_count(g)) throw Error(Errc::ElementNotInGraph, "element id " + std::to_string(id));
  if (id < g.order()) return MixedElement::vertex(id);
  return MixedElement::edge(g.edges()[static_cast<std::size_t>(id - g.order())]);
}

}  // namespace domlab
