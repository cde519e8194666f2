#ifndef DOMLAB_GRAPH_HPP
#define DOMLAB_GRAPH_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "domlab/error.hpp"

namespace domlab {

/// Unordered vertex pair, normalized so u < v.
struct Edge {
  int u = 0;
  int v = 0;

  static Edge make(int a, int b) {
    if (a == b) throw Error(Errc::LoopEdge, "edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return a < b ? Edge{a, b} : Edge{b, a};
  }

  bool contains(int x) const { return u == x || v == x; }
  int other(int x) const { return u == x ? v : u; }

  auto operator<=>(const Edge&) const = default;
};

/// An element of V(G) ∪ E(G).
class MixedElement {
 public:
  enum class Kind { Vertex, Edge };

  static MixedElement vertex(int v) { return MixedElement(Kind::Vertex, v, -1); }
  static MixedElement edge(int a, int b) {
    Edge e = Edge::make(a, b);
    return MixedElement(Kind::Edge, e.u, e.v);
  }
  static MixedElement edge(Edge e) { return MixedElement(Kind::Edge, e.u, e.v); }

  Kind kind() const { return kind_; }
  bool is_vertex() const { return kind_ == Kind::Vertex; }
  bool is_edge() const { return kind_ == Kind::Edge; }
  int vertex_id() const { return a_; }
  Edge as_edge() const { return Edge{a_, b_}; }

  auto operator<=>(const MixedElement&) const = default;

 private:
  MixedElement(Kind k, int a, int b) : kind_(k), a_(a), b_(b) {}

  Kind kind_;
  int a_;
  int b_;
};

/// Simple undirected graph in canonical form: edges stored with u < v,
/// sorted lexicographically and deduplicated. Immutable after construction.
/// Adjacency rows are single-word bitmasks, which caps the order at 64.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edge_pairs);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_edge(int u, int v) const;
  bool has_edge(Edge e) const { return has_edge(e.u, e.v); }
  /// Index of e in the canonical edge list, or -1.
  int edge_index(Edge e) const;

  std::uint64_t adjacency_mask(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(int v) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

Graph build_graph(int n, std::vector<std::pair<int, int>> edge_pairs);

std::vector<int> open_neighborhood(const Graph& g, int v);
std::vector<Edge> incident_edges(const Graph& g, int v);
/// Edges sharing an endpoint with e, excluding e itself.
std::vector<Edge> edge_neighbors(const Graph& g, Edge e);
/// N_T(x): for a vertex its neighbors plus incident edges, for an edge its
/// endpoints plus adjacent edges. x itself is never included.
std::vector<MixedElement> mixed_neighborhood(const Graph& g, MixedElement x);

bool is_connected(const Graph& g);
int diameter(const Graph& g);
int min_degree(const Graph& g);
int max_degree(const Graph& g);
bool is_independent(const Graph& g, const std::vector<int>& s);
bool is_tree(const Graph& g);

/// Exact subset-DP Hamiltonian path search. Refuses (TooLarge) above the cap.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g, int cap = 20);
bool has_hamiltonian_path(const Graph& g, int cap = 20);

/// Finite set of mixed elements validated against a host graph. Keeps its
/// own copy of the host so witnesses stay self-contained.
class MixedSet {
 public:
  MixedSet(const Graph& host, std::vector<MixedElement> elements);

  const Graph& host() const { return *host_; }
  const std::vector<MixedElement>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }
  bool contains(MixedElement x) const;

 private:
  std::shared_ptr<const Graph> host_;
  std::vector<MixedElement> elements_;  // sorted, deduplicated
};

/// Element-universe indexing shared by the solvers and witness mapping:
/// ids [0, n) are vertices, ids [n, n+m) are canonical edges.
int element_count(const Graph& g);
int element_id(const Graph& g, MixedElement x);
MixedElement element_of(const Graph& g, int id);

}  // namespace domlab

#endif
