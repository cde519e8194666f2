#ifndef DOMLAB_FAMILIES_HPP
#define DOMLAB_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "domlab/graph.hpp"

namespace domlab {

enum class Family { Path, Cycle, Complete, CompleteBipartite, Wheel, DoubleStar, Corona2 };

const char* family_name(Family f);
std::optional<Family> family_from_name(const std::string& name);

/// Parameters of a named family instance. `a` is the primary order parameter
/// (n); CompleteBipartite uses (a, b) = (m, n) with m <= n; Corona2 carries
/// the base graph.
struct FamilySpec {
  Family family;
  int a = 0;
  int b = 0;
  std::optional<Graph> base;

  static FamilySpec path(int n) { return {Family::Path, n}; }
  static FamilySpec cycle(int n) { return {Family::Cycle, n}; }
  static FamilySpec complete(int n) { return {Family::Complete, n}; }
  static FamilySpec complete_bipartite(int m, int n) { return {Family::CompleteBipartite, m, n}; }
  static FamilySpec wheel(int n) { return {Family::Wheel, n}; }
  static FamilySpec double_star(int n) { return {Family::DoubleStar, n}; }
  static FamilySpec corona2_of(Graph base) { return {Family::Corona2, 0, 0, std::move(base)}; }
};

/// A constructed graph together with a provenance map: label[i] is the
/// element of the source graph that vertex i stands for.
struct LabeledGraph {
  Graph graph;
  std::vector<MixedElement> labels;
};

/// Vertex conventions: Path/Cycle vertices 0..n-1 consecutive; Wheel hub 0
/// with rim 1..n cyclic; CompleteBipartite left part 0..m-1, right part
/// m..m+n-1; DoubleStar center 0, middles 1..n, leaf n+i attached to middle i.
Graph make_family(const FamilySpec& spec);

/// L(G): vertex k is the k-th canonical edge of G.
LabeledGraph line_graph(const Graph& g);

/// T(G): ids [0,n) are source vertices, [n,n+m) source edges in canonical
/// order; adjacency is adjacency-or-incidence in G.
LabeledGraph total_graph(const Graph& g);

/// G with a pendant path i -> n+i -> 2n+i attached to every vertex i.
LabeledGraph corona2(const Graph& g);

Graph complement(const Graph& g);

}  // namespace domlab

#endif
