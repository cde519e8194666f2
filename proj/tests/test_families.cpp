#include <doctest.h>

#include "domlab/families.hpp"

using namespace domlab;

TEST_SUITE("families") {

TEST_CASE("family names round-trip") {
  for (Family f : {Family::Path, Family::Cycle, Family::Complete, Family::CompleteBipartite,
                   Family::Wheel, Family::DoubleStar, Family::Corona2})
    CHECK(family_from_name(family_name(f)) == f);
  CHECK_FALSE(family_from_name("petersen").has_value());
}

TEST_CASE("path and cycle vertex conventions") {
  Graph p5 = make_family(FamilySpec::path(5));
  CHECK(p5.order() == 5);
  CHECK(p5.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(p5.has_edge(i, i + 1));

  Graph c5 = make_family(FamilySpec::cycle(5));
  CHECK(c5.size() == 5);
  CHECK(c5.has_edge(4, 0));

  CHECK_THROWS_AS(make_family(FamilySpec::path(1)), Error);
  CHECK_THROWS_AS(make_family(FamilySpec::cycle(2)), Error);
}

TEST_CASE("complete and complete bipartite") {
  Graph k5 = make_family(FamilySpec::complete(5));
  CHECK(k5.size() == 10);

  Graph k23 = make_family(FamilySpec::complete_bipartite(2, 3));
  CHECK(k23.order() == 5);
  CHECK(k23.size() == 6);
  CHECK(k23.has_edge(0, 2));     // across the parts
  CHECK_FALSE(k23.has_edge(0, 1));  // inside the left part
  CHECK_FALSE(k23.has_edge(2, 3));  // inside the right part
  CHECK_THROWS_AS(make_family(FamilySpec::complete_bipartite(3, 2)), Error);
}

TEST_CASE("wheel has hub 0 and cyclic rim 1..n") {
  Graph w5 = make_family(FamilySpec::wheel(5));
  CHECK(w5.order() == 6);
  CHECK(w5.size() == 10);
  for (int i = 1; i <= 5; ++i) CHECK(w5.has_edge(0, i));
  CHECK(w5.has_edge(1, 2));
  CHECK(w5.has_edge(5, 1));
  CHECK_FALSE(w5.has_edge(1, 3));
}

TEST_CASE("double star: center 0, middles 1..n, leaf n+i on middle i") {
  Graph s3 = make_family(FamilySpec::double_star(3));
  CHECK(s3.order() == 7);
  CHECK(s3.size() == 6);
  for (int i = 1; i <= 3; ++i) {
    CHECK(s3.has_edge(0, i));
    CHECK(s3.has_edge(i, 3 + i));
  }
  CHECK(diameter(s3) == 4);
}

TEST_CASE("line graph vertices follow the canonical edge order") {
  Graph p4 = make_family(FamilySpec::path(4));
  LabeledGraph l = line_graph(p4);
  CHECK(l.graph.order() == 3);
  CHECK(l.graph.edges() == std::vector<Edge>{{0, 1}, {1, 2}});  // L(P_4) = P_3
  CHECK(l.labels[0] == MixedElement::edge(0, 1));
  CHECK(l.labels[2] == MixedElement::edge(2, 3));

  // L(K_{1,3}) = K_3: all star edges share the hub
  Graph star = make_family(FamilySpec::complete_bipartite(1, 3));
  CHECK(line_graph(star).graph.size() == 3);
}

TEST_CASE("total graph contains G and L(G) plus incidences") {
  Graph k2 = make_family(FamilySpec::complete(2));
  LabeledGraph t = total_graph(k2);
  CHECK(t.graph.order() == 3);
  CHECK(t.graph.size() == 3);  // T(K_2) = K_3

  Graph p3 = make_family(FamilySpec::path(3));
  LabeledGraph tp3 = total_graph(p3);
  CHECK(tp3.graph.order() == 5);
  CHECK(tp3.labels[2] == MixedElement::vertex(2));
  CHECK(tp3.labels[3] == MixedElement::edge(0, 1));
  CHECK(tp3.graph.has_edge(0, 1));     // source adjacency
  CHECK(tp3.graph.has_edge(0, 3));     // vertex 0 incident to edge {0,1}
  CHECK(tp3.graph.has_edge(3, 4));     // the two edges share vertex 1
  CHECK_FALSE(tp3.graph.has_edge(0, 4));
}

TEST_CASE("2-corona attaches a pendant path to every vertex") {
  Graph c3 = make_family(FamilySpec::cycle(3));
  LabeledGraph cor = corona2(c3);
  CHECK(cor.graph.order() == 9);
  CHECK(cor.graph.size() == 9);
  for (int i = 0; i < 3; ++i) {
    CHECK(cor.graph.has_edge(i, 3 + i));
    CHECK(cor.graph.has_edge(3 + i, 6 + i));
    CHECK(cor.graph.degree(6 + i) == 1);
    CHECK(cor.labels[3 + i] == MixedElement::vertex(i));
  }
  Graph via_family = make_family(FamilySpec::corona2_of(c3));
  CHECK(via_family == cor.graph);
}

TEST_CASE("complement") {
  Graph p4 = make_family(FamilySpec::path(4));
  Graph co = complement(p4);
  CHECK(co.size() == 3);
  CHECK(co.has_edge(0, 2));
  CHECK(co.has_edge(0, 3));
  CHECK(co.has_edge(1, 3));
  CHECK(complement(co) == p4);
}

}  // TEST_SUITE
