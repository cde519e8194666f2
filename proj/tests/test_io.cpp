#include <doctest.h>

#include <random>

#include "domlab/families.hpp"
#include "domlab/io.hpp"

using namespace domlab;

TEST_SUITE("io") {

TEST_CASE("edge list parses headers, comments and blanks") {
  Graph p3 = parse_edge_list("n 3\n0 1\n1 2\n");
  CHECK(p3 == make_family(FamilySpec::path(3)));

  Graph c4 = parse_edge_list("n 4\n# square\n0 1\n1 2\n\n2 3\n3 0\n");
  CHECK(c4 == make_family(FamilySpec::cycle(4)));

  Graph trailing_comment = parse_edge_list("n 2\n0 1  # the only edge\n");
  CHECK(trailing_comment.size() == 1);
}

TEST_CASE("edge list errors are positioned") {
  try {
    parse_edge_list("n 2\n0 0\n");
    FAIL("expected LoopEdge");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::LoopEdge);
    CHECK(e.line() == 2);
  }
  try {
    parse_edge_list("n 2\n0 5\n");
    FAIL("expected EndpointOutOfRange");
  } catch (const ParseError& e) {
    CHECK(e.code() == Errc::EndpointOutOfRange);
  }
  CHECK_THROWS_AS(parse_edge_list("0 1\n"), ParseError);       // missing header
  CHECK_THROWS_AS(parse_edge_list("n 3\n0 1 2\n"), ParseError);  // trailing token
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
}

TEST_CASE("edge list writer round-trips") {
  Graph w5 = make_family(FamilySpec::wheel(5));
  CHECK(parse_edge_list(write_edge_list(w5)) == w5);
}

TEST_CASE("graph6 fixed points") {
  CHECK(encode_graph6(make_family(FamilySpec::complete(2))) == "A_");
  Graph d = parse_graph6("D?{");
  CHECK(d.order() == 5);
  CHECK(encode_graph6(d) == "D?{");
  CHECK(parse_graph6("?").order() == 0);
  CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), Error);
  CHECK_THROWS_AS(parse_graph6("D?"), Error);        // truncated bitstream
  CHECK_THROWS_AS(parse_graph6("D?\x1f"), Error);    // byte below 63
  CHECK_THROWS_AS(parse_graph6("~??~?????"), Error); // order beyond the 64-vertex cap
}

TEST_CASE("graph6 round-trips on random graphs") {
  std::mt19937 gen(2024);
  for (int trial = 0; trial < 200; ++trial) {
    int n = std::uniform_int_distribution<int>(1, 30)(gen);
    std::vector<std::pair<int, int>> edges;
    std::bernoulli_distribution coin(0.3);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (coin(gen)) edges.emplace_back(i, j);
    Graph g(n, std::move(edges));
    std::string line = encode_graph6(g);
    CHECK(parse_graph6(line) == g);
    CHECK(encode_graph6(parse_graph6(line)) == line);
  }
}

TEST_CASE("digest is stable and discriminates") {
  Graph p4 = make_family(FamilySpec::path(4));
  CHECK(graph_digest(p4) == graph_digest(parse_edge_list(write_edge_list(p4))));
  CHECK(graph_digest(p4).size() == 16);
  CHECK(graph_digest(p4) != graph_digest(make_family(FamilySpec::cycle(4))));
}

TEST_CASE("graph file sniffing") {
  auto one = parse_graph_file("# comment first\nn 3\n0 1\n1 2\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0] == make_family(FamilySpec::path(3)));

  auto many = parse_graph_file("A_\nD?{\n");
  REQUIRE(many.size() == 2);
  CHECK(many[0].order() == 2);
  CHECK(many[1].order() == 5);
}

TEST_CASE("display notation is 1-indexed both ways") {
  CHECK(format_element(MixedElement::vertex(0)) == "v_1");
  CHECK(format_element(MixedElement::edge(0, 2)) == "e_{1,3}");
  CHECK(parse_display_element("v_1") == MixedElement::vertex(0));
  CHECK(parse_display_element("e_{1,3}") == MixedElement::edge(0, 2));
  CHECK_FALSE(parse_display_element("v_0").has_value());
  CHECK_FALSE(parse_display_element("x_2").has_value());

  Graph p3 = make_family(FamilySpec::path(3));
  MixedSet s(p3, {MixedElement::vertex(0), MixedElement::edge(1, 2)});
  CHECK(format_mixed_set(s) == "{v_1, e_{2,3}}");
}

TEST_CASE("witness files are 0-indexed and round-trip") {
  Graph p4 = make_family(FamilySpec::path(4));
  MixedSet s(p4, {MixedElement::vertex(1), MixedElement::edge(2, 3)});
  std::string text = write_witness(s);
  CHECK(text == "v 1\ne 2 3\n");
  MixedSet back = parse_witness(text, p4);
  CHECK(back.elements() == s.elements());
  CHECK_THROWS_AS(parse_witness("w 1\n", p4), ParseError);
  CHECK_THROWS_AS(parse_witness("v 9\n", p4), Error);  // not in the host
}

TEST_CASE("dot export highlights witness members") {
  Graph p3 = make_family(FamilySpec::path(3));
  MixedSet s(p3, {MixedElement::vertex(1), MixedElement::edge(0, 1)});
  std::string dot = to_dot(p3, &s);
  CHECK(dot.find("1 [label=\"v_2\", style=filled, fillcolor=gold]") != std::string::npos);
  CHECK(dot.find("0 -- 1 [color=red, penwidth=2.5]") != std::string::npos);
  CHECK(dot.find("1 -- 2;") != std::string::npos);

  std::string plain = to_dot(p3);
  CHECK(plain.find("gold") == std::string::npos);
  CHECK(plain.find("red") == std::string::npos);
}

}  // TEST_SUITE
