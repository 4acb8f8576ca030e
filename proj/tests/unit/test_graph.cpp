#include "doctest.h"

#include "mmm/errors.hpp"
#include "mmm/graph.hpp"
#include "mmm/rational.hpp"

using namespace mmm;

TEST_CASE("graph construction normalizes and rejects bad edges") {
  Graph g(3, {{2, 1}, {0, 1}});
  CHECK(g.num_edges() == 2);
  CHECK(g.edges()[0] == Edge(0, 1));
  CHECK(g.edges()[1] == Edge(1, 2));
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.edge_index(1, 2) == 1u);
  CHECK_THROWS_AS(Graph(2, {{0, 0}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(2, {{0, 2}}), InvalidArgument);
  CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), InvalidArgument);
}

TEST_CASE("vertex cover checks") {
  Graph empty(0);
  CHECK(verify_vertex_cover(empty, {}).ok);
  Graph single(2, {{0, 1}});
  VertexSet one{0};
  CHECK(verify_vertex_cover(single, one).ok);
  auto miss = verify_vertex_cover(single, {});
  CHECK_FALSE(miss.ok);
  REQUIRE(miss.uncovered);
  CHECK(*miss.uncovered == Edge(0, 1));
}

TEST_CASE("maximal matching checks") {
  Graph p3(3, {{0, 1}, {1, 2}});
  Matching ab{{0, 1}};
  CHECK(verify_maximal_matching(p3, ab).ok);
  Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto r = verify_maximal_matching(p4, ab);
  CHECK_FALSE(r.ok);
  CHECK(*r.augmenting == Edge(2, 3));
  Matching overlapping{{0, 1}, {1, 2}};
  CHECK_THROWS_AS(verify_maximal_matching(p4, overlapping), InvalidArgument);
  Matching foreign{{0, 3}};
  CHECK_THROWS_AS(verify_maximal_matching(p4, foreign), InvalidArgument);
}

TEST_CASE("bipartite graph layout") {
  BipartiteGraph b(2, 3, {{0, 2}, {1, 0}});
  CHECK(b.graph().num_vertices() == 5);
  CHECK(b.has_edge(0, 2));
  CHECK_FALSE(b.has_edge(0, 0));
  CHECK(b.right(2) == 4);
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(1, 12)) == "1/12");
  CHECK(to_string(Rational(3)) == "3/1");
  CHECK(parse_rational("1/12") == Rational(1, 12));
  CHECK(parse_rational("-2/4") == Rational(-1, 2));
  CHECK(parse_rational("0.25") == Rational(1, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), InvalidArgument);
  CHECK_THROWS_AS(parse_rational("abc"), InvalidArgument);
  CHECK(round_half_away(Rational(9, 2)) == 5);
  CHECK(round_half_away(Rational(1, 2)) == 1);
  CHECK(round_half_away(Rational(-1, 2)) == -1);
  CHECK(round_half_away(Rational(7, 5)) == 1);
}
