#include "broomlab/error.hpp"
#include "broomlab/graph.hpp"

#include <doctest.h>

using namespace broomlab;

TEST_SUITE("graph") {

TEST_CASE("vertex sets") {
  VertexSet a(6), b(6);
  a.insert(1), a.insert(3), b.insert(3), b.insert(5);
  CHECK((a & b).members() == std::vector<int>{3});
  CHECK((a | b).size() == 3);
  CHECK((a - b).members() == std::vector<int>{1});
  CHECK_THROWS_AS(a.insert(6), Error);
  CHECK_THROWS_AS(a |= VertexSet(5), Error);
}

TEST_CASE("from_edges normalizes and rejects bad input") {
  auto g = Graph::from_edges(4, {{2, 1}, {0, 3}, {0, 1}});
  REQUIRE(g.edge_count() == 3);
  CHECK(g.edge_at(0) == Edge{0, 1});
  CHECK(g.edge_at(1) == Edge{0, 3});
  CHECK(g.edge_at(2) == Edge{1, 2});
  CHECK(*g.index_of(3, 0) == 1);
  CHECK_FALSE(g.has_edge(2, 3));
  CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), Error);
  CHECK_THROWS_AS(Graph::from_edges(3, {{0, 3}}), Error);
}

TEST_CASE("edge index is the lexicographic pair order") {
  auto g = build_clique(5);
  int i = 0;
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v) CHECK(*g.index_of(u, v) == static_cast<std::size_t>(i++));
}

TEST_CASE("builders") {
  CHECK(build_clique(1).edge_count() == 0);
  CHECK(build_clique(6).edge_count() == 15);
  CHECK(build_clique(11).edge_count() == 55);
  CHECK(build_biclique(4, 4).edge_count() == 16);
  CHECK(build_biclique(8, 8).edge_count() == 64);
  auto star = build_biclique(1, 3);
  CHECK(star.edge_count() == 3);
  CHECK(star.degree(0) == 3);
  CHECK(build_path(4).edge_count() == 3);
  CHECK(build_clique(6).average_degree() == Rational(5));
}

TEST_CASE("disjoint unions") {
  CHECK(disjoint_union(build_clique(10), 1000).edge_count() == 4500);
  CHECK(disjoint_union(build_clique(4), 3).edge_count() == 0);
  auto g = disjoint_union(build_clique(9), 19);
  CHECK(g.edge_count() == 72);
  CHECK(g.degree(18) == 0);
  CHECK(connected_components(g).size() == 3);
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(build_clique(3), 2).size() == 6);
  CHECK(enumerate_paths(build_clique(3), 3).empty());
  auto p = enumerate_paths(build_path(4), 3);
  REQUIRE(p.size() == 2);
  CHECK(p[0] == std::vector<int>{0, 1, 2, 3});
  CHECK(p[1] == std::vector<int>{3, 2, 1, 0});
  // K_5: 5*4*3*2 directed 3-edge paths.
  CHECK(enumerate_paths(build_clique(5), 3).size() == 120);
}

TEST_CASE("four-cycle enumeration") {
  CHECK(enumerate_c4(build_clique(4)).size() == 3);
  CHECK(enumerate_c4(build_biclique(2, 2)).size() == 1);
  CHECK(enumerate_c4(build_path(6)).empty());
  CHECK(enumerate_c4(build_clique(6)).size() == 45);  // 3 * C(6,4)
  for (const auto& c : enumerate_c4(build_clique(5))) {
    CHECK(c.v[0] < c.v[1]);
    CHECK(c.v[1] < c.v[3]);
    CHECK(c == canonical_cycle(c.v[2], c.v[1], c.v[0], c.v[3]));
  }
}

TEST_CASE("induced subgraph") {
  VertexSet keep(5);
  keep.insert(1), keep.insert(3), keep.insert(4);
  auto s = induced_subgraph(build_clique(5), keep);
  CHECK(s.graph.edge_count() == 3);
  CHECK(s.original == std::vector<int>{1, 3, 4});
}

}
