#include "broomlab/bounds.hpp"
#include "broomlab/dense_subgraph.hpp"
#include "broomlab/error.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace broomlab;

TEST_SUITE("bounds") {

TEST_CASE("tabulated values") {
  CHECK(format_bounds(bounds_for(9)) == "exact 9/2");
  CHECK(format_bounds(bounds_for(6)) == "exact 7/2");
  CHECK(format_bounds(bounds_for(8)) == "exact 4");
  CHECK(format_bounds(bounds_for(10)) == "[9/2, 65/12]");
  CHECK(format_bounds(bounds_for(12)) == "[11/2, 6]");
  CHECK(bounds_for(10).upper == Rational(11, 2) - Rational(1, 12));
  CHECK(bounds_for(12).lower_source == BoundSource::CliqueCopies);
  CHECK(bounds_for(12).upper_source == BoundSource::MultipleOfFourUpperBound);
  CHECK_THROWS_AS(bounds_for(2), Error);
}

TEST_CASE("power detection is exact") {
  CHECK(is_power_of_two(1024));
  CHECK_FALSE(is_power_of_two(1023));
  CHECK(is_power_of_three_minus_one(26));
  CHECK(is_power_of_three_minus_one(80));
  CHECK_FALSE(is_power_of_three_minus_one(2));  // s >= 2
  CHECK(exponent_if_power(243, 3) == 5);
  CHECK_FALSE(exponent_if_power(242, 3));
}

TEST_CASE("sweep: lower <= upper, exact iff equal") {
  for (int t = 3; t <= 1'000'000; t += (t < 5000 ? 1 : 997)) {
    const auto b = bounds_for(t);
    REQUIRE(b.lower <= b.upper);
    REQUIRE(b.exact == (b.lower == b.upper));
  }
}

TEST_CASE("general advisory bound") {
  CHECK(general_broom_upper_bound(9, 3) == Rational(5));
  CHECK_THROWS_AS(general_broom_upper_bound(9, 4), Error);
  CHECK_THROWS_AS(general_broom_upper_bound(4, 3), Error);
  CHECK_FALSE(bounds_for(4).general_advisory);
  CHECK(bounds_for(5).general_advisory == Rational(3));
}

TEST_CASE("dense subgraph examples") {
  auto k6 = build_clique(6);
  auto same = extract_dense_subgraph(k6, Rational(5));
  CHECK(same.graph == k6);

  // K_10 plus a pendant vertex: average 92/11, so d = 8 meets the precondition.
  const auto k10 = build_clique(10);
  std::vector<Edge> edges(k10.edges().begin(), k10.edges().end());
  edges.push_back({9, 10});
  auto pendant = Graph::from_edges(11, edges);
  auto core = extract_dense_subgraph(pendant, Rational(8));
  CHECK(core.graph == build_clique(10));
  CHECK(core.original.size() == 10);
  CHECK_THROWS_AS(extract_dense_subgraph(pendant, Rational(9)), Error);

  auto star = build_biclique(1, 100);
  auto kept = extract_dense_subgraph(star, Rational(19, 10));
  CHECK(kept.graph == star);
  CHECK_THROWS_AS(extract_dense_subgraph(star, Rational(0)), Error);
}

TEST_CASE("dense subgraph guarantees on random inputs") {
  std::mt19937_64 rng(5);
  int checked = 0;
  while (checked < 200) {
    const int n = 3 + static_cast<int>(rng() % 20);
    auto g = oracle::random_graph(n, 0.1 + 0.8 * (rng() % 100) / 100.0, rng);
    if (g.edge_count() == 0) continue;
    const auto avg = g.average_degree();
    const Rational d = avg * Rational(1 + static_cast<long long>(rng() % 10), 10);
    auto out = extract_dense_subgraph(g, d);
    REQUIRE(out.graph.vertex_count() > 0);
    CHECK(Rational(out.graph.min_degree()) > d / 2);
    CHECK(out.graph.average_degree() >= d);
    ++checked;
  }
}

TEST_CASE("component filter") {
  const auto k10 = build_clique(10);
  std::vector<Edge> edges(k10.edges().begin(), k10.edges().end());
  edges.push_back({10, 11}), edges.push_back({11, 12}), edges.push_back({10, 12});
  auto g = Graph::from_edges(13, edges);
  CHECK(component_filter(g, Rational(8)).graph == build_clique(10));
  CHECK(component_filter(g, Rational(1)).graph == g);
  CHECK(component_filter(Graph(0), Rational(1)).graph.vertex_count() == 0);
}

}
