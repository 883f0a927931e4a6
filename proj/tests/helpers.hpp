#pragma once

#include "broomlab/coloring.hpp"

#include <initializer_list>
#include <tuple>
#include <vector>

namespace testing_support {

/// Colored graph from (u, v, color) triples in any order.
inline broomlab::ColoredGraph colored(int n, std::initializer_list<std::tuple<int, int, int>> items) {
  std::vector<broomlab::Edge> edges;
  for (auto [u, v, c] : items) edges.push_back({u, v});
  auto g = broomlab::Graph::from_edges(n, edges);
  std::vector<int> colors(g.edge_count(), 0);
  for (auto [u, v, c] : items) colors[*g.index_of(u, v)] = c;
  return broomlab::ColoredGraph(std::move(g), std::move(colors));
}

}  // namespace testing_support
