#include "broomlab/dense_subgraph.hpp"

#include "broomlab/error.hpp"

namespace broomlab {

Subgraph extract_dense_subgraph(const Graph& g, const Rational& d) {
  if (d <= 0) throw Error(ErrorCode::InvalidParameter, "density threshold must be positive");
  if (g.vertex_count() == 0 || g.average_degree() < d) {
    throw Error(ErrorCode::InvalidParameter, "average degree below the threshold");
  }
  const int n = g.vertex_count();
  const Rational half = d / 2;
  VertexSet alive(n);
  std::vector<int> degree(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    alive.insert(v);
    degree[v] = g.degree(v);
  }
  long long vertices = n;
  long long edges = static_cast<long long>(g.edge_count());

  while (vertices > 0) {
    int victim = -1;
    for (int v = 0; v < n && victim < 0; ++v) {
      if (alive.contains(v) && Rational(degree[v]) <= half) victim = v;
    }
    // Deleting a vertex of degree <= d/2 never lowers the average below d,
    // so the only way to fail is a low-degree vertex.
    if (victim < 0 && Rational(2 * edges, vertices) >= d) break;
    if (victim < 0) throw Error(ErrorCode::PreconditionViolation, "peeling invariant broken");
    alive.erase(victim);
    --vertices;
    edges -= degree[victim];
    for (int w : g.neighbors(victim)) {
      if (alive.contains(w)) --degree[w];
    }
  }
  return induced_subgraph(g, alive);
}

Subgraph component_filter(const Graph& g, const Rational& d) {
  VertexSet keep(g.vertex_count());
  for (const auto& comp : connected_components(g)) {
    long long degree_sum = 0;
    for (int v : comp) degree_sum += g.degree(v);
    if (Rational(degree_sum, static_cast<long long>(comp.size())) > d) {
      for (int v : comp) keep.insert(v);
    }
  }
  return induced_subgraph(g, keep);
}

}  // namespace broomlab
