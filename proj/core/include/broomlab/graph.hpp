#pragma once

#include "broomlab/vertex_set.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/rational.hpp>

namespace broomlab {

using Rational = boost::rational<long long>;

/// Unordered vertex pair stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1.
///
/// Edges are kept sorted lexicographically; the position of an edge in that
/// order is its edge index, which search branching and the coloring file
/// format both rely on.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  /// Builds a graph from an arbitrary edge list. Pairs may be given in either
  /// orientation; self-loops, duplicates and out-of-range endpoints throw.
  static Graph from_edges(int n, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge_at(std::size_t index) const { return edges_.at(index); }
  std::optional<std::size_t> index_of(int u, int v) const;
  bool has_edge(int u, int v) const { return index_of(u, v).has_value(); }

  /// Sorted neighbors of v.
  std::span<const int> neighbors(int v) const;
  /// Edge indices incident to v, aligned with neighbors(v).
  std::span<const std::size_t> incident_edges(int v) const;
  VertexSet neighbor_set(int v) const;
  VertexSet closed_neighbor_set(int v) const;

  int degree(int v) const { return static_cast<int>(neighbors(v).size()); }
  int min_degree() const;
  int max_degree() const;
  /// 2|E|/|V|; zero for the empty vertex set.
  Rational average_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> neighbors_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// Vertex-induced subgraph with its vertices renumbered 0..k-1 in increasing
/// order of their original ids.
struct Subgraph {
  Graph graph;
  std::vector<int> original;  // original[i] = id of vertex i in the parent
};

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);

Graph build_clique(int k);
/// K_{a,b}; vertices 0..a-1 form the first side.
Graph build_biclique(int a, int b);
/// Path with k vertices 0-1-...-(k-1).
Graph build_path(int k);
/// floor(n / |V(block)|) disjoint copies of block followed by isolated
/// vertices, n vertices in total.
Graph disjoint_union(const Graph& block, int n);

/// Connected components as sorted vertex lists, ordered by least vertex.
std::vector<std::vector<int>> connected_components(const Graph& g);

/// Visits every simple path with `length` edges, once per direction, in
/// lexicographic order of the vertex sequence. The visitor returns false to
/// stop early.
void for_each_path(const Graph& g, int length,
                   const std::function<bool(std::span<const int>)>& visit);
std::vector<std::vector<int>> enumerate_paths(const Graph& g, int length);

/// A 4-cycle v[0]-v[1]-v[2]-v[3]-v[0] in canonical position: v[0] is the least
/// vertex and v[1] < v[3].
struct Cycle4 {
  std::array<int, 4> v{};

  bool contains(int x) const;
  /// Position of x on the cycle, or -1.
  int position(int x) const;
  friend auto operator<=>(const Cycle4&, const Cycle4&) = default;
};

Cycle4 canonical_cycle(int a, int b, int c, int d);

void for_each_c4(const Graph& g, const std::function<void(const Cycle4&)>& visit);
std::vector<Cycle4> enumerate_c4(const Graph& g);

}  // namespace broomlab
