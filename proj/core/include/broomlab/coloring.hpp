#pragma once

#include "broomlab/graph.hpp"

#include <optional>
#include <span>
#include <vector>

namespace broomlab {

/// A graph together with a positive color id per edge index.
///
/// The coloring is held as given; generators and the file loader always
/// produce canonical colorings (ids 1..C in order of first appearance along
/// the edge index). Properness is a separate verdict, see check_proper.
class ColoredGraph {
 public:
  ColoredGraph() = default;
  ColoredGraph(Graph graph, std::vector<int> colors);

  const Graph& graph() const noexcept { return graph_; }
  int vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t edge_count() const noexcept { return graph_.edge_count(); }

  std::span<const int> colors() const noexcept { return colors_; }
  int color(std::size_t edge_index) const { return colors_.at(edge_index); }
  std::optional<int> color_of(int u, int v) const;

  /// Number of distinct color ids in use.
  int color_count() const noexcept { return color_count_; }
  /// Largest color id in use (0 for an edgeless graph).
  int max_color() const noexcept { return max_color_; }
  bool is_canonical() const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.graph_ == b.graph_ && a.colors_ == b.colors_;
  }

 private:
  Graph graph_;
  std::vector<int> colors_;
  int color_count_ = 0;
  int max_color_ = 0;
};

struct ProperVerdict {
  bool proper = true;
  // Least vertex carrying two equally colored edges, and that color.
  std::optional<int> vertex;
  std::optional<int> color;

  explicit operator bool() const noexcept { return proper; }
};

ProperVerdict check_proper(const ColoredGraph& cg);

/// Relabels colors to first-appearance order along the edge index.
ColoredGraph canonicalize_colors(const ColoredGraph& cg);

/// 1-factorization of K_k by the circle method: vertex k-1 stays fixed while
/// 0..k-2 rotate. Colors are returned canonicalized.
ColoredGraph round_robin_factorize(int k);

/// Sorted set of colors on edges at v.
std::vector<int> color_degree_profile(const ColoredGraph& cg, int v);

struct ColorClassView {
  int palette = 0;
  // classes[c - 1] = edge indices of color c, ascending.
  std::vector<std::vector<std::size_t>> classes;
  // Per vertex: the unique palette color absent at it, if exactly one is.
  std::vector<std::optional<int>> missing;

  bool all_matchings = true;
  /// n even, palette n-1, every class a perfect matching.
  bool one_factorization = false;
  /// n odd, palette n, every class misses exactly one vertex and distinct
  /// classes miss distinct vertices.
  bool near_one_factorization = false;
};

/// Class view against the palette 1..palette; palette 0 means max_color().
ColorClassView color_classes(const ColoredGraph& cg, int palette = 0);

/// Isomorphism-invariant code of a colored graph under simultaneous vertex
/// and color relabeling. Two colored graphs are isomorphic iff their codes
/// are equal. Intended for hosts of at most 16 vertices.
struct CanonicalForm {
  int n = 0;
  // Entries over vertex pairs in colex order: 0 for a non-edge, otherwise a
  // color id renumbered by first appearance.
  std::vector<int> code;
  // relabel[new] = old vertex realizing the code.
  std::vector<int> relabel;

  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
    return a.n == b.n && a.code == b.code;
  }
};

CanonicalForm canonical_form(const ColoredGraph& cg);
bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

/// Applies a vertex permutation: vertex v becomes perm[v]. Colors follow
/// their edges and are not canonicalized.
ColoredGraph permute_vertices(const ColoredGraph& cg, std::span<const int> perm);

}  // namespace broomlab
