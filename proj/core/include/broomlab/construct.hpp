#pragma once

#include "broomlab/coloring.hpp"

#include <string>
#include <vector>

namespace broomlab {

/// A vector of F_q^s (q in {2, 3}) with componentwise arithmetic.
///
/// Vectors are numbered in lexicographic order, first coordinate most
/// significant, so index i has the base-q digits of i as coordinates.
class VectorLabel {
 public:
  VectorLabel(int q, int s);
  static VectorLabel from_index(int q, int s, int index);

  int q() const noexcept { return q_; }
  int dimension() const noexcept { return static_cast<int>(coords_.size()); }
  int index() const noexcept;
  const std::vector<int>& coords() const noexcept { return coords_; }

  VectorLabel& operator+=(const VectorLabel& other);
  VectorLabel& operator-=(const VectorLabel& other);
  friend VectorLabel operator+(VectorLabel a, const VectorLabel& b) { return a += b; }
  friend VectorLabel operator-(VectorLabel a, const VectorLabel& b) { return a -= b; }
  friend bool operator==(const VectorLabel&, const VectorLabel&) = default;

 private:
  void check_compatible(const VectorLabel& other) const;

  int q_;
  std::vector<int> coords_;
};

/// A generated coloring plus the t it is built to avoid B_{t,3} for.
struct Construction {
  std::string family;   // odd-matching, f2-bipartite, f2-clique, f3-clique
  int parameter = 0;    // t for odd-matching, s otherwise
  int t = 0;
  ColoredGraph coloring;

  /// Metadata lines for the coloring file's comment block.
  std::vector<std::string> comments() const;
};

/// K_{t+1} colored by the round-robin 1-factorization; t odd, t >= 3.
Construction odd_clique_coloring(int t);
/// K_{2^s,2^s}, c(x, y) = x - y over F_2^s; s >= 2, t = 2^s.
Construction f2_bipartite_coloring(int s);
/// K_{3^s}, c(u, v) = u + v over F_3^s; s >= 2, t = 3^s - 1.
Construction f3_clique_coloring(int s);
/// K_{2^s}, c(u, v) = u - v over F_2^s; s >= 2, t = 2^s - 2.
Construction f2_clique_coloring(int s);

/// Dispatches on the family name; `parameter` is t for odd-matching, s
/// otherwise.
Construction build_construction(const std::string& family, int parameter);

struct DensityReport {
  int copies = 0;
  long long edges = 0;
  int vertices = 0;
  Rational coefficient;  // |E(block)| / |V(block)|
};

/// Edge count of floor(n / |V(block)|) disjoint copies of block on n
/// vertices; requires n >= |V(block)|.
DensityReport density_report(const ColoredGraph& block, int n);

}  // namespace broomlab
