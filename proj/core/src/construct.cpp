#include "broomlab/construct.hpp"

#include "broomlab/error.hpp"

namespace broomlab {

VectorLabel::VectorLabel(int q, int s) : q_(q), coords_(static_cast<std::size_t>(s), 0) {
  if (q != 2 && q != 3) throw Error(ErrorCode::InvalidParameter, "field order must be 2 or 3");
  if (s < 1) throw Error(ErrorCode::InvalidParameter, "dimension must be positive");
}

VectorLabel VectorLabel::from_index(int q, int s, int index) {
  VectorLabel out(q, s);
  for (int i = s - 1; i >= 0; --i) {
    out.coords_[i] = index % q;
    index /= q;
  }
  if (index != 0) throw Error(ErrorCode::InvalidParameter, "index out of range for F_q^s");
  return out;
}

int VectorLabel::index() const noexcept {
  int out = 0;
  for (int c : coords_) out = out * q_ + c;
  return out;
}

void VectorLabel::check_compatible(const VectorLabel& other) const {
  if (other.q_ != q_ || other.coords_.size() != coords_.size()) {
    throw Error(ErrorCode::InvalidParameter, "vectors from different spaces");
  }
}

VectorLabel& VectorLabel::operator+=(const VectorLabel& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = (coords_[i] + other.coords_[i]) % q_;
  return *this;
}

VectorLabel& VectorLabel::operator-=(const VectorLabel& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    coords_[i] = (coords_[i] - other.coords_[i] + q_) % q_;
  }
  return *this;
}

std::vector<std::string> Construction::comments() const {
  const std::string key = family == "odd-matching" ? "t" : "s";
  return {"family " + family, key + " " + std::to_string(parameter),
          "avoids rainbow B_{" + std::to_string(t) + ",3}"};
}

namespace {

int power(int base, int exp) {
  int out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void require_dimension(int s, int q) {
  if (s < 2) throw Error(ErrorCode::InvalidParameter, "dimension s must be >= 2");
  // Keeps hosts within what the detectors and file format handle comfortably.
  if (power(q, s) > 4096) throw Error(ErrorCode::SizeGuard, "field too large");
}

// Colors each edge of g by a label computed from its endpoints, then
// canonicalizes.
template <class Fn>
ColoredGraph color_by(Graph g, Fn&& label) {
  std::vector<int> colors;
  colors.reserve(g.edge_count());
  for (const auto& e : g.edges()) colors.push_back(label(e.u, e.v) + 1);
  return canonicalize_colors(ColoredGraph(std::move(g), std::move(colors)));
}

}  // namespace

Construction odd_clique_coloring(int t) {
  if (t < 3 || t % 2 == 0) {
    throw Error(ErrorCode::InvalidParameter,
                "odd-matching construction needs odd t >= 3, got " + std::to_string(t));
  }
  return {"odd-matching", t, t, round_robin_factorize(t + 1)};
}

Construction f2_bipartite_coloring(int s) {
  require_dimension(s, 2);
  const int t = power(2, s);
  auto coloring = color_by(build_biclique(t, t), [&](int x, int y) {
    return (VectorLabel::from_index(2, s, x) - VectorLabel::from_index(2, s, y - t)).index();
  });
  return {"f2-bipartite", s, t, std::move(coloring)};
}

Construction f3_clique_coloring(int s) {
  require_dimension(s, 3);
  const int k = power(3, s);
  auto coloring = color_by(build_clique(k), [&](int u, int v) {
    return (VectorLabel::from_index(3, s, u) + VectorLabel::from_index(3, s, v)).index();
  });
  return {"f3-clique", s, k - 1, std::move(coloring)};
}

Construction f2_clique_coloring(int s) {
  require_dimension(s, 2);
  const int k = power(2, s);
  auto coloring = color_by(build_clique(k), [&](int u, int v) {
    return (VectorLabel::from_index(2, s, u) - VectorLabel::from_index(2, s, v)).index();
  });
  return {"f2-clique", s, k - 2, std::move(coloring)};
}

Construction build_construction(const std::string& family, int parameter) {
  if (family == "odd-matching") return odd_clique_coloring(parameter);
  if (family == "f2-bipartite") return f2_bipartite_coloring(parameter);
  if (family == "f2-clique") return f2_clique_coloring(parameter);
  if (family == "f3-clique") return f3_clique_coloring(parameter);
  throw Error(ErrorCode::InvalidParameter, "unknown family '" + family + "'");
}

DensityReport density_report(const ColoredGraph& block, int n) {
  const int size = block.vertex_count();
  if (size == 0 || n < size) {
    throw Error(ErrorCode::InvalidParameter,
                "target order " + std::to_string(n) + " smaller than block order " +
                    std::to_string(size));
  }
  DensityReport report;
  report.vertices = n;
  report.copies = n / size;
  report.edges = static_cast<long long>(report.copies) * static_cast<long long>(block.edge_count());
  report.coefficient = Rational(static_cast<long long>(block.edge_count()), size);
  return report;
}

}  // namespace broomlab
