#include "broomlab/coloring.hpp"
#include "broomlab/error.hpp"

#include <algorithm>

namespace broomlab {

namespace {

constexpr int kMaxCanonicalOrder = 16;

// Branch-and-bound over vertex orderings. Pairs are emitted in colex order,
// so placing new vertex j fixes exactly the block of pairs (i, j), i < j, and
// a prefix that already exceeds the incumbent can be cut.
class CanonicalSearch {
 public:
  explicit CanonicalSearch(const ColoredGraph& cg)
      : n_(cg.vertex_count()) {
    pair_color_.assign(static_cast<std::size_t>(n_ * n_), 0);
    for (std::size_t e = 0; e < cg.edge_count(); ++e) {
      const auto [u, v] = cg.graph().edge_at(e);
      pair_color_[u * n_ + v] = pair_color_[v * n_ + u] = cg.color(e);
    }
    color_map_.assign(static_cast<std::size_t>(cg.max_color()) + 1, 0);
    used_.assign(static_cast<std::size_t>(n_), 0);
    code_.reserve(static_cast<std::size_t>(n_ * (n_ - 1) / 2));
  }

  CanonicalForm run() {
    place(0);
    best_.n = n_;
    return best_;
  }

 private:
  // Compares the current prefix with the incumbent's prefix of equal length.
  int compare_prefix() const {
    for (std::size_t i = 0; i < code_.size(); ++i) {
      if (code_[i] != best_.code[i]) return code_[i] < best_.code[i] ? -1 : 1;
    }
    return 0;
  }

  void place(int j) {
    if (j == n_) {
      if (!have_best_ || compare_prefix() < 0) {
        best_.code = code_;
        best_.relabel = order_;
        have_best_ = true;
      }
      return;
    }
    for (int w = 0; w < n_; ++w) {
      if (used_[w]) continue;
      const std::size_t offset = code_.size();
      const int next_before = next_color_;
      std::vector<int> assigned;
      for (int i = 0; i < j; ++i) {
        const int c = pair_color_[order_[i] * n_ + w];
        int value = 0;
        if (c != 0) {
          if (color_map_[c] == 0) {
            color_map_[c] = ++next_color_;
            assigned.push_back(c);
          }
          value = color_map_[c];
        }
        code_.push_back(value);
      }
      if (!have_best_ || compare_prefix() <= 0) {
        used_[w] = 1;
        order_.push_back(w);
        place(j + 1);
        order_.pop_back();
        used_[w] = 0;
      }
      for (int c : assigned) color_map_[c] = 0;
      next_color_ = next_before;
      code_.resize(offset);
    }
  }

  int n_;
  std::vector<int> pair_color_;
  std::vector<int> color_map_;
  std::vector<char> used_;
  std::vector<int> order_;
  std::vector<int> code_;
  int next_color_ = 0;
  bool have_best_ = false;
  CanonicalForm best_;
};

}  // namespace

CanonicalForm canonical_form(const ColoredGraph& cg) {
  if (cg.vertex_count() > kMaxCanonicalOrder) {
    throw Error(ErrorCode::SizeGuard, "canonical form limited to 16 vertices");
  }
  if (cg.vertex_count() == 0) return {};
  return CanonicalSearch(cg).run();
}

bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count() ||
      a.color_count() != b.color_count()) {
    return false;
  }
  return canonical_form(a) == canonical_form(b);
}

}  // namespace broomlab
