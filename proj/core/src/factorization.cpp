#include "broomlab/factorization.hpp"

#include "broomlab/error.hpp"

#include <set>
#include <string>

namespace broomlab {

namespace {

// Class j (1..k-1) is the one containing edge {0, j}; within a class the
// least unmatched vertex is paired next. Each factorization arises once.
class FactorizationWalk {
 public:
  FactorizationWalk(int k, const std::function<bool(const ColoredGraph&)>& emit)
      : k_(k), g_(build_clique(k)), colors_(g_.edge_count(), 0), in_class_(k, 0), emit_(emit) {}

  bool run() { return open_class(1); }

 private:
  bool open_class(int j) {
    if (j == k_) return emit_(canonicalize_colors(ColoredGraph(g_, colors_)));
    const auto e = *g_.index_of(0, j);
    if (colors_[e]) return true;
    std::fill(in_class_.begin(), in_class_.end(), 0);
    colors_[e] = j;
    in_class_[0] = in_class_[j] = 1;
    const bool go = fill(j);
    colors_[e] = 0;
    return go;
  }

  bool fill(int j) {
    int u = 0;
    while (u < k_ && in_class_[u]) ++u;
    if (u == k_) {
      auto saved = in_class_;
      const bool go = open_class(j + 1);
      in_class_ = std::move(saved);
      return go;
    }
    for (int w = u + 1; w < k_; ++w) {
      if (in_class_[w]) continue;
      const auto e = *g_.index_of(u, w);
      if (colors_[e]) continue;
      colors_[e] = j;
      in_class_[u] = in_class_[w] = 1;
      const bool go = fill(j);
      in_class_[u] = in_class_[w] = 0;
      colors_[e] = 0;
      if (!go) return false;
    }
    return true;
  }

  int k_;
  Graph g_;
  std::vector<int> colors_;
  std::vector<char> in_class_;
  const std::function<bool(const ColoredGraph&)>& emit_;
};

}  // namespace

std::uint64_t enumerate_one_factorizations(
    int k, const std::function<bool(const ColoredGraph&)>& visit, bool iso_reduce) {
  if (k > 8) {
    throw Error(ErrorCode::SizeGuard, "1-factorization enumeration is limited to k <= 8");
  }
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::InvalidParameter,
                "1-factorizations need an even order >= 2, got " + std::to_string(k));
  }
  std::uint64_t emitted = 0;
  std::set<std::vector<int>> seen;
  const std::function<bool(const ColoredGraph&)> emit = [&](const ColoredGraph& cg) {
    if (iso_reduce && !seen.insert(canonical_form(cg).code).second) return true;
    ++emitted;
    return visit(cg);
  };
  FactorizationWalk(k, emit).run();
  return emitted;
}

std::uint64_t count_one_factorizations(int k, bool iso_reduce) {
  return enumerate_one_factorizations(k, [](const ColoredGraph&) { return true; }, iso_reduce);
}

}  // namespace broomlab
