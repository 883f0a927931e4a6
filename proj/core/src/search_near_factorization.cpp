#include "engines.hpp"
#include "search_state.hpp"

#include "broomlab/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

// Near-factorization mode on K_n, n odd: color v + 1 is the label of vertex v
// and is missing there, every other color appears at every vertex exactly
// once. A chord BC of color label(A) pins c(AB) = label(C) and c(AC) =
// label(B) (the four-cycle fact); pins are propagated eagerly.

namespace broomlab {

std::vector<Edge> near_factorization_first_class(int n) {
  std::vector<Edge> out;
  for (int v = 1; v + 1 < n; v += 2) out.push_back({v, v + 1});
  return out;
}

bool has_bichromatic_p4(std::span<const Edge> first, std::span<const Edge> second) {
  int n = 0;
  for (const auto& e : first) n = std::max(n, e.v + 1);
  for (const auto& e : second) n = std::max(n, e.v + 1);
  std::vector<int> mate1(n, -1);
  std::vector<int> mate2(n, -1);
  for (const auto& e : first) mate1[e.u] = e.v, mate1[e.v] = e.u;
  for (const auto& e : second) mate2[e.u] = e.v, mate2[e.v] = e.u;
  // Components of a union of two matchings are alternating paths or cycles.
  std::vector<char> seen(n, 0);
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (int w : {mate1[comp[i]], mate2[comp[i]]}) {
        if (w >= 0 && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
      }
    }
    int edges = 0;
    for (int v : comp) edges += (mate1[v] >= 0) + (mate2[v] >= 0);
    edges /= 2;
    const bool cycle = edges == static_cast<int>(comp.size());
    if (cycle ? edges >= 6 : edges >= 4) return true;
  }
  return false;
}

}  // namespace broomlab

namespace broomlab::detail {

namespace {

constexpr int kSecondColor = 2;

class NearFactorizationEngine {
 public:
  NearFactorizationEngine(const SearchConfig& config, bool lemma_active)
      : cfg_(config), h_(config.host), state_(h_, h_.n), lemma_(lemma_active) {
    labels_.resize(h_.n);
    std::iota(labels_.begin(), labels_.end(), 1);
  }

  SearchStats stats;
  const PartialColoring& state() const { return state_; }

  bool place_first_class() {
    rules_on_ = false;
    for (const auto& e : near_factorization_first_class(h_.n)) {
      if (!push(h_.id(e.u, e.v), 1)) return false;
    }
    return true;
  }

  // Valid second classes after the first, in lexicographic order.
  std::vector<std::vector<Edge>> second_class_candidates() {
    std::vector<std::vector<Edge>> out;
    rules_on_ = false;
    enumerate_second(out);
    std::sort(out.begin(), out.end());
    return out;
  }

  // Places a second class and checks the whole resulting state.
  bool place_second_class(const std::vector<Edge>& cls) {
    rules_on_ = false;
    for (const auto& e : cls) {
      if (!push(h_.id(e.u, e.v), kSecondColor)) return false;
    }
    rules_on_ = true;
    for (int e = 0; e < h_.m; ++e) {
      if (!state_.colored(e)) continue;
      const Violation v = violation(e);
      if (v != Violation::None) {
        ++stats.pruned[rule_key(v)];
        return false;
      }
    }
    return true;
  }

  std::size_t mark() const { return trail_.size(); }

  void rollback(std::size_t mark) {
    while (trail_.size() > mark) {
      state_.unassign(trail_.back());
      trail_.pop_back();
    }
  }

  bool dfs() {
    const auto [c, u] = select();
    if (c == 0) return leaf_is_witness(cfg_.host, state_, cfg_.t);
    for (int w = 0; w < h_.n; ++w) {
      const int e = option(c, u, w);
      if (e < 0) continue;
      const auto m = mark();
      ++stats.nodes;
      const bool ok = push(e, c);
      stats.max_depth = std::max(stats.max_depth, state_.assigned());
      if (cfg_.on_node) cfg_.on_node(state_.colors());
      if (ok && dfs()) return true;
      rollback(m);
    }
    return false;
  }

 private:
  // Edge index if u may take partner w in color c, else -1.
  int option(int c, int u, int w) const {
    if (w == u || w == c - 1 || state_.has(w, c)) return -1;
    const int e = h_.id(u, w);
    return state_.allowed(e, c) ? e : -1;
  }

  // Next (color, vertex) lacking that color; (0, 0) when complete.
  std::pair<int, int> select() const {
    std::pair<int, int> best{0, 0};
    int best_options = std::numeric_limits<int>::max();
    for (int c = 1; c <= h_.n; ++c) {
      for (int u = 0; u < h_.n; ++u) {
        if (u == c - 1 || state_.has(u, c)) continue;
        if (cfg_.order == BranchOrder::Canonical) return {c, u};
        int options = 0;
        for (int w = 0; w < h_.n; ++w) options += option(c, u, w) >= 0;
        if (options < best_options) {
          best_options = options;
          best = {c, u};
          if (options == 0) return best;
        }
      }
    }
    return best;
  }

  Violation violation(int e) const {
    if (cfg_.rules.c4 && labeled_c4_violated(h_, state_, e, labels_)) return Violation::C4;
    if (cfg_.rules.broom_capacity && capacity_violated(h_, state_, e, cfg_.t, labels_)) {
      return Violation::Capacity;
    }
    if (lemma_ && bichromatic_p4_through(h_, state_, e)) return Violation::LemmaP4;
    return Violation::None;
  }

  // Assigns c to e and propagates pins. On false the caller rolls back.
  bool push(int e0, int c0) {
    std::vector<std::pair<int, int>> queue{{e0, c0}};
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const auto [e, c] = queue[i];
      const Edge ed = h_.edges[e];
      if (state_.colored(e)) {
        if (state_.color(e) == c) continue;
        ++stats.pruned["four-cycle-fact"];
        return false;
      }
      if (c == labels_[ed.u] || c == labels_[ed.v] || !state_.allowed(e, c)) {
        ++stats.pruned["four-cycle-fact"];
        return false;
      }
      state_.assign(e, c);
      trail_.push_back(e);
      if (rules_on_) {
        const Violation v = violation(e);
        if (v != Violation::None) {
          ++stats.pruned[rule_key(v)];
          return false;
        }
      }
      const int a = c - 1;
      queue.emplace_back(h_.id(a, ed.u), labels_[ed.v]);
      queue.emplace_back(h_.id(a, ed.v), labels_[ed.u]);
    }
    return true;
  }

  void enumerate_second(std::vector<std::vector<Edge>>& out) {
    int u = -1;
    for (int v = 0; v < h_.n; ++v) {
      if (v != kSecondColor - 1 && !state_.has(v, kSecondColor)) {
        u = v;
        break;
      }
    }
    if (u < 0) {
      std::vector<Edge> cls;
      for (int e = 0; e < h_.m; ++e) {
        if (state_.color(e) == kSecondColor) cls.push_back(h_.edges[e]);
      }
      out.push_back(std::move(cls));
      return;
    }
    for (int w = u + 1; w < h_.n; ++w) {
      const int e = option(kSecondColor, u, w);
      if (e < 0) continue;
      const auto m = mark();
      if (push(e, kSecondColor)) enumerate_second(out);
      rollback(m);
    }
  }

  const SearchConfig& cfg_;
  HostIndex h_;
  PartialColoring state_;
  bool lemma_;
  bool rules_on_ = true;
  Labels labels_;
  std::vector<int> trail_;
};

// Vertex permutations fixing 0, 1, 2 and preserving the first class.
std::vector<std::vector<int>> first_class_stabilizer(int n) {
  const int k = (n - 3) / 2;
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    for (int flips = 0; flips < (1 << k); ++flips) {
      std::vector<int> perm(n);
      perm[0] = 0, perm[1] = 1, perm[2] = 2;
      for (int i = 0; i < k; ++i) {
        const int lo = 3 + 2 * i;
        const int to = 3 + 2 * order[i];
        const bool flip = (flips >> i) & 1;
        perm[lo] = flip ? to + 1 : to;
        perm[lo + 1] = flip ? to : to + 1;
      }
      out.push_back(std::move(perm));
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

std::vector<Edge> image(const std::vector<Edge>& cls, const std::vector<int>& perm) {
  std::vector<Edge> out;
  out.reserve(cls.size());
  for (const auto& e : cls) {
    out.push_back({std::min(perm[e.u], perm[e.v]), std::max(perm[e.u], perm[e.v])});
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_orbit_minimum(const std::vector<Edge>& cls,
                      const std::vector<std::vector<int>>& group) {
  return std::all_of(group.begin(), group.end(),
                     [&](const auto& perm) { return !(image(cls, perm) < cls); });
}

void check_second_class(const std::vector<Edge>& cls, int n) {
  std::vector<int> touched(n, 0);
  for (const auto& e : cls) {
    if (e.u < 0 || e.v >= n || e.u >= e.v) {
      throw Error(ErrorCode::InvalidParameter, "second class has an invalid edge");
    }
    ++touched[e.u];
    ++touched[e.v];
  }
  for (int v = 0; v < n; ++v) {
    if (touched[v] != (v == kSecondColor - 1 ? 0 : 1)) {
      throw Error(ErrorCode::InvalidParameter,
                  "second class must be a matching missing exactly vertex 1");
    }
  }
}

}  // namespace

Outcome run_near_factorization(const SearchConfig& config, bool lemma_active) {
  NearFactorizationEngine engine(config, lemma_active);
  Outcome out;
  const int n = config.host.vertex_count();
  const auto first = near_factorization_first_class(n);

  std::vector<std::vector<Edge>> classes;
  if (engine.place_first_class()) {
    const auto base = engine.mark();
    auto candidates = engine.second_class_candidates();
    engine.rollback(base);
    if (config.fixed_second_class) {
      auto wanted = *config.fixed_second_class;
      std::sort(wanted.begin(), wanted.end());
      check_second_class(wanted, n);
      if (std::binary_search(candidates.begin(), candidates.end(), wanted)) {
        classes.push_back(wanted);
      }
    } else {
      const auto group = first_class_stabilizer(n);
      for (auto& cls : candidates) {
        if (is_orbit_minimum(cls, group)) {
          classes.push_back(std::move(cls));
        } else {
          ++engine.stats.pruned["symmetry"];
        }
      }
    }
    for (const auto& cls : classes) {
      ++engine.stats.nodes;
      if (lemma_active && has_bichromatic_p4(first, cls)) {
        ++engine.stats.pruned["lemma-certified"];
        continue;
      }
      const auto m = engine.mark();
      if (engine.place_second_class(cls) && engine.dfs()) {
        out.result = SearchResult::Witness;
        const auto colors = engine.state().colors();
        out.colors.emplace(colors.begin(), colors.end());
        break;
      }
      engine.rollback(m);
    }
  }
  out.stats = std::move(engine.stats);
  return out;
}

std::vector<std::vector<Edge>> second_classes_for(int n) {
  SearchConfig config;
  config.host = build_clique(n);
  config.t = n - 1;
  config.mode = SearchMode::NearFactorization;
  NearFactorizationEngine engine(config, false);
  std::vector<std::vector<Edge>> out;
  if (!engine.place_first_class()) return out;
  const auto group = first_class_stabilizer(n);
  for (auto& cls : engine.second_class_candidates()) {
    if (is_orbit_minimum(cls, group)) out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace broomlab::detail
