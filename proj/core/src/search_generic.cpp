#include "engines.hpp"
#include "search_state.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <random>
#include <thread>

namespace broomlab::detail {

namespace {

constexpr int kAuditMaxVertices = 7;
constexpr std::uint64_t kAuditBudget = 2'000'000;

using Prefix = std::vector<std::pair<int, int>>;

class GenericEngine {
 public:
  GenericEngine(const SearchConfig& config, const HostIndex& host, int cap)
      : cfg_(config), h_(host), state_(host, cap), rng_(config.seed) {}

  SearchStats stats;
  const PartialColoring& state() const { return state_; }

  void replay(const Prefix& prefix) {
    for (auto [e, c] : prefix) state_.assign(e, c);
  }

  bool dfs() {
    if (state_.assigned() == h_.m) return leaf_is_witness(cfg_.host, state_, cfg_.t);
    const int e = select_edge();
    const int top = std::min(state_.used() + 1, state_.cap());
    for (int c = 1; c <= top; ++c) {
      if (!state_.allowed(e, c)) continue;
      if (!enter(e, c)) continue;
      if (dfs()) return true;
      state_.unassign(e);
    }
    return false;
  }

  // Records every surviving state at the given depth instead of descending.
  void collect(int depth, std::vector<Prefix>& out, Prefix& path) {
    if (state_.assigned() == depth || state_.assigned() == h_.m) {
      out.push_back(path);
      return;
    }
    const int e = select_edge();
    const int top = std::min(state_.used() + 1, state_.cap());
    for (int c = 1; c <= top; ++c) {
      if (!state_.allowed(e, c)) continue;
      if (!enter(e, c)) continue;
      path.emplace_back(e, c);
      collect(depth, out, path);
      path.pop_back();
      state_.unassign(e);
    }
  }

 private:
  // Assigns and applies the rules; false (with the assignment undone) on a prune.
  bool enter(int e, int c) {
    state_.assign(e, c);
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, state_.assigned());
    if (cfg_.on_node) cfg_.on_node(state_.colors());
    const Violation v = violation(e);
    if (v == Violation::None) return true;
    ++stats.pruned[rule_key(v)];
    maybe_audit();
    state_.unassign(e);
    return false;
  }

  Violation violation(int e) const {
    if (cfg_.rules.c4 && generic_c4_violated(h_, state_, e)) return Violation::C4;
    if (cfg_.rules.broom_capacity && capacity_violated(h_, state_, e, cfg_.t, no_labels_)) {
      return Violation::Capacity;
    }
    return Violation::None;
  }

  int select_edge() const {
    if (cfg_.order == BranchOrder::Canonical) {
      for (int e = 0; e < h_.m; ++e) {
        if (!state_.colored(e)) return e;
      }
      return -1;
    }
    const int top = std::min(state_.used() + 1, state_.cap());
    int best = -1;
    int best_options = std::numeric_limits<int>::max();
    for (int e = 0; e < h_.m; ++e) {
      if (state_.colored(e)) continue;
      int options = 0;
      for (int c = 1; c <= top; ++c) options += state_.allowed(e, c);
      if (options < best_options) {
        best_options = options;
        best = e;
        if (options == 0) break;
      }
    }
    return best;
  }

  void maybe_audit() {
    if (cfg_.audit_rate <= 0.0 || h_.n > kAuditMaxVertices) return;
    if (std::uniform_real_distribution<double>(0.0, 1.0)(rng_) >= cfg_.audit_rate) return;
    std::uint64_t budget = kAuditBudget;
    const int found = audit_dfs(budget);
    if (found < 0) return;  // budget exhausted: inconclusive, not counted
    ++stats.audits;
    if (found > 0) ++stats.audit_failures;
  }

  // Rule-free expansion of the current state: 1 witness, 0 none, -1 budget.
  int audit_dfs(std::uint64_t& budget) {
    if (state_.assigned() == h_.m) return leaf_is_witness(cfg_.host, state_, cfg_.t) ? 1 : 0;
    if (budget == 0) return -1;
    --budget;
    const int e = select_edge();
    const int top = std::min(state_.used() + 1, state_.cap());
    int verdict = 0;
    for (int c = 1; c <= top && verdict == 0; ++c) {
      if (!state_.allowed(e, c)) continue;
      state_.assign(e, c);
      verdict = audit_dfs(budget);
      state_.unassign(e);
    }
    return verdict;
  }

  const SearchConfig& cfg_;
  const HostIndex& h_;
  PartialColoring state_;
  std::mt19937_64 rng_;
  const Labels no_labels_;
};

Outcome run_sequential(const SearchConfig& config, const HostIndex& host, int cap) {
  GenericEngine engine(config, host, cap);
  Outcome out;
  if (engine.dfs()) {
    out.result = SearchResult::Witness;
    const auto colors = engine.state().colors();
    out.colors.emplace(colors.begin(), colors.end());
  }
  out.stats = std::move(engine.stats);
  return out;
}

// Witness hunting over disjoint branch prefixes. Prefixes are handed out in
// DFS order; a prefix above the best one holding a witness is skipped, so the
// reported witness is the least one even though the statistics vary.
Outcome run_parallel(const SearchConfig& config, const HostIndex& host, int cap) {
  const std::size_t wanted = static_cast<std::size_t>(config.workers) * 8;
  std::vector<Prefix> prefixes;
  SearchStats split_stats;
  for (int depth = 1;; ++depth) {
    GenericEngine splitter(config, host, cap);
    Prefix path;
    prefixes.clear();
    splitter.collect(depth, prefixes, path);
    split_stats = splitter.stats;
    if (prefixes.size() >= wanted || depth >= host.m || prefixes.empty()) break;
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> best{kNone};
  std::vector<std::vector<int>> found(prefixes.size());
  std::mutex merge_lock;
  SearchStats total = split_stats;

  const auto worker = [&] {
    SearchStats mine;
    for (std::size_t i = next++; i < prefixes.size(); i = next++) {
      if (i > best.load()) continue;
      GenericEngine engine(config, host, cap);
      engine.replay(prefixes[i]);
      const bool hit = engine.dfs();
      mine.merge(engine.stats);
      if (!hit) continue;
      found[i].assign(engine.state().colors().begin(), engine.state().colors().end());
      std::size_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
    std::lock_guard lock(merge_lock);
    total.merge(mine);
  };
  std::vector<std::thread> pool;
  for (int w = 0; w < config.workers; ++w) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  Outcome out;
  out.deterministic = false;
  out.stats = std::move(total);
  if (best.load() != kNone) {
    out.result = SearchResult::Witness;
    out.colors = std::move(found[best.load()]);
  } else {
    out.result = SearchResult::NotFound;
  }
  return out;
}

}  // namespace

Outcome run_generic(const SearchConfig& config, int cap) {
  const HostIndex host(config.host);
  if (config.deterministic || config.workers <= 1) return run_sequential(config, host, cap);
  return run_parallel(config, host, cap);
}

}  // namespace broomlab::detail
