#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace oracle {

namespace {

int color(const ColoredGraph& cg, int u, int v) {
  auto c = cg.color_of(u, v);
  return c ? *c : 0;
}

}  // namespace

bool proper(const ColoredGraph& cg) {
  const int n = cg.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::set<int> seen;
    for (int w = 0; w < n; ++w) {
      const int c = color(cg, v, w);
      if (c && !seen.insert(c).second) return false;
    }
  }
  return true;
}

std::optional<BroomEmbedding> rainbow_broom(const ColoredGraph& cg, int t, int ell) {
  const int n = cg.vertex_count();
  const int k = t - ell;
  std::vector<int> handle;
  std::optional<BroomEmbedding> best;

  std::function<void()> extend = [&] {
    if (best) return;
    if (static_cast<int>(handle.size()) == ell + 1) {
      std::set<int> used;
      for (int i = 0; i < ell; ++i) used.insert(color(cg, handle[i], handle[i + 1]));
      if (static_cast<int>(used.size()) != ell) return;
      const int end = handle.back();
      std::vector<int> cand;
      for (int w = 0; w < n; ++w) {
        if (color(cg, end, w) && std::find(handle.begin(), handle.end(), w) == handle.end()) {
          cand.push_back(w);
        }
      }
      // Bristle subsets in lexicographic order.
      std::vector<int> pick;
      std::function<bool(std::size_t)> choose = [&](std::size_t from) {
        if (static_cast<int>(pick.size()) == k) {
          std::set<int> all = used;
          for (int w : pick) all.insert(color(cg, end, w));
          return static_cast<int>(all.size()) == t;
        }
        for (std::size_t i = from; i < cand.size(); ++i) {
          pick.push_back(cand[i]);
          if (choose(i + 1)) return true;
          pick.pop_back();
        }
        return false;
      };
      if (choose(0)) best = BroomEmbedding{handle, pick};
      return;
    }
    for (int w = 0; w < n && !best; ++w) {
      if (std::find(handle.begin(), handle.end(), w) != handle.end()) continue;
      if (!handle.empty() && !color(cg, handle.back(), w)) continue;
      handle.push_back(w);
      extend();
      handle.pop_back();
    }
  };
  extend();
  return best;
}

bool for_each_proper_coloring(const Graph& g, int cap,
                              const std::function<bool(const ColoredGraph&)>& visit) {
  const int m = static_cast<int>(g.edge_count());
  std::vector<int> colors(m, 0);
  std::function<bool(int, int)> go = [&](int left, int used) {
    if (left < 0) return visit(ColoredGraph(g, colors));
    const auto [u, v] = g.edge_at(left);
    for (int c = 1; c <= std::min(used + 1, cap); ++c) {
      bool clash = false;
      for (int f = left + 1; f < m && !clash; ++f) {
        const auto [a, b] = g.edge_at(f);
        if (colors[f] == c && (a == u || a == v || b == u || b == v)) clash = true;
      }
      if (clash) continue;
      colors[left] = c;
      if (!go(left - 1, std::max(used, c))) return false;
      colors[left] = 0;
    }
    return true;
  };
  return go(m - 1, 0);
}

bool rainbow_free_coloring_exists(const Graph& g, int t, int cap) {
  bool found = false;
  for_each_proper_coloring(g, cap, [&](const ColoredGraph& cg) {
    if (!rainbow_broom(cg, t, 3)) found = true;
    return !found;
  });
  return found;
}

std::uint64_t one_factorization_count(int k) {
  // All perfect matchings as edge bitmasks over pair ids u * k + v.
  std::vector<std::vector<std::pair<int, int>>> matchings;
  std::vector<std::pair<int, int>> cur;
  std::vector<char> used(k, 0);
  std::function<void()> build = [&] {
    int u = 0;
    while (u < k && used[u]) ++u;
    if (u == k) {
      matchings.push_back(cur);
      return;
    }
    used[u] = 1;
    for (int w = u + 1; w < k; ++w) {
      if (used[w]) continue;
      used[w] = 1;
      cur.emplace_back(u, w);
      build();
      cur.pop_back();
      used[w] = 0;
    }
    used[u] = 0;
  };
  build();
  // Exact cover: choose matchings in increasing list order.
  std::vector<std::vector<char>> taken(k, std::vector<char>(k, 0));
  std::uint64_t count = 0;
  std::function<void(std::size_t, int)> cover = [&](std::size_t from, int chosen) {
    if (chosen == k - 1) {
      ++count;
      return;
    }
    for (std::size_t i = from; i < matchings.size(); ++i) {
      bool ok = true;
      for (auto [a, b] : matchings[i]) ok = ok && !taken[a][b];
      if (!ok) continue;
      for (auto [a, b] : matchings[i]) taken[a][b] = 1;
      cover(i + 1, chosen + 1);
      for (auto [a, b] : matchings[i]) taken[a][b] = 0;
    }
  };
  cover(0, 0);
  return count;
}

C4Counts c4_scan(const ColoredGraph& cg) {
  const int n = cg.vertex_count();
  C4Counts out;
  std::vector<int> q(4);
  for (q[0] = 0; q[0] < n; ++q[0])
    for (q[1] = q[0] + 1; q[1] < n; ++q[1])
      for (q[2] = q[1] + 1; q[2] < n; ++q[2])
        for (q[3] = q[2] + 1; q[3] < n; ++q[3]) {
          const int orders[3][4] = {{q[0], q[1], q[2], q[3]},
                                    {q[0], q[1], q[3], q[2]},
                                    {q[0], q[2], q[1], q[3]}};
          for (const auto& o : orders) {
            int c[4];
            bool cycle = true;
            for (int i = 0; i < 4; ++i) {
              c[i] = color(cg, o[i], o[(i + 1) % 4]);
              cycle = cycle && c[i];
            }
            if (!cycle) continue;
            const std::set<int> distinct(c, c + 4);
            for (int i = 0; i < 4; ++i) {
              if (distinct.size() == 2) {
                ++out.kinds[0];
              } else if (distinct.size() == 3) {
                ++out.kinds[1];
              } else {
                // Far edges from o[i]: o[i+1]o[i+2] and o[i+2]o[i+3].
                const int f1 = c[(i + 1) % 4];
                const int f2 = c[(i + 2) % 4];
                bool has1 = false, has2 = false;
                for (int w = 0; w < n; ++w) {
                  has1 = has1 || color(cg, o[i], w) == f1;
                  has2 = has2 || color(cg, o[i], w) == f2;
                }
                ++out.kinds[has1 && has2 ? 2 : 3];
              }
            }
          }
        }
  return out;
}

ColoredGraph random_proper_coloring(const Graph& g, int cap, std::mt19937_64& rng) {
  const int m = static_cast<int>(g.edge_count());
  for (int attempt = 1;; ++attempt) {
    if (attempt % 50 == 0) ++cap;  // cap may be below the chromatic index
    std::vector<int> order(m);
    for (int i = 0; i < m; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<int> colors(m, 0);
    bool ok = true;
    for (int e : order) {
      const auto [u, v] = g.edge_at(e);
      std::vector<int> free;
      for (int c = 1; c <= cap; ++c) {
        bool clash = false;
        for (int f = 0; f < m && !clash; ++f) {
          const auto [a, b] = g.edge_at(f);
          if (colors[f] == c && (a == u || a == v || b == u || b == v)) clash = true;
        }
        if (!clash) free.push_back(c);
      }
      if (free.empty()) {
        ok = false;
        break;
      }
      colors[e] = free[std::uniform_int_distribution<std::size_t>(0, free.size() - 1)(rng)];
    }
    if (ok) return ColoredGraph(g, colors);
  }
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<broomlab::Edge> edges;
  std::bernoulli_distribution coin(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.push_back({u, v});
  return Graph::from_edges(n, edges);
}

}  // namespace oracle
