#include "broomlab/coloring.hpp"

#include "broomlab/error.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

namespace broomlab {

ColoredGraph::ColoredGraph(Graph graph, std::vector<int> colors)
    : graph_(std::move(graph)), colors_(std::move(colors)) {
  if (colors_.size() != graph_.edge_count()) {
    throw Error(ErrorCode::InvalidParameter,
                "coloring has " + std::to_string(colors_.size()) +
                    " entries for " + std::to_string(graph_.edge_count()) + " edges");
  }
  std::vector<int> seen;
  for (int c : colors_) {
    if (c < 1) {
      throw Error(ErrorCode::InvalidParameter, "color ids must be positive");
    }
    max_color_ = std::max(max_color_, c);
  }
  seen.assign(static_cast<std::size_t>(max_color_) + 1, 0);
  for (int c : colors_) {
    if (!seen[c]) {
      seen[c] = 1;
      ++color_count_;
    }
  }
}

std::optional<int> ColoredGraph::color_of(int u, int v) const {
  auto idx = graph_.index_of(u, v);
  if (!idx) return std::nullopt;
  return colors_[*idx];
}

bool ColoredGraph::is_canonical() const {
  int next = 1;
  for (int c : colors_) {
    if (c > next) return false;
    if (c == next) ++next;
  }
  return true;
}

ProperVerdict check_proper(const ColoredGraph& cg) {
  const auto& g = cg.graph();
  std::vector<int> stamp(static_cast<std::size_t>(cg.max_color()) + 1, -1);
  for (int v = 0; v < g.vertex_count(); ++v) {
    for (auto e : g.incident_edges(v)) {
      const int c = cg.color(e);
      if (stamp[c] == v) return {false, v, c};
      stamp[c] = v;
    }
  }
  return {};
}

ColoredGraph canonicalize_colors(const ColoredGraph& cg) {
  std::unordered_map<int, int> rename;
  std::vector<int> out;
  out.reserve(cg.edge_count());
  for (int c : cg.colors()) {
    auto [it, fresh] = rename.try_emplace(c, static_cast<int>(rename.size()) + 1);
    out.push_back(it->second);
  }
  return ColoredGraph(cg.graph(), std::move(out));
}

ColoredGraph round_robin_factorize(int k) {
  if (k < 2 || k % 2 != 0) {
    throw Error(ErrorCode::InvalidParameter,
                "round-robin factorization needs an even order >= 2, got " +
                    std::to_string(k));
  }
  auto g = build_clique(k);
  std::vector<int> colors(g.edge_count(), 0);
  const int rotating = k - 1;
  for (int round = 0; round < rotating; ++round) {
    colors[*g.index_of(round, k - 1)] = round + 1;
    for (int i = 1; i < k / 2; ++i) {
      const int a = (round + i) % rotating;
      const int b = (round - i + rotating) % rotating;
      colors[*g.index_of(a, b)] = round + 1;
    }
  }
  return canonicalize_colors(ColoredGraph(std::move(g), std::move(colors)));
}

std::vector<int> color_degree_profile(const ColoredGraph& cg, int v) {
  std::vector<int> out;
  for (auto e : cg.graph().incident_edges(v)) out.push_back(cg.color(e));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ColorClassView color_classes(const ColoredGraph& cg, int palette) {
  const auto& g = cg.graph();
  const int n = g.vertex_count();
  ColorClassView view;
  view.palette = palette > 0 ? palette : cg.max_color();
  if (cg.max_color() > view.palette) {
    throw Error(ErrorCode::InvalidParameter, "coloring uses colors beyond the palette");
  }
  view.classes.resize(static_cast<std::size_t>(view.palette));
  for (std::size_t e = 0; e < cg.edge_count(); ++e) {
    view.classes[cg.color(e) - 1].push_back(e);
  }

  // touches[c-1][v]: number of edges of color c at v
  std::vector<std::vector<int>> touches(static_cast<std::size_t>(view.palette),
                                        std::vector<int>(static_cast<std::size_t>(n), 0));
  for (int c = 1; c <= view.palette; ++c) {
    for (auto e : view.classes[c - 1]) {
      const auto [u, v] = g.edge_at(e);
      const int at_u = ++touches[c - 1][u];
      const int at_v = ++touches[c - 1][v];
      if (at_u > 1 || at_v > 1) view.all_matchings = false;
    }
  }

  view.missing.assign(static_cast<std::size_t>(n), std::nullopt);
  for (int v = 0; v < n; ++v) {
    int absent = 0;
    int which = 0;
    for (int c = 1; c <= view.palette; ++c) {
      if (!touches[c - 1][v]) {
        ++absent;
        which = c;
      }
    }
    if (absent == 1) view.missing[v] = which;
  }

  if (!view.all_matchings || n == 0) return view;
  const auto class_size = [&](int c) { return view.classes[c - 1].size(); };
  if (n % 2 == 0 && view.palette == n - 1) {
    view.one_factorization = true;
    for (int c = 1; c <= view.palette; ++c) {
      if (class_size(c) != static_cast<std::size_t>(n / 2)) view.one_factorization = false;
    }
  }
  if (n % 2 == 1 && view.palette == n) {
    bool ok = true;
    std::vector<int> missed_by(static_cast<std::size_t>(n), 0);
    for (int c = 1; c <= view.palette && ok; ++c) {
      if (class_size(c) != static_cast<std::size_t>(n / 2)) ok = false;
      for (int v = 0; v < n && ok; ++v) {
        if (!touches[c - 1][v] && missed_by[v]++ > 0) ok = false;
      }
    }
    view.near_one_factorization = ok;
  }
  return view;
}

ColoredGraph permute_vertices(const ColoredGraph& cg, std::span<const int> perm) {
  const auto& g = cg.graph();
  if (static_cast<int>(perm.size()) != g.vertex_count()) {
    throw Error(ErrorCode::InvalidParameter, "permutation size mismatch");
  }
  std::vector<std::pair<Edge, int>> items;
  items.reserve(cg.edge_count());
  for (std::size_t e = 0; e < cg.edge_count(); ++e) {
    Edge moved{perm[g.edge_at(e).u], perm[g.edge_at(e).v]};
    if (moved.u > moved.v) std::swap(moved.u, moved.v);
    items.emplace_back(moved, cg.color(e));
  }
  std::sort(items.begin(), items.end());
  std::vector<Edge> edges;
  std::vector<int> colors;
  for (const auto& [e, c] : items) {
    edges.push_back(e);
    colors.push_back(c);
  }
  return ColoredGraph(Graph::from_edges(g.vertex_count(), std::move(edges)), std::move(colors));
}

}  // namespace broomlab
