#include "broomlab/detect.hpp"

#include "broomlab/error.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace broomlab {

void BroomPattern::validate() const {
  if (ell < 2 || ell > t) {
    throw Error(ErrorCode::InvalidParameter,
                "broom needs 2 <= ell <= t, got t=" + std::to_string(t) +
                    " ell=" + std::to_string(ell));
  }
}

bool is_rainbow_broom(const ColoredGraph& cg, const BroomPattern& pat,
                      const BroomEmbedding& emb) {
  if (static_cast<int>(emb.handle.size()) != pat.ell + 1 ||
      static_cast<int>(emb.bristles.size()) != pat.t - pat.ell) {
    return false;
  }
  std::vector<int> vertices = emb.handle;
  vertices.insert(vertices.end(), emb.bristles.begin(), emb.bristles.end());
  for (int v : vertices) {
    if (v < 0 || v >= cg.vertex_count()) return false;
  }
  std::sort(vertices.begin(), vertices.end());
  if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) return false;

  std::set<int> seen;
  auto take = [&](int a, int b) {
    auto c = cg.color_of(a, b);
    return c && seen.insert(*c).second;
  };
  for (std::size_t i = 0; i + 1 < emb.handle.size(); ++i) {
    if (!take(emb.handle[i], emb.handle[i + 1])) return false;
  }
  for (int w : emb.bristles) {
    if (!take(emb.handle.back(), w)) return false;
  }
  return true;
}

namespace {

void require_proper(const ColoredGraph& cg, const char* op) {
  if (auto verdict = check_proper(cg); !verdict) {
    throw Error(ErrorCode::PreconditionViolation,
                std::string(op) + " requires a proper coloring (color " +
                    std::to_string(*verdict.color) + " repeats at vertex " +
                    std::to_string(*verdict.vertex) + ")");
  }
}

bool has_color(std::span<const int> colors, int c) {
  return std::find(colors.begin(), colors.end(), c) != colors.end();
}

}  // namespace

std::optional<BroomEmbedding> find_rainbow_broom(const ColoredGraph& cg,
                                                 const BroomPattern& pat) {
  pat.validate();
  require_proper(cg, "find_rainbow_broom");
  if (pat.ell > 3) return find_rainbow_broom_naive(cg, pat);
  if (static_cast<int>(cg.edge_count()) < pat.t) return std::nullopt;

  const auto& g = cg.graph();
  const int need = pat.t - pat.ell;
  std::optional<BroomEmbedding> found;
  std::vector<int> path_colors;
  for_each_path(g, pat.ell, [&](std::span<const int> path) {
    path_colors.clear();
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
      const int c = *cg.color_of(path[i], path[i + 1]);
      if (has_color(path_colors, c)) return true;
      path_colors.push_back(c);
    }
    const int end = path.back();
    // Under properness the bristle colors at `end` are pairwise distinct, so
    // it suffices that each avoids the handle colors.
    std::vector<int> bristles;
    const auto nbrs = g.neighbors(end);
    const auto inc = g.incident_edges(end);
    for (std::size_t i = 0; i < nbrs.size() && static_cast<int>(bristles.size()) < need; ++i) {
      if (std::find(path.begin(), path.end(), nbrs[i]) != path.end()) continue;
      if (has_color(path_colors, cg.color(inc[i]))) continue;
      bristles.push_back(nbrs[i]);
    }
    if (static_cast<int>(bristles.size()) < need) return true;
    found = BroomEmbedding{std::vector<int>(path.begin(), path.end()), std::move(bristles)};
    return false;
  });
  return found;
}

namespace {

class NaiveEmbedder {
 public:
  NaiveEmbedder(const ColoredGraph& cg, const BroomPattern& pat)
      : cg_(cg), pat_(pat), on_(static_cast<std::size_t>(cg.vertex_count()), 0) {}

  std::optional<BroomEmbedding> run() {
    for (int s = 0; s < cg_.vertex_count(); ++s) {
      handle_.assign(1, s);
      on_[s] = 1;
      const bool hit = grow_handle();
      on_[s] = 0;
      if (hit) return result_;
    }
    return std::nullopt;
  }

 private:
  bool grow_handle() {
    if (static_cast<int>(handle_.size()) == pat_.ell + 1) {
      bristles_.clear();
      return pick_bristles(0);
    }
    for (int w : cg_.graph().neighbors(handle_.back())) {
      if (on_[w]) continue;
      const int c = *cg_.color_of(handle_.back(), w);
      if (has_color(used_, c)) continue;
      on_[w] = 1;
      handle_.push_back(w);
      used_.push_back(c);
      const bool hit = grow_handle();
      used_.pop_back();
      handle_.pop_back();
      on_[w] = 0;
      if (hit) return true;
    }
    return false;
  }

  bool pick_bristles(std::size_t from) {
    if (static_cast<int>(bristles_.size()) == pat_.t - pat_.ell) {
      result_ = BroomEmbedding{handle_, bristles_};
      return true;
    }
    const int end = handle_.back();
    const auto nbrs = cg_.graph().neighbors(end);
    for (std::size_t i = from; i < nbrs.size(); ++i) {
      const int w = nbrs[i];
      if (on_[w]) continue;
      const int c = *cg_.color_of(end, w);
      if (has_color(used_, c)) continue;
      on_[w] = 1;
      bristles_.push_back(w);
      used_.push_back(c);
      const bool hit = pick_bristles(i + 1);
      used_.pop_back();
      bristles_.pop_back();
      on_[w] = 0;
      if (hit) return true;
    }
    return false;
  }

  const ColoredGraph& cg_;
  BroomPattern pat_;
  std::vector<char> on_;
  std::vector<int> handle_;
  std::vector<int> bristles_;
  std::vector<int> used_;
  BroomEmbedding result_;
};

}  // namespace

std::optional<BroomEmbedding> find_rainbow_broom_naive(const ColoredGraph& cg,
                                                       const BroomPattern& pat) {
  pat.validate();
  if (cg.vertex_count() > 16) {
    throw Error(ErrorCode::SizeGuard, "naive broom embedder limited to 16 vertices");
  }
  if (static_cast<int>(cg.edge_count()) < pat.t) return std::nullopt;
  return NaiveEmbedder(cg, pat).run();
}

std::optional<std::vector<int>> find_rainbow_path_from(const ColoredGraph& cg, int v,
                                                       int length) {
  require_proper(cg, "find_rainbow_path_from");
  const auto& g = cg.graph();
  if (v < 0 || v >= g.vertex_count()) {
    throw Error(ErrorCode::InvalidParameter, "start vertex out of range");
  }
  if (length < 1) throw Error(ErrorCode::InvalidParameter, "path length must be >= 1");

  std::vector<int> path{v};
  std::vector<int> used;
  std::vector<char> on(static_cast<std::size_t>(g.vertex_count()), 0);
  on[v] = 1;
  auto grow = [&](auto&& self) -> bool {
    if (static_cast<int>(path.size()) == length + 1) return true;
    const int end = path.back();
    const auto nbrs = g.neighbors(end);
    const auto inc = g.incident_edges(end);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const int c = cg.color(inc[i]);
      if (on[nbrs[i]] || has_color(used, c)) continue;
      on[nbrs[i]] = 1;
      path.push_back(nbrs[i]);
      used.push_back(c);
      if (self(self)) return true;
      used.pop_back();
      path.pop_back();
      on[nbrs[i]] = 0;
    }
    return false;
  };
  if (grow(grow)) return path;
  return std::nullopt;
}

std::string_view to_string(CycleClass c) noexcept {
  switch (c) {
    case CycleClass::Bichromatic: return "bichromatic";
    case CycleClass::Trichromatic: return "trichromatic";
    case CycleClass::RainbowAnchored: return "rainbow-anchored";
    case CycleClass::RainbowUnanchored: return "rainbow-unanchored";
  }
  return "unknown";
}

namespace {

std::array<int, 4> cycle_colors(const ColoredGraph& cg, const Cycle4& cycle) {
  std::array<int, 4> colors{};
  for (int i = 0; i < 4; ++i) {
    auto c = cg.color_of(cycle.v[i], cycle.v[(i + 1) % 4]);
    if (!c) {
      throw Error(ErrorCode::InvalidParameter,
                  "cycle edge " + std::to_string(cycle.v[i]) + "-" +
                      std::to_string(cycle.v[(i + 1) % 4]) + " not in host");
    }
    colors[i] = *c;
  }
  return colors;
}

bool vertex_has_color(const ColoredGraph& cg, int v, int color) {
  for (auto e : cg.graph().incident_edges(v)) {
    if (cg.color(e) == color) return true;
  }
  return false;
}

}  // namespace

CycleClass classify_c4(const ColoredGraph& cg, const Cycle4& cycle, int anchor) {
  const int pos = cycle.position(anchor);
  if (pos < 0) {
    throw Error(ErrorCode::InvalidParameter,
                "anchor " + std::to_string(anchor) + " not on cycle");
  }
  const auto colors = cycle_colors(cg, cycle);
  std::array<int, 4> sorted = colors;
  std::sort(sorted.begin(), sorted.end());
  const auto distinct = std::unique(sorted.begin(), sorted.end()) - sorted.begin();
  if (distinct <= 2) return CycleClass::Bichromatic;
  if (distinct == 3) return CycleClass::Trichromatic;
  // Edge i joins v[i] and v[i+1]; the two edges avoiding the anchor are
  // pos+1 and pos+2.
  const int far1 = colors[(pos + 1) % 4];
  const int far2 = colors[(pos + 2) % 4];
  return vertex_has_color(cg, anchor, far1) && vertex_has_color(cg, anchor, far2)
             ? CycleClass::RainbowAnchored
             : CycleClass::RainbowUnanchored;
}

GoodColoringVerdict check_good_coloring(const ColoredGraph& cg, int t) {
  GoodColoringVerdict verdict;
  verdict.within_palette = cg.color_count() <= t + 1;
  for_each_c4(cg.graph(), [&](const Cycle4& cycle) {
    if (verdict.trichromatic) return;
    if (classify_c4(cg, cycle, cycle.v[0]) == CycleClass::Trichromatic) {
      verdict.trichromatic = cycle;
    }
  });
  verdict.good = verdict.within_palette && !verdict.trichromatic;
  return verdict;
}

std::vector<std::vector<int>> SigmaMap::cycles() const {
  std::vector<std::vector<int>> out;
  if (!permutation) return out;
  std::set<int> done;
  for (const auto& [start, image] : map) {
    if (done.count(start)) continue;
    std::vector<int> cycle;
    int x = start;
    do {
      cycle.push_back(x);
      done.insert(x);
      x = map.at(x);
    } while (x != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::string SigmaMap::cycle_notation() const {
  if (map.empty()) return "()";
  std::ostringstream out;
  if (!permutation) {
    for (const auto& [a, b] : map) out << a << "->" << b << ' ';
    auto s = out.str();
    s.pop_back();
    return s;
  }
  for (const auto& cycle : cycles()) {
    out << '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) out << (i ? " " : "") << cycle[i];
    out << ')';
  }
  return out.str();
}

SigmaMap extract_sigma(const ColoredGraph& cg, int u, int v) {
  require_proper(cg, "extract_sigma");
  const auto& g = cg.graph();
  if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count() || u == v) {
    throw Error(ErrorCode::InvalidParameter, "extract_sigma needs two distinct vertices");
  }
  SigmaMap sigma;
  sigma.u = u;
  sigma.v = v;
  const auto common = (g.neighbor_set(u) & g.neighbor_set(v)).members();
  std::set<int> image;
  for (int w : common) {
    const int from = *cg.color_of(u, w);
    const int to = *cg.color_of(v, w);
    sigma.map.emplace(from, to);
    image.insert(to);
  }
  std::set<int> domain;
  for (const auto& [a, b] : sigma.map) domain.insert(a);
  sigma.permutation = domain == image;

  bool fixed_point = false;
  bool squares_to_identity = sigma.permutation;
  for (const auto& [a, b] : sigma.map) {
    if (a == b) fixed_point = true;
    if (sigma.permutation && sigma.map.at(b) != a) squares_to_identity = false;
  }
  sigma.fixed_point_free_involution =
      sigma.permutation && !fixed_point && squares_to_identity;

  std::set<int> palette(cg.colors().begin(), cg.colors().end());
  if (auto uv = cg.color_of(u, v)) palette.erase(*uv);
  sigma.derangement_of_palette = sigma.permutation && !fixed_point && domain == palette;
  return sigma;
}

DegreeStructureReport degree_structure_report(const ColoredGraph& cg, int t) {
  const auto& g = cg.graph();
  if (g.vertex_count() > t + 2) {
    throw Error(ErrorCode::InvalidParameter,
                "degree structure report needs at most t+2 = " + std::to_string(t + 2) +
                    " vertices, got " + std::to_string(g.vertex_count()));
  }
  DegreeStructureReport report;
  report.t = t;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    if (d == t + 1) {
      ++report.high;
    } else if (d == t) {
      ++report.middle;
    } else {
      ++report.low;
    }
  }
  report.structure_holds = report.high <= 2 && !(report.high == 2 && report.middle > 0);
  return report;
}

C4Histogram c4_histogram(const ColoredGraph& cg) {
  C4Histogram h;
  for_each_c4(cg.graph(), [&](const Cycle4& cycle) {
    for (int anchor : cycle.v) {
      switch (classify_c4(cg, cycle, anchor)) {
        case CycleClass::Bichromatic: ++h.bichromatic; break;
        case CycleClass::Trichromatic: ++h.trichromatic; break;
        case CycleClass::RainbowAnchored: ++h.rainbow_anchored; break;
        case CycleClass::RainbowUnanchored: ++h.rainbow_unanchored; break;
      }
    }
  });
  return h;
}

bool c4_anchor_qualifies(const Graph& g, int anchor, const Cycle4& cycle, int t) {
  const int pos = cycle.position(anchor);
  if (pos < 0) throw Error(ErrorCode::InvalidParameter, "anchor not on cycle");
  const int opposite = cycle.v[(pos + 2) % 4];
  const int outside = g.degree(anchor) - 2 - (g.has_edge(anchor, opposite) ? 1 : 0);
  return outside >= t - 2;
}

bool host_qualifies_for_c4(const Graph& g, int t) {
  bool ok = true;
  for_each_c4(g, [&](const Cycle4& cycle) {
    for (int anchor : cycle.v) {
      if (ok && !c4_anchor_qualifies(g, anchor, cycle, t)) ok = false;
    }
  });
  return ok;
}

}  // namespace broomlab
