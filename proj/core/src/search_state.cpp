#include "search_state.hpp"

#include "broomlab/detect.hpp"

#include <bit>

namespace broomlab::detail {

HostIndex::HostIndex(const Graph& g) : n(g.vertex_count()), m(static_cast<int>(g.edge_count())) {
  edges.assign(g.edges().begin(), g.edges().end());
  eid.assign(static_cast<std::size_t>(n) * n, -1);
  for (int i = 0; i < m; ++i) {
    eid[edges[i].u * n + edges[i].v] = i;
    eid[edges[i].v * n + edges[i].u] = i;
  }
  nbrs.resize(n);
  deg.resize(n);
  for (int v = 0; v < n; ++v) {
    nbrs[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    deg[v] = g.degree(v);
  }
  cycles_of_edge.resize(m);
  cycles_of_vertex.resize(n);
  for_each_c4(g, [&](const Cycle4& c) {
    Cycle cy{};
    cy.v = c.v;
    for (int i = 0; i < 4; ++i) cy.e[i] = id(c.v[i], c.v[(i + 1) % 4]);
    const int idx = static_cast<int>(cycles.size());
    cycles.push_back(cy);
    for (int i = 0; i < 4; ++i) {
      cycles_of_edge[cy.e[i]].push_back(idx);
      cycles_of_vertex[cy.v[i]].push_back(idx);
    }
  });
}

PartialColoring::PartialColoring(const HostIndex& host, int cap)
    : host_(&host), cap_(cap), stride_(cap + 1) {
  colors_.assign(host.m, 0);
  mask_.assign(host.n, 0);
  along_.assign(static_cast<std::size_t>(host.n) * stride_, -1);
  cdeg_.assign(host.n, 0);
  class_size_.assign(stride_, 0);
}

bool PartialColoring::allowed(int e, int c) const {
  const Edge& ed = host_->edges[e];
  return colors_[e] == 0 && c >= 1 && c <= cap_ && !((mask_[ed.u] | mask_[ed.v]) >> c & 1U);
}

void PartialColoring::assign(int e, int c) {
  const Edge& ed = host_->edges[e];
  colors_[e] = c;
  mask_[ed.u] |= std::uint64_t{1} << c;
  mask_[ed.v] |= std::uint64_t{1} << c;
  along_[ed.u * stride_ + c] = ed.v;
  along_[ed.v * stride_ + c] = ed.u;
  ++cdeg_[ed.u];
  ++cdeg_[ed.v];
  if (class_size_[c]++ == 0 && c > used_) used_ = c;
  ++assigned_;
}

void PartialColoring::unassign(int e) {
  const Edge& ed = host_->edges[e];
  const int c = colors_[e];
  colors_[e] = 0;
  mask_[ed.u] &= ~(std::uint64_t{1} << c);
  mask_[ed.v] &= ~(std::uint64_t{1} << c);
  along_[ed.u * stride_ + c] = -1;
  along_[ed.v * stride_ + c] = -1;
  --cdeg_[ed.u];
  --cdeg_[ed.v];
  if (--class_size_[c] == 0) {
    while (used_ > 0 && class_size_[used_] == 0) --used_;
  }
  --assigned_;
}

const char* rule_key(Violation v) {
  switch (v) {
    case Violation::C4: return "c4";
    case Violation::Capacity: return "broom-capacity";
    case Violation::LemmaP4: return "lemma-certified";
    case Violation::None: break;
  }
  return "none";
}

namespace {

// Number of distinct colors on a fully colored cycle, 0 if not fully colored.
int cycle_colors(const HostIndex::Cycle& cy, const PartialColoring& s) {
  std::uint64_t seen = 0;
  for (int e : cy.e) {
    if (!s.colored(e)) return 0;
    seen |= std::uint64_t{1} << s.color(e);
  }
  return std::popcount(seen);
}

bool anchor_lacks(const HostIndex& h, const HostIndex::Cycle& cy, int i,
                  const PartialColoring& s) {
  const int a = cy.v[i];
  if (s.colored_degree(a) != h.deg[a]) return false;
  const int far1 = s.color(cy.e[(i + 1) % 4]);
  const int far2 = s.color(cy.e[(i + 2) % 4]);
  return !s.has(a, far1) || !s.has(a, far2);
}

}  // namespace

bool generic_c4_violated(const HostIndex& h, const PartialColoring& s, int e) {
  for (int ci : h.cycles_of_edge[e]) {
    const auto& cy = h.cycles[ci];
    const int k = cycle_colors(cy, s);
    if (k == 3) return true;
    if (k == 4) {
      for (int i = 0; i < 4; ++i) {
        if (anchor_lacks(h, cy, i, s)) return true;
      }
    }
  }
  // An endpoint that just became fully colored may now fail as an anchor of a
  // rainbow cycle not through e.
  for (int a : {h.edges[e].u, h.edges[e].v}) {
    if (s.colored_degree(a) != h.deg[a]) continue;
    for (int ci : h.cycles_of_vertex[a]) {
      const auto& cy = h.cycles[ci];
      if (cycle_colors(cy, s) != 4) continue;
      const int i = cy.v[0] == a ? 0 : cy.v[1] == a ? 1 : cy.v[2] == a ? 2 : 3;
      if (anchor_lacks(h, cy, i, s)) return true;
    }
  }
  return false;
}

bool labeled_c4_violated(const HostIndex& h, const PartialColoring& s, int e,
                         const Labels& labels) {
  for (int ci : h.cycles_of_edge[e]) {
    const auto& cy = h.cycles[ci];
    if (cycle_colors(cy, s) != 3) continue;
    for (int i = 0; i < 4; ++i) {
      const int lab = labels[cy.v[i]];
      if (s.color(cy.e[(i + 1) % 4]) == lab || s.color(cy.e[(i + 2) % 4]) == lab) return true;
    }
  }
  return false;
}

namespace {

struct CapacityCheck {
  const HostIndex& h;
  const PartialColoring& s;
  int need;
  const Labels& labels;

  bool worth(int a) const {
    return !labels.empty() || s.colored_degree(a) - 1 >= need;
  }

  int edge_color(int u, int v) const {
    const int e = h.id(u, v);
    return e < 0 ? 0 : s.color(e);
  }

  // Handle x-y-z-a, all three edges colored.
  bool fires(int x, int y, int z, int a) const {
    const int c1 = edge_color(x, y);
    const int c2 = edge_color(y, z);
    const int c3 = edge_color(z, a);
    if (c1 == c3) return false;  // c1 != c2 and c2 != c3 by properness
    const int cax = edge_color(a, x);
    const int cay = edge_color(a, y);
    int count = s.colored_degree(a) - 1 - (cax != 0) - (cay != 0);
    for (int p : {c1, c2}) {
      const int w = s.along(a, p);
      if (w >= 0 && w != x && w != y) --count;
    }
    if (count >= need) return true;
    if (labels.empty()) return false;
    // Every color but a's label ends up at a exactly once; pessimistically a
    // handle color not yet seen on ax or ay lands on a bristle candidate.
    int bad = 0;
    for (int p : {c1, c2}) {
      if (p != labels[a] && cax != p && cay != p) ++bad;
    }
    return h.deg[a] - 3 - bad >= need;
  }

  bool colored(int u, int v) const { return edge_color(u, v) != 0; }

  bool paths_to(int a) const {
    if (!worth(a)) return false;
    for (int z : h.nbrs[a]) {
      if (!colored(z, a)) continue;
      for (int y : h.nbrs[z]) {
        if (y == a || !colored(y, z)) continue;
        for (int x : h.nbrs[y]) {
          if (x == a || x == z || !colored(x, y)) continue;
          if (fires(x, y, z, a)) return true;
        }
      }
    }
    return false;
  }

  // e = yz.
  bool middle(int y, int z) const {
    for (int a : h.nbrs[z]) {
      if (a == y || !colored(z, a) || !worth(a)) continue;
      for (int x : h.nbrs[y]) {
        if (x == z || x == a || !colored(x, y)) continue;
        if (fires(x, y, z, a)) return true;
      }
    }
    return false;
  }

  // e = xy.
  bool first(int x, int y) const {
    for (int z : h.nbrs[y]) {
      if (z == x || !colored(y, z)) continue;
      for (int a : h.nbrs[z]) {
        if (a == x || a == y || !colored(z, a) || !worth(a)) continue;
        if (fires(x, y, z, a)) return true;
      }
    }
    return false;
  }
};

}  // namespace

bool capacity_violated(const HostIndex& h, const PartialColoring& s, int e, int t,
                       const Labels& labels) {
  const CapacityCheck check{h, s, t - 3, labels};
  const int p = h.edges[e].u;
  const int q = h.edges[e].v;
  return check.paths_to(p) || check.paths_to(q) || check.middle(p, q) ||
         check.middle(q, p) || check.first(p, q) || check.first(q, p);
}

bool bichromatic_p4_through(const HostIndex& h, const PartialColoring& s, int e) {
  const int p = h.edges[e].u;
  const int q = h.edges[e].v;
  const int c = s.color(e);
  std::uint64_t others = (s.mask(p) | s.mask(q)) & ~(std::uint64_t{1} << c);
  while (others) {
    const int b = std::countr_zero(others);
    others &= others - 1;
    int vertices = 2;
    bool closed = false;
    // Walk away from q, then away from p; each step alternates b and c.
    for (auto [start, stop] : {std::pair{q, p}, std::pair{p, q}}) {
      int cur = start;
      int want = b;
      while (true) {
        const int w = s.along(cur, want);
        if (w < 0) break;
        if (w == stop) {
          closed = true;
          break;
        }
        ++vertices;
        cur = w;
        want = want == b ? c : b;
      }
      if (closed) break;
    }
    if (closed ? vertices >= 6 : vertices >= 5) return true;
  }
  return false;
}

bool leaf_is_witness(const Graph& host, const PartialColoring& s, int t) {
  const ColoredGraph cg(host, std::vector<int>(s.colors().begin(), s.colors().end()));
  return !find_rainbow_broom(cg, {t, 3}).has_value();
}

}  // namespace broomlab::detail
