#include "broomlab/graph.hpp"

#include "broomlab/error.hpp"

#include <algorithm>
#include <string>

namespace broomlab {

Graph::Graph(int n) : n_(n) {
  if (n < 0) {
    throw Error(ErrorCode::InvalidParameter, "negative vertex count");
  }
  neighbors_.resize(static_cast<std::size_t>(n));
  incident_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, std::vector<Edge> edges) {
  Graph g(n);
  for (auto& e : edges) {
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw Error(ErrorCode::InvalidParameter,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                      ") outside vertex range");
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::InvalidParameter,
                  "self-loop at vertex " + std::to_string(e.u));
    }
  }
  std::sort(edges.begin(), edges.end());
  if (auto dup = std::adjacent_find(edges.begin(), edges.end()); dup != edges.end()) {
    throw Error(ErrorCode::InvalidParameter,
                "duplicate edge (" + std::to_string(dup->u) + "," +
                    std::to_string(dup->v) + ")");
  }
  g.edges_ = std::move(edges);
  // Lexicographic edge order leaves every neighbor list ascending: for
  // vertex x the pairs (u,x), u < x, precede the pairs (x,w), x < w.
  for (std::size_t i = 0; i < g.edges_.size(); ++i) {
    const auto [u, v] = g.edges_[i];
    g.neighbors_[u].push_back(v);
    g.incident_[u].push_back(i);
    g.neighbors_[v].push_back(u);
    g.incident_[v].push_back(i);
  }
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw Error(ErrorCode::InvalidParameter,
                "vertex " + std::to_string(v) + " not in graph of order " +
                    std::to_string(n_));
  }
}

std::optional<std::size_t> Graph::index_of(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return std::nullopt;
  const auto& nb = neighbors_[u];
  auto it = std::lower_bound(nb.begin(), nb.end(), v);
  if (it == nb.end() || *it != v) return std::nullopt;
  return incident_[u][static_cast<std::size_t>(it - nb.begin())];
}

std::span<const int> Graph::neighbors(int v) const {
  check_vertex(v);
  return neighbors_[v];
}

std::span<const std::size_t> Graph::incident_edges(int v) const {
  check_vertex(v);
  return incident_[v];
}

VertexSet Graph::neighbor_set(int v) const {
  VertexSet s(n_);
  for (int w : neighbors(v)) s.insert(w);
  return s;
}

VertexSet Graph::closed_neighbor_set(int v) const {
  auto s = neighbor_set(v);
  s.insert(v);
  return s;
}

int Graph::min_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) {
    best = v == 0 ? degree(v) : std::min(best, degree(v));
  }
  return best;
}

int Graph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

Rational Graph::average_degree() const {
  if (n_ == 0) return Rational(0);
  return Rational(2 * static_cast<long long>(edges_.size()), n_);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  Subgraph out;
  out.original = keep.members();
  std::vector<int> renumber(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < out.original.size(); ++i) {
    renumber[out.original[i]] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (renumber[e.u] >= 0 && renumber[e.v] >= 0) {
      edges.push_back({renumber[e.u], renumber[e.v]});
    }
  }
  out.graph = Graph::from_edges(static_cast<int>(out.original.size()), std::move(edges));
  return out;
}

Graph build_clique(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "clique order must be positive");
  std::vector<Edge> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) edges.push_back({u, v});
  }
  return Graph::from_edges(k, std::move(edges));
}

Graph build_biclique(int a, int b) {
  if (a < 1 || b < 1) {
    throw Error(ErrorCode::InvalidParameter, "biclique sides must be positive");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  }
  return Graph::from_edges(a + b, std::move(edges));
}

Graph build_path(int k) {
  if (k < 1) throw Error(ErrorCode::InvalidParameter, "path order must be positive");
  std::vector<Edge> edges;
  for (int v = 0; v + 1 < k; ++v) edges.push_back({v, v + 1});
  return Graph::from_edges(k, std::move(edges));
}

Graph disjoint_union(const Graph& block, int n) {
  if (n < 0) throw Error(ErrorCode::InvalidParameter, "negative vertex count");
  const int size = block.vertex_count();
  const int copies = size == 0 ? 0 : n / size;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(copies) * block.edge_count());
  for (int c = 0; c < copies; ++c) {
    const int offset = c * size;
    for (const auto& e : block.edges()) edges.push_back({e.u + offset, e.v + offset});
  }
  return Graph::from_edges(n, std::move(edges));
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (int w : g.neighbors(v)) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

namespace {

bool extend_path(const Graph& g, int length, std::vector<int>& path,
                 std::vector<char>& on_path,
                 const std::function<bool(std::span<const int>)>& visit) {
  if (static_cast<int>(path.size()) == length + 1) return visit(path);
  for (int w : g.neighbors(path.back())) {
    if (on_path[w]) continue;
    on_path[w] = 1;
    path.push_back(w);
    const bool go_on = extend_path(g, length, path, on_path, visit);
    path.pop_back();
    on_path[w] = 0;
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

void for_each_path(const Graph& g, int length,
                   const std::function<bool(std::span<const int>)>& visit) {
  if (length < 1) throw Error(ErrorCode::InvalidParameter, "path length must be >= 1");
  if (length > g.vertex_count() - 1) return;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(g.vertex_count()), 0);
  for (int s = 0; s < g.vertex_count(); ++s) {
    path.assign(1, s);
    on_path[s] = 1;
    const bool go_on = extend_path(g, length, path, on_path, visit);
    on_path[s] = 0;
    if (!go_on) return;
  }
}

std::vector<std::vector<int>> enumerate_paths(const Graph& g, int length) {
  std::vector<std::vector<int>> out;
  for_each_path(g, length, [&](std::span<const int> p) {
    out.emplace_back(p.begin(), p.end());
    return true;
  });
  return out;
}

bool Cycle4::contains(int x) const { return position(x) >= 0; }

int Cycle4::position(int x) const {
  for (int i = 0; i < 4; ++i) {
    if (v[i] == x) return i;
  }
  return -1;
}

Cycle4 canonical_cycle(int a, int b, int c, int d) {
  std::array<int, 4> seq{a, b, c, d};
  const auto least = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
  const int next = seq[(least + 1) % 4];
  const int prev = seq[(least + 3) % 4];
  Cycle4 out;
  out.v[0] = seq[least];
  out.v[2] = seq[(least + 2) % 4];
  out.v[1] = std::min(next, prev);
  out.v[3] = std::max(next, prev);
  return out;
}

void for_each_c4(const Graph& g, const std::function<void(const Cycle4&)>& visit) {
  const int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int b : g.neighbors(a)) {
      if (b <= a) continue;
      for (int c : g.neighbors(b)) {
        if (c <= a) continue;
        for (int d : g.neighbors(c)) {
          if (d <= b || d == a) continue;
          if (!g.has_edge(d, a)) continue;
          visit(Cycle4{{a, b, c, d}});
        }
      }
    }
  }
}

std::vector<Cycle4> enumerate_c4(const Graph& g) {
  std::vector<Cycle4> out;
  for_each_c4(g, [&](const Cycle4& c) { out.push_back(c); });
  return out;
}

}  // namespace broomlab
