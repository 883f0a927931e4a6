#pragma once

// Internal search machinery shared by the generic and near-factorization
// engines: host indexing, the partial coloring, and incremental prune checks.

#include "broomlab/search.hpp"

#include <array>
#include <cstdint>
#include <span>
#include <vector>

namespace broomlab::detail {

struct HostIndex {
  struct Cycle {
    std::array<int, 4> v;  // v[0]-v[1]-v[2]-v[3]-v[0]
    std::array<int, 4> e;  // e[i] joins v[i] and v[(i + 1) % 4]
  };

  int n = 0;
  int m = 0;
  std::vector<Edge> edges;
  std::vector<int> eid;  // n * n, -1 for non-edges
  std::vector<std::vector<int>> nbrs;
  std::vector<int> deg;
  std::vector<Cycle> cycles;
  std::vector<std::vector<int>> cycles_of_edge;
  std::vector<std::vector<int>> cycles_of_vertex;

  explicit HostIndex(const Graph& g);
  int id(int u, int v) const { return eid[u * n + v]; }
};

/// Colors 1..cap (cap <= 63); 0 means uncolored.
class PartialColoring {
 public:
  PartialColoring(const HostIndex& host, int cap);

  int color(int e) const { return colors_[e]; }
  bool colored(int e) const { return colors_[e] != 0; }
  std::uint64_t mask(int v) const { return mask_[v]; }
  bool has(int v, int c) const { return (mask_[v] >> c) & 1U; }
  /// Neighbor of v along the edge of color c, or -1.
  int along(int v, int c) const { return along_[v * stride_ + c]; }
  int colored_degree(int v) const { return cdeg_[v]; }
  int used() const { return used_; }
  int assigned() const { return assigned_; }
  int cap() const { return cap_; }
  std::span<const int> colors() const { return colors_; }

  bool allowed(int e, int c) const;
  void assign(int e, int c);
  void unassign(int e);

 private:
  const HostIndex* host_;
  int cap_;
  int stride_;
  std::vector<int> colors_;
  std::vector<std::uint64_t> mask_;
  std::vector<int> along_;
  std::vector<int> cdeg_;
  std::vector<int> class_size_;
  int used_ = 0;
  int assigned_ = 0;
};

/// Label color of each vertex in near-factorization mode (empty otherwise).
using Labels = std::vector<int>;

enum class Violation { None, C4, Capacity, LemmaP4 };

const char* rule_key(Violation v);

/// Trichromatic, or rainbow with a fully colored anchor lacking a far color.
/// Only sound on hosts passing host_qualifies_for_c4.
bool generic_c4_violated(const HostIndex& h, const PartialColoring& s, int e);

/// Trichromatic cycle ABCD with c(BC) or c(CD) equal to A's label.
bool labeled_c4_violated(const HostIndex& h, const PartialColoring& s, int e,
                         const Labels& labels);

/// A rainbow colored handle x-y-z-a through or at edge e whose end already
/// has (or, with labels, is forced to have) t - 3 admissible bristles.
bool capacity_violated(const HostIndex& h, const PartialColoring& s, int e, int t,
                       const Labels& labels);

/// An alternating path with 4 edges in the colors of e and some other color.
bool bichromatic_p4_through(const HostIndex& h, const PartialColoring& s, int e);

/// True when the fully colored state has no rainbow B_{t,3}.
bool leaf_is_witness(const Graph& host, const PartialColoring& s, int t);

}  // namespace broomlab::detail
