#pragma once

#include "broomlab/coloring.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace broomlab {

/// B_{t,ell}: a handle path with ell edges plus t - ell pendant bristles at
/// the last handle vertex. Has t + 1 vertices.
struct BroomPattern {
  int t = 0;
  int ell = 3;

  /// Throws InvalidParameter unless 2 <= ell <= t.
  void validate() const;
};

struct BroomEmbedding {
  std::vector<int> handle;    // v_0 .. v_ell
  std::vector<int> bristles;  // ascending, each adjacent to handle.back()

  friend auto operator<=>(const BroomEmbedding&, const BroomEmbedding&) = default;
};

/// True iff emb is a copy of pat in cg whose t edges carry distinct colors.
bool is_rainbow_broom(const ColoredGraph& cg, const BroomPattern& pat,
                      const BroomEmbedding& emb);

/// Least rainbow copy of pat (by handle sequence, then bristles), or none.
/// Requires a proper coloring. For ell <= 3 each rainbow handle is scored by
/// counting admissible bristles at its end; larger ell falls back to
/// find_rainbow_broom_naive.
std::optional<BroomEmbedding> find_rainbow_broom(const ColoredGraph& cg,
                                                 const BroomPattern& pat);

/// Vertex-by-vertex embedding search that does not assume properness.
/// Limited to hosts of at most 16 vertices.
std::optional<BroomEmbedding> find_rainbow_broom_naive(const ColoredGraph& cg,
                                                       const BroomPattern& pat);

/// Least rainbow path with `length` edges starting at v. Requires properness.
std::optional<std::vector<int>> find_rainbow_path_from(const ColoredGraph& cg, int v,
                                                       int length);

enum class CycleClass { Bichromatic, Trichromatic, RainbowAnchored, RainbowUnanchored };

std::string_view to_string(CycleClass c) noexcept;

/// Classifies a 4-cycle relative to an anchor on it. A rainbow cycle is
/// anchored when the anchor carries, somewhere in the host, both colors of
/// the two cycle edges not incident to it.
CycleClass classify_c4(const ColoredGraph& cg, const Cycle4& cycle, int anchor);

struct GoodColoringVerdict {
  bool good = true;
  bool within_palette = true;            // at most t + 1 colors
  std::optional<Cycle4> trichromatic;    // first offending cycle

  explicit operator bool() const noexcept { return good; }
};

/// At most t + 1 colors and no trichromatic 4-cycle.
GoodColoringVerdict check_good_coloring(const ColoredGraph& cg, int t);

/// The partial color map c(uw) -> c(vw) over common neighbors w of u and v.
struct SigmaMap {
  int u = 0;
  int v = 0;
  std::map<int, int> map;
  // Domain equals image.
  bool permutation = false;
  // Permutation of im(c) minus c(uv) (minus nothing when uv is absent) with
  // no fixed point.
  bool derangement_of_palette = false;
  // Permutation with no fixed point whose square is the identity.
  bool fixed_point_free_involution = false;

  /// Disjoint cycle decomposition, each cycle starting at its least element,
  /// cycles ordered by that element. Empty unless `permutation`.
  std::vector<std::vector<int>> cycles() const;
  /// Cycle notation such as "(1 2)(3 4)"; "()" for the empty map.
  std::string cycle_notation() const;
};

SigmaMap extract_sigma(const ColoredGraph& cg, int u, int v);

struct DegreeStructureReport {
  int t = 0;
  int high = 0;    // degree t + 1
  int middle = 0;  // degree t
  int low = 0;     // degree <= t - 1
  // At most two vertices of degree t + 1, and none of degree t when there
  // are exactly two.
  bool structure_holds = true;
};

/// Requires at most t + 2 vertices.
DegreeStructureReport degree_structure_report(const ColoredGraph& cg, int t);

struct C4Histogram {
  long long bichromatic = 0;
  long long trichromatic = 0;
  long long rainbow_anchored = 0;
  long long rainbow_unanchored = 0;
};

/// Classifies every (cycle, anchor) pair of the host.
C4Histogram c4_histogram(const ColoredGraph& cg);

/// True iff every vertex v on every 4-cycle vxyz has |N(v) - {x,y,z}| >= t - 2,
/// the hypothesis under which rainbow-broom freeness constrains 4-cycles.
bool c4_anchor_qualifies(const Graph& g, int anchor, const Cycle4& cycle, int t);
bool host_qualifies_for_c4(const Graph& g, int t);

}  // namespace broomlab
