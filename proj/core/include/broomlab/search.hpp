#pragma once

#include "broomlab/coloring.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace broomlab {

inline constexpr const char* kEngineVersion = "broomlab-search 1.0";

enum class SearchMode { Generic, NearFactorization };
enum class BranchOrder { Canonical, MostConstrained };
enum class SearchResult { Witness, Exhausted, NotFound };

std::string_view to_string(SearchMode mode) noexcept;
std::string_view to_string(BranchOrder order) noexcept;
std::string_view to_string(SearchResult result) noexcept;

struct RuleSet {
  // Generic mode: trichromatic or unanchored rainbow 4-cycles on hosts whose
  // anchors all have t - 2 neighbors off the cycle. Near-factorization mode:
  // trichromatic 4-cycles ABCD with c(BC) equal to A's label color.
  bool c4 = true;
  // A rainbow 3-edge handle whose end already has t - 3 admissible bristles.
  bool broom_capacity = true;
  // Rules backed by stored sub-search certificates (near-factorization only).
  bool lemma_certified = false;

  std::string describe() const;
  static RuleSet none() { return {false, false, false}; }
  friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

RuleSet parse_rules(const std::string& text);

class PruneRegistry;

struct SearchConfig {
  std::string host_spec;  // echoed in certificates, e.g. "clique:8"
  Graph host;
  int t = 0;
  int ell = 3;
  SearchMode mode = SearchMode::Generic;
  int palette_cap = 0;  // 0 selects default_palette_cap(host)
  RuleSet rules;
  BranchOrder order = BranchOrder::Canonical;
  bool deterministic = true;
  bool certify = true;  // an Exhausted verdict must be certifiable
  int workers = 1;
  std::uint64_t seed = 20240601;
  // Fraction of rule prunes re-expanded without rules (hosts <= 7 vertices).
  double audit_rate = 0.0;
  // Near-factorization sub-searches: fixes the second color class.
  std::optional<std::vector<Edge>> fixed_second_class;
  // Lemma-certified rules; when null and requested, the engine builds one.
  const PruneRegistry* registry = nullptr;
  // Called on every explored node with the partial coloring (0 = uncolored).
  std::function<void(std::span<const int>)> on_node;
};

/// n for a complete host K_n, |E| otherwise.
int default_palette_cap(const Graph& host);
bool is_complete(const Graph& host);

/// Builds a host from "clique:k", "biclique:a,b" or "file:path" (a coloring
/// file whose graph is used).
Graph parse_host_spec(const std::string& spec);

struct SearchStats {
  std::uint64_t nodes = 0;
  std::map<std::string, std::uint64_t> pruned;
  int max_depth = 0;
  double wall_ms = 0.0;
  std::uint64_t audits = 0;
  std::uint64_t audit_failures = 0;

  void merge(const SearchStats& other);
};

struct SearchCertificate {
  // Config echo.
  std::string host_spec;
  int n = 0;
  std::size_t m = 0;
  int t = 0;
  int ell = 3;
  SearchMode mode = SearchMode::Generic;
  int palette_cap = 0;
  RuleSet rules;
  BranchOrder order = BranchOrder::Canonical;
  bool deterministic = true;
  std::optional<std::vector<Edge>> fixed_second_class;
  std::vector<std::string> assumptions;  // reductions trusted, rule status

  SearchResult result = SearchResult::Exhausted;
  std::optional<ColoredGraph> witness;
  SearchStats stats;
  std::string engine_version = kEngineVersion;
};

/// Equal verdicts, witnesses, configs and statistics, ignoring wall time.
bool same_outcome(const SearchCertificate& a, const SearchCertificate& b);

/// Runs the configured search. Witness certificates are re-verified before
/// they are returned.
SearchCertificate search(const SearchConfig& config);

/// Near-factorization search on K_n, n odd, t = n - 1, with the default
/// near-factorization rules (c4, capacity, lemma-certified).
SearchCertificate near_factorization_search(const Graph& host, int t);

/// Checks properness and absence of a rainbow B_{t,3}.
bool witness_verifies(const ColoredGraph& witness, int t);

/// Second color classes of the near-factorization search on K_n after the
/// first class is fixed, one per orbit of the first class's stabilizer, in
/// lexicographic order.
std::vector<std::vector<Edge>> near_factorization_second_classes(int n);

/// True iff the two classes contain a 4-edge path alternating between them.
bool has_bichromatic_p4(std::span<const Edge> first, std::span<const Edge> second);

/// The fixed first color class {1,2},{3,4},...,{n-2,n-1} (vertex 0 uncovered).
std::vector<Edge> near_factorization_first_class(int n);

}  // namespace broomlab
