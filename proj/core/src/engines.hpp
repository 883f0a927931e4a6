#pragma once

#include "broomlab/search.hpp"

#include <optional>
#include <vector>

namespace broomlab::detail {

struct Outcome {
  SearchResult result = SearchResult::Exhausted;
  std::optional<std::vector<int>> colors;  // raw colors of the witness
  SearchStats stats;
  bool deterministic = true;
};

/// Config already validated; cap resolved.
Outcome run_generic(const SearchConfig& config, int cap);

/// lemma_active: the bichromatic-P4 prune may fire.
Outcome run_near_factorization(const SearchConfig& config, bool lemma_active);

/// Orbit representatives of the second class on K_n after the first.
std::vector<std::vector<Edge>> second_classes_for(int n);

}  // namespace broomlab::detail
