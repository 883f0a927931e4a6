#pragma once

// Brute-force reference implementations. They share no code with the
// library beyond Graph/ColoredGraph accessors, so agreement is evidence.

#include "broomlab/coloring.hpp"
#include "broomlab/detect.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

namespace oracle {

using broomlab::BroomEmbedding;
using broomlab::ColoredGraph;
using broomlab::Graph;

/// Least rainbow B_{t,ell} by handle then sorted bristles, by enumerating
/// every handle sequence and every bristle subset.
std::optional<BroomEmbedding> rainbow_broom(const ColoredGraph& cg, int t, int ell);

bool proper(const ColoredGraph& cg);

/// Edge colorings with colors 1..cap, edges taken in reverse index order,
/// colors introduced in order; calls visit on each proper full coloring
/// (possibly non-canonical ids). Returns false if visit stopped.
bool for_each_proper_coloring(const Graph& g, int cap,
                              const std::function<bool(const ColoredGraph&)>& visit);

/// True iff some proper coloring of g with at most cap colors has no
/// rainbow B_{t,3}, using the oracle detector at leaves.
bool rainbow_free_coloring_exists(const Graph& g, int t, int cap);

/// 1-factorizations of K_k counted as exact covers of E(K_k) by perfect
/// matchings (unordered sets of classes).
std::uint64_t one_factorization_count(int k);

enum class C4Kind { Bichromatic, Trichromatic, RainbowAnchored, RainbowUnanchored };

/// Per (4-cycle, anchor) counts from scanning every 4-subset and its three
/// cyclic orders.
struct C4Counts {
  long long kinds[4] = {0, 0, 0, 0};
};
C4Counts c4_scan(const ColoredGraph& cg);

/// Random proper coloring: edges in random order, each gets a random color
/// from 1..cap free at both ends. Restarts on a dead end; every 50
/// restarts the cap grows by one, so the call always terminates.
ColoredGraph random_proper_coloring(const Graph& g, int cap, std::mt19937_64& rng);

/// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

}  // namespace oracle
