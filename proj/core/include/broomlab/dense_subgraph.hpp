#pragma once

#include "broomlab/graph.hpp"

namespace broomlab {

/// Peels vertices of degree <= d/2, least index first, and stops at the first
/// subgraph with minimum degree > d/2 and average degree >= d. Requires
/// d > 0 and average degree of g at least d.
Subgraph extract_dense_subgraph(const Graph& g, const Rational& d);

/// Keeps the connected components whose average degree exceeds d.
Subgraph component_filter(const Graph& g, const Rational& d);

}  // namespace broomlab
