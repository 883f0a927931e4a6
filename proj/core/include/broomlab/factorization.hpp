#pragma once

#include "broomlab/coloring.hpp"

#include <cstdint>
#include <functional>

namespace broomlab {

/// Streams every 1-factorization of K_k (k even, 2 <= k <= 8) once per color
/// relabeling class, colors canonicalized. With iso_reduce only the first
/// member of each vertex-isomorphism class is emitted. The visitor returns
/// false to stop. Returns the number emitted.
std::uint64_t enumerate_one_factorizations(
    int k, const std::function<bool(const ColoredGraph&)>& visit, bool iso_reduce = false);

std::uint64_t count_one_factorizations(int k, bool iso_reduce = false);

}  // namespace broomlab
