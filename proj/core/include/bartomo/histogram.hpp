#pragma once

#include <optional>
#include <vector>

#include "bartomo/grid.hpp"

namespace bartomo {

// Reconstructs a tiling of a histogram with unit horizontal bars and vertical
// bars of length v, matching projections (m, n) exactly, or answers nullopt
// when no such tiling exists. Complete: whenever a tiling exists one is
// returned. Row by row, vertical bars go to the columns with the largest
// remaining m (ties to the smallest column index), then the row's leftover
// cells take the n[j] unit horizontal bars. Runs in O(a log a + ab).
//
// The area promise v*sum(m) + sum(n) == |H| must hold; its violation raises
// PromiseError rather than returning "no". A non-histogram region or
// mismatched vector lengths raise InputError.
std::optional<Tiling> tile_histogram_h1(const Region& histogram, const std::vector<int>& m,
                                        const std::vector<int>& n, int v);

// Block-uniform columns: h | a and m constant on every block of h consecutive
// columns. Solved by shrinking the horizontal scale by h, running the unit
// solver on the a/h-wide rectangle, and expanding each scaled bar back (a
// unit horizontal bar becomes one h-bar, a vertical bar is replicated across
// the h columns of its block at the same rows).
std::optional<Tiling> tile_block_uniform(int a, int b, int h, int v, const std::vector<int>& m,
                                         const std::vector<int>& n);

}  // namespace bartomo
