#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bartomo/grid.hpp"

namespace bartomo {

struct SolveOptions {
    // Regions above this many cells are refused with BudgetError rather than
    // searched; a resource answer, not an "unsolvable" one.
    long long cell_budget = 64;
};

// Backtracking decision search: a valid tiling with the instance's exact
// projections, or nullopt when provably none exists. Deterministic: cells are
// filled in row-major order, horizontal placements tried before vertical.
std::optional<Tiling> solve_exact(const Instance& instance, const SolveOptions& options = {});

// All tilings matching the instance, up to `limit`, in deterministic search
// order, each with canonical bar anchors.
std::vector<Tiling> enumerate_exact(const Instance& instance, std::size_t limit,
                                    const SolveOptions& options = {});

// Constraint-free mode: every tiling of the region regardless of projections.
std::vector<Tiling> enumerate_tilings(const Region& region, const BarSpec& spec,
                                      std::size_t limit, const SolveOptions& options = {});

// True iff every cell has exactly two axis-adjacent neighbors inside the
// region and the region is connected.
bool is_cycle(const Region& region);

struct SampledInstance {
    Instance instance;
    Tiling witness;
};

// A feasible-by-construction instance: a random valid tiling is built by a
// seeded randomized backtracking cover, then its projections are read off.
SampledInstance sample_feasible_instance(const Region& region, const BarSpec& spec,
                                         std::uint64_t seed, const SolveOptions& options = {});
SampledInstance sample_feasible_instance(const Geometry& geometry, const BarSpec& spec,
                                         std::uint64_t seed, const SolveOptions& options = {});

}  // namespace bartomo
