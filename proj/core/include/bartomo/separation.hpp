#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bartomo/grid.hpp"

namespace bartomo {

// A maximal rectangle bounded by cuts or the grid border. Column/row
// constraints are attached only when they are attributable: the block's
// column constraints are the global ones iff the block spans every row, and
// symmetrically for rows.
struct SeparatedBlock {
    int col_begin = 0, col_end = 0;  // columns [col_begin, col_end)
    int row_begin = 0, row_end = 0;  // rows [row_begin, row_end)
    std::optional<std::vector<int>> m;
    std::optional<std::vector<int>> n;
    int width() const { return col_end - col_begin; }
    int height() const { return row_end - row_begin; }
};

// c[i] = horizontal bars anchored in column i, d[j] = vertical bars anchored
// in row j; both are forced by the projections alone, so cuts (boundaries no
// bar crosses in any realization) can be read off without solving.
struct CutReport {
    std::vector<long long> c;
    std::vector<long long> d;
    std::vector<int> column_cuts;  // boundary after column i (i = a-1 is the border)
    std::vector<int> row_cuts;     // boundary after row j
    std::vector<SeparatedBlock> blocks;
    bool infeasible = false;
    std::string reason;
};

CutReport analyze_cuts(int a, int b, int h, int v, const std::vector<int>& m,
                       const std::vector<int>& n);

// First necessary condition: the relaxations (v*m, n, h, 1) and (m, h*n, 1, v)
// must both be realizable. Decided by the unit-horizontal solver, the first
// one on the transposed grid. Witnesses are carried when found.
struct Condition1Result {
    bool ok = false;
    std::optional<Tiling> unit_vertical_witness;    // (m, h*n, 1, v)
    std::optional<Tiling> unit_horizontal_witness;  // (v*m, n, h, 1), back-transposed
};

Condition1Result check_condition1(int a, int b, int h, int v, const std::vector<int>& m,
                                  const std::vector<int>& n);

// Second necessary condition: every separated rectangle must be tileable with
// the bars even without tomographic constraints. An infeasible cut report
// (negative forced counts) yields false.
bool check_condition2(const CutReport& report, int h, int v);

// Can the width-by-height rectangle be partitioned into h-by-1 and 1-by-v
// bars? Decided exactly by a column-sweep dynamic program over boundary
// profiles (per-row horizontal-bar overhang into the next column), memoized.
bool unconstrained_tileable(int width, int height, int h, int v);

}  // namespace bartomo
