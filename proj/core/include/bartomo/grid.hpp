#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace bartomo {

enum class Shape { rectangle, torus };

// A cell (i, j): column i counted from the left, row j counted from the top.
struct Cell {
    int i = 0;
    int j = 0;
    auto operator<=>(const Cell&) const = default;
};

struct Geometry {
    Shape shape = Shape::rectangle;
    int a = 1;  // columns
    int b = 1;  // rows
    auto operator<=>(const Geometry&) const = default;
};

// Bar lengths: horizontal bars are h cells wide, vertical bars v cells tall.
struct BarSpec {
    int h = 1;
    int v = 1;
    auto operator<=>(const BarSpec&) const = default;
};

enum class Orientation { horizontal, vertical };

// A placed bar, identified by its anchor: the leftmost cell of a horizontal
// bar, the topmost cell of a vertical one. On a torus a wrapping bar is
// canonicalized to the smallest anchor producing its covered set.
struct Bar {
    Orientation orientation = Orientation::horizontal;
    Cell anchor;
    auto operator<=>(const Bar&) const = default;
};

// A set of cells inside a rectangle or torus. Full grids, histograms and
// arbitrary sub-grids all use this type; solvers query the membership mask.
class Region {
public:
    Region();

    static Region full(Geometry g);
    static Region empty(Geometry g);
    static Region from_cells(Geometry g, std::span<const Cell> cells);
    // Bottom-anchored columns: heights[i] cells at the bottom of column i.
    static Region histogram(int a, int b, std::span<const int> heights);

    const Geometry& geometry() const { return geom_; }
    int columns() const { return geom_.a; }
    int rows() const { return geom_.b; }
    bool contains(int i, int j) const;
    bool contains(Cell c) const { return contains(c.i, c.j); }
    int cell_count() const { return cell_count_; }
    bool is_full() const { return cell_count_ == geom_.a * geom_.b; }
    // True when every cell has its downward neighbor present (columns are
    // bottom-anchored segments). Only meaningful for rectangles.
    bool is_histogram() const;
    std::vector<Cell> cells() const;  // sorted row-major
    // Row-major membership mask, index j * a + i.
    const std::vector<std::uint8_t>& mask() const { return mask_; }

    bool operator==(const Region&) const = default;

private:
    Geometry geom_;
    std::vector<std::uint8_t> mask_;
    int cell_count_ = 0;
};

// Column vector m (vertical bars per column) and row vector n (horizontal
// bars per row).
struct ProjectionPair {
    std::vector<int> m;
    std::vector<int> n;
    bool operator==(const ProjectionPair&) const = default;
};

struct Tiling {
    BarSpec spec;
    Region region;
    std::vector<Bar> bars;
};

struct Instance {
    Region region;
    BarSpec spec;
    ProjectionPair projections;
    bool operator==(const Instance&) const = default;
};

// Cells a bar intends to cover. Plain arithmetic on a rectangle (cells may
// fall outside the grid; validation reports that), modular on a torus (cells
// may repeat if the bar is longer than the grid; validation reports overlap).
std::vector<Cell> covered_cells(const Bar& bar, const BarSpec& spec, const Geometry& g);

Bar canonical_bar(Bar bar, const BarSpec& spec, const Geometry& g);

// Canonical sorted bar list; two tilings are equal iff these agree.
std::vector<Bar> canonical_bars(const Tiling& t);
bool same_tiling(const Tiling& lhs, const Tiling& rhs);

struct Violation {
    enum class Kind { overlap, uncovered, outside_region, wraps_edge };
    Kind kind;
    Cell cell;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_tiling(const Tiling& t);

// Exact per-column vertical-bar counts and per-row horizontal-bar counts.
// Throws ValidationError if the tiling is not a valid partition of its region.
ProjectionPair projections_of(const Tiling& t);

// Number of region cells in each row.
std::vector<int> row_counts(const Region& region);
// Number of region cells in each column.
std::vector<int> column_heights(const Region& region);

const char* to_string(Shape s);
const char* to_string(Orientation o);

}  // namespace bartomo
