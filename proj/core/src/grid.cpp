#include "bartomo/grid.hpp"

#include <algorithm>
#include <format>

#include "bartomo/errors.hpp"

namespace bartomo {

namespace {

int mod(int x, int modulus) {
    int r = x % modulus;
    return r < 0 ? r + modulus : r;
}

void check_geometry(const Geometry& g) {
    if (g.a < 1 || g.b < 1)
        throw InputError(std::format("geometry must be at least 1x1, got a={} b={}", g.a, g.b));
}

}  // namespace

Region::Region() : geom_{Shape::rectangle, 1, 1}, mask_(1, 0), cell_count_(0) {}

Region Region::full(Geometry g) {
    check_geometry(g);
    Region r;
    r.geom_ = g;
    r.mask_.assign(static_cast<size_t>(g.a) * g.b, 1);
    r.cell_count_ = g.a * g.b;
    return r;
}

Region Region::empty(Geometry g) {
    check_geometry(g);
    Region r;
    r.geom_ = g;
    r.mask_.assign(static_cast<size_t>(g.a) * g.b, 0);
    r.cell_count_ = 0;
    return r;
}

Region Region::from_cells(Geometry g, std::span<const Cell> cells) {
    Region r = empty(g);
    for (const Cell& c : cells) {
        if (c.i < 0 || c.i >= g.a || c.j < 0 || c.j >= g.b)
            throw InputError(std::format("cell ({},{}) outside {}x{} geometry", c.i, c.j, g.a, g.b));
        size_t idx = static_cast<size_t>(c.j) * g.a + c.i;
        if (!r.mask_[idx]) {
            r.mask_[idx] = 1;
            ++r.cell_count_;
        }
    }
    return r;
}

Region Region::histogram(int a, int b, std::span<const int> heights) {
    if (static_cast<int>(heights.size()) != a)
        throw InputError(std::format("histogram needs {} column heights, got {}", a, heights.size()));
    Region r = empty({Shape::rectangle, a, b});
    for (int i = 0; i < a; ++i) {
        if (heights[i] < 0 || heights[i] > b)
            throw InputError(std::format("column {} height {} outside [0,{}]", i, heights[i], b));
        for (int j = b - heights[i]; j < b; ++j) {
            r.mask_[static_cast<size_t>(j) * a + i] = 1;
            ++r.cell_count_;
        }
    }
    return r;
}

bool Region::contains(int i, int j) const {
    if (i < 0 || i >= geom_.a || j < 0 || j >= geom_.b) return false;
    return mask_[static_cast<size_t>(j) * geom_.a + i] != 0;
}

bool Region::is_histogram() const {
    if (geom_.shape != Shape::rectangle) return false;
    for (int i = 0; i < geom_.a; ++i)
        for (int j = 0; j + 1 < geom_.b; ++j)
            if (contains(i, j) && !contains(i, j + 1)) return false;
    return true;
}

std::vector<Cell> Region::cells() const {
    std::vector<Cell> out;
    out.reserve(cell_count_);
    for (int j = 0; j < geom_.b; ++j)
        for (int i = 0; i < geom_.a; ++i)
            if (mask_[static_cast<size_t>(j) * geom_.a + i]) out.push_back({i, j});
    return out;
}

std::vector<Cell> covered_cells(const Bar& bar, const BarSpec& spec, const Geometry& g) {
    std::vector<Cell> out;
    int len = bar.orientation == Orientation::horizontal ? spec.h : spec.v;
    out.reserve(len);
    for (int k = 0; k < len; ++k) {
        int i = bar.anchor.i + (bar.orientation == Orientation::horizontal ? k : 0);
        int j = bar.anchor.j + (bar.orientation == Orientation::vertical ? k : 0);
        if (g.shape == Shape::torus) {
            i = mod(i, g.a);
            j = mod(j, g.b);
        }
        out.push_back({i, j});
    }
    return out;
}

Bar canonical_bar(Bar bar, const BarSpec& spec, const Geometry& g) {
    if (g.shape == Shape::torus) {
        bar.anchor.i = mod(bar.anchor.i, g.a);
        bar.anchor.j = mod(bar.anchor.j, g.b);
        // A bar spanning the whole row/column covers the same set from any
        // anchor; pick the smallest.
        if (bar.orientation == Orientation::horizontal && spec.h == g.a) bar.anchor.i = 0;
        if (bar.orientation == Orientation::vertical && spec.v == g.b) bar.anchor.j = 0;
    }
    return bar;
}

std::vector<Bar> canonical_bars(const Tiling& t) {
    std::vector<Bar> out;
    out.reserve(t.bars.size());
    for (const Bar& bar : t.bars) out.push_back(canonical_bar(bar, t.spec, t.region.geometry()));
    std::sort(out.begin(), out.end());
    return out;
}

bool same_tiling(const Tiling& lhs, const Tiling& rhs) {
    return lhs.spec == rhs.spec && lhs.region == rhs.region &&
           canonical_bars(lhs) == canonical_bars(rhs);
}

ValidationReport validate_tiling(const Tiling& t) {
    ValidationReport report;
    const Geometry& g = t.region.geometry();
    std::vector<int> cover(static_cast<size_t>(g.a) * g.b, 0);

    for (const Bar& bar : t.bars) {
        for (const Cell& c : covered_cells(bar, t.spec, g)) {
            if (c.i < 0 || c.i >= g.a || c.j < 0 || c.j >= g.b) {
                report.violations.push_back(
                    {Violation::Kind::wraps_edge, c,
                     std::format("bar at ({},{}) extends past the rectangle edge through ({},{})",
                                 bar.anchor.i, bar.anchor.j, c.i, c.j)});
                continue;
            }
            if (!t.region.contains(c)) {
                report.violations.push_back(
                    {Violation::Kind::outside_region, c,
                     std::format("cell ({},{}) covered but not part of the region", c.i, c.j)});
                continue;
            }
            int& n = cover[static_cast<size_t>(c.j) * g.a + c.i];
            if (++n == 2)
                report.violations.push_back(
                    {Violation::Kind::overlap, c,
                     std::format("cell ({},{}) covered more than once", c.i, c.j)});
        }
    }
    for (int j = 0; j < g.b; ++j)
        for (int i = 0; i < g.a; ++i)
            if (t.region.contains(i, j) && cover[static_cast<size_t>(j) * g.a + i] == 0)
                report.violations.push_back({Violation::Kind::uncovered,
                                             {i, j},
                                             std::format("cell ({},{}) uncovered", i, j)});
    return report;
}

ProjectionPair projections_of(const Tiling& t) {
    ValidationReport report = validate_tiling(t);
    if (!report.ok())
        throw ValidationError("invalid tiling: " + report.violations.front().message);
    const Geometry& g = t.region.geometry();
    ProjectionPair p;
    p.m.assign(g.a, 0);
    p.n.assign(g.b, 0);
    for (const Bar& bar : t.bars) {
        Bar c = canonical_bar(bar, t.spec, g);
        if (c.orientation == Orientation::vertical)
            ++p.m[c.anchor.i];
        else
            ++p.n[c.anchor.j];
    }
    return p;
}

std::vector<int> row_counts(const Region& region) {
    std::vector<int> out(region.rows(), 0);
    for (int j = 0; j < region.rows(); ++j)
        for (int i = 0; i < region.columns(); ++i)
            if (region.contains(i, j)) ++out[j];
    return out;
}

std::vector<int> column_heights(const Region& region) {
    std::vector<int> out(region.columns(), 0);
    for (int i = 0; i < region.columns(); ++i)
        for (int j = 0; j < region.rows(); ++j)
            if (region.contains(i, j)) ++out[i];
    return out;
}

const char* to_string(Shape s) { return s == Shape::rectangle ? "rectangle" : "torus"; }

const char* to_string(Orientation o) {
    return o == Orientation::horizontal ? "horizontal" : "vertical";
}

}  // namespace bartomo
