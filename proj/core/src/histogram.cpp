#include "bartomo/histogram.hpp"

#include <algorithm>
#include <format>
#include <numeric>

#include "bartomo/errors.hpp"

namespace bartomo {

namespace {

void check_vectors(const std::vector<int>& m, const std::vector<int>& n, int a, int b) {
    if (static_cast<int>(m.size()) != a)
        throw InputError(std::format("m has {} entries, expected a={}", m.size(), a));
    if (static_cast<int>(n.size()) != b)
        throw InputError(std::format("n has {} entries, expected b={}", n.size(), b));
    for (int x : m)
        if (x < 0) throw InputError("negative entry in m");
    for (int x : n)
        if (x < 0) throw InputError("negative entry in n");
}

}  // namespace

std::optional<Tiling> tile_histogram_h1(const Region& histogram, const std::vector<int>& m,
                                        const std::vector<int>& n, int v) {
    const Geometry& g = histogram.geometry();
    if (g.shape != Shape::rectangle) throw InputError("histograms live in rectangles, not tori");
    if (!histogram.is_histogram())
        throw InputError("region is not a histogram: some cell lacks its downward neighbor");
    if (v < 1) throw InputError(std::format("v must be >= 1, got {}", v));
    const int a = g.a, b = g.b;
    check_vectors(m, n, a, b);

    long long promised = std::accumulate(n.begin(), n.end(), 0LL);
    for (int x : m) promised += static_cast<long long>(v) * x;
    if (promised != histogram.cell_count())
        throw PromiseError(std::format("area promise violated: v*sum(m) + sum(n) = {} but |H| = {}",
                                       promised, histogram.cell_count()));

    // top[i] = row of the highest remaining cell of column i; b when empty.
    std::vector<int> top(a);
    {
        std::vector<int> heights = column_heights(histogram);
        for (int i = 0; i < a; ++i) top[i] = b - heights[i];
    }
    std::vector<int> m_rem = m;

    Tiling tiling{{1, v}, histogram, {}};
    std::vector<int> eligible, values, picked;
    eligible.reserve(a);
    values.reserve(a);
    picked.reserve(a);

    for (int row = 0; row < b; ++row) {
        eligible.clear();
        for (int i = 0; i < a; ++i)
            if (top[i] == row) eligible.push_back(i);
        int cells = static_cast<int>(eligible.size());
        if (cells < n[row]) return std::nullopt;

        int k = cells - n[row];
        picked.clear();
        if (k > 0) {
            if (row + v > b) return std::nullopt;  // vertical bar would overflow
            if (k == cells) {
                picked = eligible;
            } else {
                // The k columns of largest remaining m; ties go to the
                // smallest index. During one row no column is chosen twice
                // (its top cell is consumed), so selecting against the
                // initial values matches the one-at-a-time rule.
                values.assign(eligible.size(), 0);
                for (size_t e = 0; e < eligible.size(); ++e) values[e] = m_rem[eligible[e]];
                std::nth_element(values.begin(), values.begin() + (k - 1), values.end(),
                                 std::greater<int>());
                int threshold = values[k - 1];
                int above = 0;
                for (int i : eligible)
                    if (m_rem[i] > threshold) ++above;
                int at_threshold = k - above;
                for (int i : eligible) {
                    if (m_rem[i] > threshold)
                        picked.push_back(i);
                    else if (m_rem[i] == threshold && at_threshold > 0) {
                        picked.push_back(i);
                        --at_threshold;
                    }
                }
            }
            for (int i : picked) {
                if (m_rem[i] == 0) return std::nullopt;  // column quota already spent
                tiling.bars.push_back({Orientation::vertical, {i, row}});
                --m_rem[i];
                top[i] += v;
            }
        }
        // Everything left of the row is consumed by unit horizontal bars.
        for (int i : eligible)
            if (top[i] == row) {
                tiling.bars.push_back({Orientation::horizontal, {i, row}});
                top[i] += 1;
            }
    }
    return tiling;
}

std::optional<Tiling> tile_block_uniform(int a, int b, int h, int v, const std::vector<int>& m,
                                         const std::vector<int>& n) {
    if (a < 1 || b < 1 || h < 1 || v < 1)
        throw InputError("a, b, h, v must all be >= 1");
    if (a % h != 0) throw InputError(std::format("h = {} does not divide a = {}", h, a));
    check_vectors(m, n, a, b);
    for (int i = 0; i < a; ++i)
        if (m[i] != m[(i / h) * h])
            throw InputError(
                std::format("m is not constant on column block {}: m[{}] differs", i / h, i));

    // Any realization covers each cell once, so a failed area identity is a
    // decided "no", not a promise violation.
    long long area = std::accumulate(n.begin(), n.end(), 0LL) * h;
    for (int x : m) area += static_cast<long long>(v) * x;
    if (area != static_cast<long long>(a) * b) return std::nullopt;

    const int a2 = a / h;
    std::vector<int> m2(a2);
    for (int i = 0; i < a2; ++i) m2[i] = m[i * h];

    std::optional<Tiling> scaled =
        tile_histogram_h1(Region::full({Shape::rectangle, a2, b}), m2, n, v);
    if (!scaled) return std::nullopt;

    Tiling tiling{{h, v}, Region::full({Shape::rectangle, a, b}), {}};
    for (const Bar& bar : scaled->bars) {
        int block = bar.anchor.i;
        if (bar.orientation == Orientation::horizontal) {
            tiling.bars.push_back({Orientation::horizontal, {block * h, bar.anchor.j}});
        } else {
            for (int t = 0; t < h; ++t)
                tiling.bars.push_back({Orientation::vertical, {block * h + t, bar.anchor.j}});
        }
    }
    return tiling;
}

}  // namespace bartomo
