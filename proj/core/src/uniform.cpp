#include "bartomo/uniform.hpp"

#include <cassert>
#include <format>
#include <numeric>

#include "bartomo/errors.hpp"

namespace bartomo {

namespace {

long long checked_mul(long long x, long long y) {
    long long out;
    if (__builtin_mul_overflow(x, y, &out))
        throw InputError(std::format("arithmetic overflow computing {} * {}", x, y));
    return out;
}

long long checked_add(long long x, long long y) {
    long long out;
    if (__builtin_add_overflow(x, y, &out))
        throw InputError(std::format("arithmetic overflow computing {} + {}", x, y));
    return out;
}

void require_positive(std::initializer_list<std::pair<const char*, long long>> args) {
    for (const auto& [name, value] : args)
        if (value < 1) throw InputError(std::format("{} must be >= 1, got {}", name, value));
}

// ab = amv + bnh with both sides computed overflow-checked.
bool area_identity(long long a, long long b, long long h, long long v, long long m, long long n) {
    long long vertical = checked_mul(checked_mul(a, m), v);
    long long horizontal = checked_mul(checked_mul(b, n), h);
    return checked_mul(a, b) == checked_add(vertical, horizontal);
}

}  // namespace

GcdDecomposition decompose(long long a, long long b, long long h, long long v, long long m,
                           long long n) {
    require_positive({{"a", a}, {"b", b}, {"h", h}, {"v", v}, {"m", m}, {"n", n}});
    if (!area_identity(a, b, h, v, m, n))
        throw InfeasibleError(std::format(
            "ab = {} but amv + bnh = {}; the covered areas do not match", a * b,
            checked_add(checked_mul(checked_mul(a, m), v), checked_mul(checked_mul(b, n), h))));

    long long c = std::gcd(a, b);
    GcdDecomposition d;
    d.a_prime = a / c;
    d.b_prime = b / c;
    d.p = n * h / d.a_prime;
    d.q = m * v / d.b_prime;
    assert(d.p * d.a_prime == n * h);
    assert(d.q * d.b_prime == m * v);
    assert(d.p + d.q == c);
    assert(d.p >= 1 && d.q >= 1);
    return d;
}

bool feasible_uniform_torus(long long a, long long b, long long h, long long v, long long m,
                            long long n) {
    require_positive({{"a", a}, {"b", b}, {"h", h}, {"v", v}});
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    return area_identity(a, b, h, v, m, n);
}

Tiling tile_uniform_torus(int a, int b, int h, int v, int m, int n) {
    if (!feasible_uniform_torus(a, b, h, v, m, n))
        throw InfeasibleError(std::format(
            "no uniform tiling of the {}x{} torus: ab != amv + bnh ({} != {})", a, b,
            static_cast<long long>(a) * b,
            static_cast<long long>(a) * m * v + static_cast<long long>(b) * n * h));

    Geometry g{Shape::torus, a, b};
    Tiling t{{h, v}, Region::full(g), {}};

    if (m == 0) {  // a = nh: every row is n horizontal bars laid end to end
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < n; ++k)
                t.bars.push_back({Orientation::horizontal, {k * h, j}});
        return t;
    }
    if (n == 0) {  // b = mv: every column is m vertical bars
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < m; ++k)
                t.bars.push_back({Orientation::vertical, {i, k * v}});
        return t;
    }

    // Partition the torus into the p+q diagonal rectangle families: the
    // nh-by-b' block at (a'i, b'i) holds n horizontal bars per row, and the
    // a'-by-mv block at (a'i, b'(i+1)) holds m vertical bars per column.
    GcdDecomposition d = decompose(a, b, h, v, m, n);
    int c = static_cast<int>(d.p + d.q);
    int ap = static_cast<int>(d.a_prime);
    int bp = static_cast<int>(d.b_prime);
    for (int i = 0; i < c; ++i) {
        int hx = ap * i, hy = bp * i;
        for (int row = 0; row < bp; ++row)
            for (int k = 0; k < n; ++k)
                t.bars.push_back(canonical_bar(
                    {Orientation::horizontal, {(hx + k * h) % a, (hy + row) % b}}, t.spec, g));
        int vx = ap * i, vy = bp * (i + 1);
        for (int col = 0; col < ap; ++col)
            for (int k = 0; k < m; ++k)
                t.bars.push_back(canonical_bar(
                    {Orientation::vertical, {(vx + col) % a, (vy + k * v) % b}}, t.spec, g));
    }
    return t;
}

bool feasible_uniform_rectangle(long long a, long long b, long long h, long long v, long long m,
                                long long n) {
    require_positive({{"a", a}, {"b", b}, {"h", h}, {"v", v}});
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    if (m == 0 && n == 0) return false;
    if (m == 0) return a == checked_mul(n, h);
    if (n == 0) return b == checked_mul(m, v);
    return area_identity(a, b, h, v, m, n) && a % h == 0 && b % v == 0;
}

Tiling tile_uniform_rectangle(int a, int b, int h, int v, int m, int n) {
    if (!feasible_uniform_rectangle(a, b, h, v, m, n))
        throw InfeasibleError(
            std::format("no uniform tiling of the {}x{} rectangle with h={} v={} m={} n={}", a, b,
                        h, v, m, n));

    Geometry g{Shape::rectangle, a, b};
    Tiling t{{h, v}, Region::full(g), {}};

    if (m == 0) {
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < n; ++k)
                t.bars.push_back({Orientation::horizontal, {k * h, j}});
        return t;
    }
    if (n == 0) {
        for (int i = 0; i < a; ++i)
            for (int k = 0; k < m; ++k)
                t.bars.push_back({Orientation::vertical, {i, k * v}});
        return t;
    }

    // Split into h-by-v blocks; a block of the 0-1 matrix holding 1 is filled
    // with h vertical bars, one holding 0 with v horizontal bars. A column
    // then receives one vertical bar per 1 in its block column, m in total.
    int p = a / h, q = b / v;
    BinaryMatrix matrix = reconstruct_binary_matrix(p, q, m, n);
    for (int bc = 0; bc < p; ++bc)
        for (int br = 0; br < q; ++br) {
            int x0 = bc * h, y0 = br * v;
            if (matrix.entry(bc, br)) {
                for (int i = 0; i < h; ++i)
                    t.bars.push_back({Orientation::vertical, {x0 + i, y0}});
            } else {
                for (int j = 0; j < v; ++j)
                    t.bars.push_back({Orientation::horizontal, {x0, y0 + j}});
            }
        }
    return t;
}

BinaryMatrix reconstruct_binary_matrix(int p, int q, int m, int n) {
    require_positive({{"p", p}, {"q", q}});
    if (m < 0 || n < 0) throw InputError("m and n must be non-negative");
    long long lhs = static_cast<long long>(p) * q;
    long long rhs = static_cast<long long>(p) * m + static_cast<long long>(q) * n;
    if (lhs != rhs)
        throw InfeasibleError(
            std::format("pq = {} but pm + qn = {}; no such 0-1 matrix exists", lhs, rhs));

    // Unit bars on the p-by-q torus: vertical bars mark the 1s (m per
    // column), horizontal bars the 0s (n per row).
    Tiling t = tile_uniform_torus(p, q, 1, 1, m, n);
    BinaryMatrix matrix{p, q, std::vector<std::uint8_t>(static_cast<size_t>(p) * q, 0)};
    for (const Bar& bar : t.bars)
        if (bar.orientation == Orientation::vertical)
            matrix.data[static_cast<size_t>(bar.anchor.j) * p + bar.anchor.i] = 1;
    return matrix;
}

}  // namespace bartomo
