#pragma once

#include <cstdint>
#include <vector>

#include "bartomo/grid.hpp"

namespace bartomo {

// The split produced when ab = amv + bnh: p + q = gcd(a, b), a = (p+q)a',
// b = (p+q)b', nh = pa' and mv = qb'.
struct GcdDecomposition {
    long long p = 0;
    long long q = 0;
    long long a_prime = 0;
    long long b_prime = 0;
    bool operator==(const GcdDecomposition&) const = default;
};

// Requires a,b,h,v,m,n >= 1 and ab = amv + bnh; throws InfeasibleError with
// the mismatched areas otherwise. All arithmetic is exact; overflow raises
// InputError instead of wrapping.
GcdDecomposition decompose(long long a, long long b, long long h, long long v, long long m,
                           long long n);

// Uniform projections (m,...,m, n,...,n) on the torus exist iff the covered
// areas add up: ab = amv + bnh. Degenerate m = 0 or n = 0 are decided by the
// same identity.
bool feasible_uniform_torus(long long a, long long b, long long h, long long v, long long m,
                            long long n);

// Deterministic constructive tiling of the torus with uniform projections.
Tiling tile_uniform_torus(int a, int b, int h, int v, int m, int n);

// Rectangle analogue: for m, n >= 1 the conditions are ab = amv + bnh, h | a
// and v | b; with m = 0 the condition is a = nh, with n = 0 it is b = mv.
bool feasible_uniform_rectangle(long long a, long long b, long long h, long long v, long long m,
                                long long n);

Tiling tile_uniform_rectangle(int a, int b, int h, int v, int m, int n);

// 0-1 matrix with p columns and q rows, m ones per column and n zeros per
// row; requires pq = pm + qn. entry(col, row) is 0 or 1.
struct BinaryMatrix {
    int p = 0;  // columns
    int q = 0;  // rows
    std::vector<std::uint8_t> data;  // row-major, index row * p + col
    int entry(int col, int row) const { return data[static_cast<size_t>(row) * p + col]; }
};

BinaryMatrix reconstruct_binary_matrix(int p, int q, int m, int n);

}  // namespace bartomo
