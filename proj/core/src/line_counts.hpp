#pragma once

#include <vector>

namespace bartomo::detail {

// Forced per-line anchor counts on a fully covered rectangle. For columns:
// counts[i] = cross - mult * vec[i] - (counts[i-window+1] + ... + counts[i-1])
// with counts = 0 for negative indices. Columns use (len=a, cross=b, window=h,
// mult=v, vec=m); rows use (len=b, cross=a, window=v, mult=h, vec=n). The
// value is realization independent: every valid tiling anchors exactly
// counts[i] bars in line i, so negative entries certify infeasibility.
inline std::vector<long long> anchor_counts(int len, int cross, int window, long long mult,
                                            const std::vector<int>& vec) {
    std::vector<long long> counts(len, 0);
    long long running = 0;  // counts[i-window+1] + ... + counts[i-1]
    for (int i = 0; i < len; ++i) {
        counts[i] = cross - mult * vec[i] - running;
        running += counts[i];
        if (i - window + 1 >= 0) running -= counts[i - window + 1];
    }
    return counts;
}

}  // namespace bartomo::detail
