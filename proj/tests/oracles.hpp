#pragma once

// Test-only oracles, kept independent of the library's computation paths.

#include "skewmut/rng.hpp"
#include "skewmut/skew.hpp"

namespace oracles {

/// Determinant by cofactor expansion along the first row. Exponential;
/// cross-checks det_exact for n <= 5.
inline skewmut::Int det_cofactor(const skewmut::IntMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 1) return m(0, 0);
    skewmut::Int acc = 0;
    for (std::size_t c = 0; c < n; ++c) {
        if (m(0, c) == 0) continue;
        skewmut::IntMatrix minor(n - 1, n - 1);
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j == c) continue;
                minor(i - 1, jj++) = m(i, j);
            }
        }
        const skewmut::Int term = m(0, c) * det_cofactor(minor);
        acc += (c % 2 == 0) ? term : -term;
    }
    return acc;
}

/// Directed-cycle detection by DFS on the quiver with an arc i -> j
/// whenever b_ij > 0.
inline bool quiver_has_cycle(const skewmut::SkewMatrix& b) {
    const std::size_t n = b.size();
    std::vector<int> color(n, 0); // 0 fresh, 1 active, 2 done
    std::vector<std::size_t> stack;
    for (std::size_t start = 0; start < n; ++start) {
        if (color[start] != 0) continue;
        // iterative DFS with explicit edge pointers
        std::vector<std::size_t> next(n, 0);
        stack.push_back(start);
        color[start] = 1;
        while (!stack.empty()) {
            const std::size_t v = stack.back();
            bool descended = false;
            for (std::size_t& j = next[v]; j < n; ++j) {
                if (b(v, j) <= 0) continue;
                if (color[j] == 1) return true;
                if (color[j] == 0) {
                    color[j] = 1;
                    stack.push_back(j);
                    descended = true;
                    ++j;
                    break;
                }
            }
            if (!descended) {
                color[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

inline skewmut::SkewMatrix random_skew(skewmut::Xoshiro256ss& rng, std::size_t n,
                                       long long bound) {
    skewmut::IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            const long long v = rng.range(-bound, bound);
            m(i, j) = v;
            m(j, i) = -v;
        }
    return skewmut::SkewMatrix(std::move(m));
}

inline skewmut::IntMatrix random_matrix(skewmut::Xoshiro256ss& rng, std::size_t rows,
                                        std::size_t cols, long long bound) {
    skewmut::IntMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = rng.range(-bound, bound);
    return m;
}

} // namespace oracles
