#pragma once

#include "skewmut/int_matrix.hpp"

#include <boost/multiprecision/integer.hpp>

#include <algorithm>

namespace skewmut {

inline Int gcd_int(const Int& a, const Int& b) {
    return boost::multiprecision::gcd(a, b);
}

/// Invariant factors of the Smith normal form plus the classical
/// congruence baselines derived from them.
struct SmithReport {
    std::vector<Int> invariant_factors; // divisibility chain, zeros trailing
    std::size_t rank = 0;               // rank over Q = count of nonzero factors
    std::vector<Int> column_gcds;       // per column of the input; 0 for a zero column
};

/// Smith normal form by repeated gcd-reduction pivoting: the smallest
/// nonzero entry is moved to the pivot, its row and column are cleared by
/// division with remainder (remainders become the new, strictly smaller
/// pivot), and a divisibility sweep folds non-multiples into the pivot row.
inline SmithReport smith_report(const IntMatrix& m) {
    const std::size_t R = m.rows(), C = m.cols();
    const std::size_t dim = std::min(R, C);
    IntMatrix a = m;
    std::vector<Int> factors;

    auto swap_rows = [&](std::size_t r1, std::size_t r2) {
        for (std::size_t j = 0; j < C; ++j) std::swap(a(r1, j), a(r2, j));
    };
    auto swap_cols = [&](std::size_t c1, std::size_t c2) {
        for (std::size_t i = 0; i < R; ++i) std::swap(a(i, c1), a(i, c2));
    };

    std::size_t t = 0;
    while (t < dim) {
        // Smallest nonzero |entry| in the trailing submatrix, lowest
        // (row, col) on ties.
        bool found = false;
        std::size_t pi = t, pj = t;
        Int best = 0;
        for (std::size_t i = t; i < R; ++i)
            for (std::size_t j = t; j < C; ++j) {
                if (a(i, j) == 0) continue;
                Int v = abs_int(a(i, j));
                if (!found || v < best) {
                    found = true;
                    best = v;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) swap_rows(t, pi);
        if (pj != t) swap_cols(t, pj);

        for (;;) {
            bool pivot_changed = false;
            for (std::size_t i = t + 1; i < R && !pivot_changed; ++i) {
                if (a(i, t) == 0) continue;
                Int q = a(i, t) / a(t, t);
                if (q != 0)
                    for (std::size_t j = t; j < C; ++j) a(i, j) -= q * a(t, j);
                if (a(i, t) != 0) {
                    swap_rows(t, i); // remainder is strictly smaller
                    pivot_changed = true;
                }
            }
            if (pivot_changed) continue;

            for (std::size_t j = t + 1; j < C && !pivot_changed; ++j) {
                if (a(t, j) == 0) continue;
                Int q = a(t, j) / a(t, t);
                if (q != 0)
                    for (std::size_t i = t; i < R; ++i) a(i, j) -= q * a(i, t);
                if (a(t, j) != 0) {
                    swap_cols(t, j);
                    pivot_changed = true;
                }
            }
            if (pivot_changed) continue;

            // Row and column are clear; enforce that the pivot divides the
            // rest of the submatrix.
            bool fixed = false;
            for (std::size_t i = t + 1; i < R && !fixed; ++i)
                for (std::size_t j = t + 1; j < C && !fixed; ++j)
                    if (a(i, j) % a(t, t) != 0) {
                        for (std::size_t jj = t; jj < C; ++jj) a(t, jj) += a(i, jj);
                        fixed = true;
                    }
            if (!fixed) break;
        }

        factors.push_back(abs_int(a(t, t)));
        ++t;
    }

    SmithReport report;
    report.rank = factors.size();
    factors.resize(dim, Int(0));
    report.invariant_factors = std::move(factors);

    report.column_gcds.reserve(C);
    for (std::size_t j = 0; j < C; ++j) {
        Int g = 0;
        for (std::size_t i = 0; i < R; ++i) g = gcd_int(g, m(i, j));
        report.column_gcds.push_back(g);
    }
    return report;
}

} // namespace skewmut
