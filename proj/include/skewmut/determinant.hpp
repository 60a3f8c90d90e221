#pragma once

#include "skewmut/int_matrix.hpp"

namespace skewmut {

/// Exact determinant over the integers by fraction-free Bareiss
/// elimination. Row swaps select the first nonzero pivot in each column;
/// every interior division is exact.
inline Int det_exact(const IntMatrix& m) {
    if (!m.is_square()) throw std::invalid_argument("det_exact: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;

    IntMatrix a = m;
    Int prev_pivot = 1;
    int sign = 1;

    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_row = k;
            for (std::size_t i = k + 1; i < n; ++i)
                if (a(i, k) != 0) { swap_row = i; break; }
            if (swap_row == k) return 0;
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap_row, j));
            sign = -sign;
        }
        const Int pivot = a(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a(i, j) = (a(i, j) * pivot - a(i, k) * a(k, j)) / prev_pivot;
            a(i, k) = 0;
        }
        prev_pivot = pivot;
    }
    Int det = a(n - 1, n - 1);
    return sign < 0 ? Int(-det) : det;
}

/// det_exact reduced to its least non-negative residue modulo 4. Computed
/// from the exact integer determinant; elimination in Z/4 would be
/// unsound there.
inline int det_mod4(const IntMatrix& m) {
    return static_cast<int>(floor_mod(det_exact(m), 4));
}

} // namespace skewmut
