#pragma once

#include "skewmut/determinant.hpp"
#include "skewmut/skew.hpp"

namespace skewmut {

/// Unipotent part V(B): strictly-upper entries copied from B, unit
/// diagonal, zero below. Satisfies B = V - V^t.
inline IntMatrix upper_part(const SkewMatrix& b) {
    const std::size_t n = b.size();
    IntMatrix v = IntMatrix::identity(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) v(i, j) = b(i, j);
    if (v - v.transposed() != b.mat())
        throw std::logic_error("upper_part: B != V - V^t");
    return v;
}

/// Symmetric companion S(B) = V(B) + V(B)^t together with its source.
/// Diagonal entries are all 2 and S(B) = B (mod 2).
struct Companion {
    SkewMatrix source;
    IntMatrix s;
};

inline Companion companion(const SkewMatrix& b) {
    IntMatrix v = upper_part(b);
    IntMatrix s = v + v.transposed();
    return Companion{b, std::move(s)};
}

/// det(S(B)) mod 4, canonicalized to {0,1,2,3}.
struct DeltaResidue {
    int value = 0;

    friend bool operator==(DeltaResidue a, DeltaResidue b) { return a.value == b.value; }
    friend bool operator!=(DeltaResidue a, DeltaResidue b) { return a.value != b.value; }
};

inline DeltaResidue delta(const SkewMatrix& b) {
    return DeltaResidue{det_mod4(companion(b).s)};
}

/// Residue classes observed in practice, by size: {0,2} for odd n,
/// {0,1} for n = 0 (mod 4), {0,3} for n = 2 (mod 4). The odd case is a
/// theorem; the even cases are observations, so callers report
/// "unexpected" instead of failing.
enum class ParityClass { expected, unexpected };

inline ParityClass delta_parity_class(std::size_t n, DeltaResidue d) {
    const int v = d.value;
    bool ok;
    if (n % 2 == 1)
        ok = (v == 0 || v == 2);
    else if (n % 4 == 0)
        ok = (v == 0 || v == 1);
    else
        ok = (v == 0 || v == 3);
    return ok ? ParityClass::expected : ParityClass::unexpected;
}

inline const char* to_string(ParityClass c) {
    return c == ParityClass::expected ? "expected" : "unexpected";
}

} // namespace skewmut
