#pragma once

#include "skewmut/delta.hpp"

namespace skewmut {

/// The three free entries of a 3x3 skew matrix: p = b_12, q = b_13,
/// r = b_23. Round-trips with the matrix.
struct Rank3Params {
    Int p, q, r;
};

inline Rank3Params rank3_params(const SkewMatrix& b) {
    if (b.size() != 3) throw std::invalid_argument("rank3_params: matrix must be 3x3");
    return Rank3Params{b(0, 1), b(0, 2), b(1, 2)};
}

inline SkewMatrix rank3_matrix(const Rank3Params& v) {
    IntMatrix m(3, 3);
    m(0, 1) = v.p;
    m(1, 0) = -v.p;
    m(0, 2) = v.q;
    m(2, 0) = -v.q;
    m(1, 2) = v.r;
    m(2, 1) = -v.r;
    return SkewMatrix(std::move(m));
}

inline Int markov_constant(const Int& p, const Int& q, const Int& r) {
    return p * p + q * q + r * r - p * q * r;
}

/// Whether the quiver of b (arc i -> j whenever b_ij > 0) contains a
/// directed cycle. On 3 vertices that happens exactly for the two
/// cyclic orientation patterns; zero entries produce no arc.
inline bool is_cyclic_3(const SkewMatrix& b) {
    const auto [p, q, r] = rank3_params(b);
    return (p > 0 && r > 0 && q < 0) || (p < 0 && r < 0 && q > 0);
}

/// Mutation invariant C(B): C(p,q,-r) when the quiver is acyclic,
/// C(p,q,r) when it is cyclic.
inline Int c_invariant(const SkewMatrix& b) {
    const auto [p, q, r] = rank3_params(b);
    return is_cyclic_3(b) ? markov_constant(p, q, r) : markov_constant(p, q, -r);
}

/// Joint check of the two closed-form identities tying delta to the
/// Markov constant in rank 3.
struct MarkovIdentityReport {
    Rank3Params params;
    Int det_companion;   // det(S(B)), exact
    Int det_formula;     // 2pqr - 2p^2 - 2q^2 - 2r^2 + 8
    DeltaResidue delta_value;
    Int c;               // C(B)
    bool det_ok = false;   // det_companion == det_formula
    bool delta_ok = false; // delta == 2*C(B) (mod 4)
};

inline MarkovIdentityReport markov_delta_identity(const SkewMatrix& b) {
    MarkovIdentityReport rep;
    rep.params = rank3_params(b);
    const Int &p = rep.params.p, &q = rep.params.q, &r = rep.params.r;
    rep.det_companion = det_exact(companion(b).s);
    rep.det_formula = 2 * p * q * r - 2 * p * p - 2 * q * q - 2 * r * r + 8;
    rep.delta_value = delta(b);
    rep.c = c_invariant(b);
    rep.det_ok = (rep.det_companion == rep.det_formula);
    rep.delta_ok = (floor_mod(Int(2) * rep.c, 4) == rep.delta_value.value);
    return rep;
}

} // namespace skewmut
