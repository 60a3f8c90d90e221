#pragma once

#include "skewmut/delta.hpp"
#include "skewmut/mutation.hpp"

#include <utility>

namespace skewmut {

// Executable forms of the identities behind the mutation invariance of
// delta. Each oracle validates its preconditions and raises on violation:
// these functions exist to falsify, not to tolerate bad inputs.

/// If Z = V - V^t = W - W^t then V - W is symmetric. Returns the symmetry
/// of V - W after validating both decompositions.
inline bool lemma1_check(const SkewMatrix& z, const IntMatrix& v, const IntMatrix& w) {
    if (v.rows() != z.size() || !v.is_square() || w.rows() != z.size() || !w.is_square())
        throw std::invalid_argument("lemma1_check: shape mismatch");
    if (v - v.transposed() != z.mat() || w - w.transposed() != z.mat())
        throw std::domain_error("lemma1_check: decomposition precondition violated");
    return (v - w).is_symmetric();
}

/// Diagonal of M_k S(B) M_k^t - S(mu_k(B)): tau_ii = 2 t_ii with t_ii from
/// the closed-form three-way case split. Every t_ii is even, so every
/// tau_ii is divisible by 4.
struct DiagonalProfile {
    std::vector<Int> t;
    std::vector<Int> tau;
};

inline DiagonalProfile lemma3_profile(const SkewMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("lemma3_profile: direction out of range");
    const std::size_t kc = k - 1;

    DiagonalProfile profile;
    profile.t.reserve(n);
    profile.tau.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        Int ti = 0;
        if (i < kc) {
            const Int& bik = b(i, kc);
            Int pos = bik > 0 ? bik : Int(0);
            ti = (bik + pos) * pos;
        } else if (i > kc) {
            const Int& bik = b(i, kc);
            Int neg = bik < 0 ? Int(-bik) : Int(0);
            ti = (bik + neg) * neg;
        }
        profile.tau.push_back(2 * ti);
        profile.t.push_back(std::move(ti));
    }

    // Cross-check against the matrix difference itself.
    const IntMatrix mk = replicating_matrix(b, k).mat;
    const IntMatrix diff =
        conjugate(mk, companion(b).s) - companion(mutate(b, k)).s;
    for (std::size_t i = 0; i < n; ++i) {
        if (diff(i, i) != profile.tau[i])
            throw std::logic_error("lemma3_profile: closed form disagrees with matrix diagonal");
        if (profile.t[i] % 2 != 0 || profile.tau[i] % 4 != 0)
            throw std::logic_error("lemma3_profile: parity claim violated");
    }
    return profile;
}

/// tr(X Y) mod 2 for symmetric X and symmetric zero-diagonal Y; always 0.
inline int lemma2_trace_parity(const IntMatrix& x, const IntMatrix& y) {
    if (!x.is_square() || !y.is_square() || x.rows() != y.rows())
        throw std::invalid_argument("lemma2_trace_parity: shape mismatch");
    if (!x.is_symmetric())
        throw std::domain_error("lemma2_trace_parity: X not symmetric");
    if (!y.is_symmetric() || !y.has_zero_diagonal())
        throw std::domain_error("lemma2_trace_parity: Y not symmetric with zero diagonal");
    const std::size_t n = x.rows();
    Int tr = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) tr += x(i, k) * y(k, i);
    return static_cast<int>(floor_mod(tr, 2));
}

/// (det(R) mod 4, det(R + 2Y) mod 4) for symmetric R and symmetric
/// zero-diagonal Y; the two residues always agree.
inline std::pair<int, int> lemma2_det_shift(const IntMatrix& r, const IntMatrix& y) {
    if (!r.is_square() || !y.is_square() || r.rows() != y.rows())
        throw std::invalid_argument("lemma2_det_shift: shape mismatch");
    if (!r.is_symmetric())
        throw std::domain_error("lemma2_det_shift: R not symmetric");
    if (!y.is_symmetric() || !y.has_zero_diagonal())
        throw std::domain_error("lemma2_det_shift: Y not symmetric with zero diagonal");
    return {det_mod4(r), det_mod4(r + Int(2) * y)};
}

/// P S(B) P^t - S(P B P^t) for the adjacent transposition s_k; equals
/// 2 b_{k,k+1} (eps_{k,k+1} + eps_{k+1,k}) exactly.
inline IntMatrix perm_companion_diff(const SkewMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k < 1 || k >= n)
        throw std::invalid_argument("perm_companion_diff: transposition index out of range");
    const PermutationMatrix p = PermutationMatrix::transposition(n, k);
    const IntMatrix diff =
        conjugate(p.to_matrix(), companion(b).s) - companion(permute(b, p)).s;
    const IntMatrix expected =
        b(k - 1, k) * Int(2) * (elementary(k, k + 1, n) + elementary(k + 1, k, n));
    if (diff != expected)
        throw std::logic_error("perm_companion_diff: closed form disagrees");
    return diff;
}

/// M_k S(B) M_k^t - S(mu_k(B)); equals 2T for the symmetric even-diagonal
/// T = M_k V(B) M_k^t - V(mu_k(B)). The 0/1 reduction T° of T satisfies
/// 2T = 2T° (mod 4); both facts are verified before returning.
inline IntMatrix mutation_companion_diff(const SkewMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("mutation_companion_diff: direction out of range");
    const IntMatrix mk = replicating_matrix(b, k).mat;
    const SkewMatrix mu = mutate(b, k);
    const IntMatrix diff = conjugate(mk, companion(b).s) - companion(mu).s;
    const IntMatrix t = mk * upper_part(b) * mk.transposed() - upper_part(mu);

    if (diff != Int(2) * t)
        throw std::logic_error("mutation_companion_diff: difference is not 2T");
    if (!t.is_symmetric())
        throw std::logic_error("mutation_companion_diff: T not symmetric");
    for (std::size_t i = 0; i < n; ++i) {
        if (t(i, i) % 2 != 0)
            throw std::logic_error("mutation_companion_diff: T diagonal not even");
        for (std::size_t j = 0; j < n; ++j) {
            const Int t0 = floor_mod(t(i, j), 2); // entry of T°
            if (floor_mod(Int(2) * t(i, j) - Int(2) * t0, 4) != 0)
                throw std::logic_error("mutation_companion_diff: 2T != 2T° (mod 4)");
        }
    }
    return diff;
}

} // namespace skewmut
