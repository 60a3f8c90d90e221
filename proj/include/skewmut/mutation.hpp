#pragma once

#include "skewmut/skew.hpp"

#include <sstream>
#include <string>

namespace skewmut {

/// Ordered mutation directions, 1-based, applied left to right.
struct MutationSequence {
    std::vector<std::size_t> steps;

    friend bool operator==(const MutationSequence& a, const MutationSequence& b) {
        return a.steps == b.steps;
    }
};

/// Serialized form: comma-separated 1-based indices, e.g. "3,1,4".
/// The empty string is the empty sequence.
inline MutationSequence parse_mutation_sequence(const std::string& text) {
    MutationSequence seq;
    if (text.empty()) return seq;
    std::istringstream in(text);
    std::string token;
    while (std::getline(in, token, ',')) {
        std::size_t pos = 0;
        unsigned long long v = 0;
        try {
            v = std::stoull(token, &pos);
        } catch (const std::exception&) {
            throw std::invalid_argument("mutation sequence: bad index '" + token + "'");
        }
        if (pos != token.size() || v == 0)
            throw std::invalid_argument("mutation sequence: bad index '" + token + "'");
        seq.steps.push_back(static_cast<std::size_t>(v));
    }
    return seq;
}

inline std::string to_string(const MutationSequence& seq) {
    std::string out;
    for (std::size_t i = 0; i < seq.steps.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(seq.steps[i]);
    }
    return out;
}

/// M_k = J_k + E_k: identity except for -1 at (k,k) and the column-k
/// entries max(0, -b_ik). Unimodular with det(M_k) = -1.
struct ReplicatingMatrix {
    std::size_t k; // 1-based direction
    IntMatrix mat;
};

inline ReplicatingMatrix replicating_matrix(const SkewMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("replicating_matrix: direction out of range");
    IntMatrix m = IntMatrix::identity(n);
    const std::size_t kc = k - 1;
    m(kc, kc) = -1;
    for (std::size_t i = 0; i < n; ++i) {
        if (i == kc) continue;
        const Int& bik = b(i, kc);
        if (bik < 0) m(i, kc) += -bik; // e_ik = max(0, -b_ik)
    }
    return ReplicatingMatrix{k, std::move(m)};
}

/// Matrix mutation at direction k: M_k * B * M_k^t.
inline SkewMatrix mutate(const SkewMatrix& b, std::size_t k) {
    const IntMatrix m = replicating_matrix(b, k).mat;
    IntMatrix out = m * b.mat() * m.transposed();
    if (!out.is_skew_symmetric())
        throw std::logic_error("mutate: result not skew-symmetric");
    return SkewMatrix(std::move(out));
}

/// Independent oracle for mutate via the classical entrywise rule:
/// entries in row or column k are negated, the rest gain
/// sign(b_ik) * max(0, b_ik * b_kj), with sign(0) = 0.
inline SkewMatrix mutate_entrywise(const SkewMatrix& b, std::size_t k) {
    const std::size_t n = b.size();
    if (k < 1 || k > n)
        throw std::invalid_argument("mutate_entrywise: direction out of range");
    const std::size_t kc = k - 1;
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == kc || j == kc) {
                out(i, j) = -b(i, j);
                continue;
            }
            Int v = b(i, j);
            const Int prod = b(i, kc) * b(kc, j);
            if (prod > 0) v += sign_of(b(i, kc)) * prod;
            out(i, j) = std::move(v);
        }
    return SkewMatrix(std::move(out));
}

inline SkewMatrix mutate_sequence(const SkewMatrix& b, const MutationSequence& seq) {
    SkewMatrix out = b;
    for (std::size_t k : seq.steps) out = mutate(out, k);
    return out;
}

/// Simultaneous row/column permutation P * B * P^t.
inline SkewMatrix permute(const SkewMatrix& b, const PermutationMatrix& p) {
    const std::size_t n = b.size();
    if (p.size() != n) throw std::invalid_argument("permute: size mismatch");
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out(p.image(i), p.image(j)) = b(i, j);
    return SkewMatrix(std::move(out));
}

} // namespace skewmut
