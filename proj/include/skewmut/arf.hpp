#pragma once

#include "skewmut/skew.hpp"

#include <bit>
#include <cstdint>
#include <optional>

namespace skewmut {

/// Vector over GF(2), packed into 64-bit words.
class BitVec {
public:
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i) {
        BitVec v(n);
        v.set(i, true);
        return v;
    }

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }

    /// Dot product over GF(2): parity of the AND.
    friend int dot(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.w_.size(); ++i) acc ^= a.w_[i] & b.w_[i];
        return std::popcount(acc) & 1;
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.n_ == b.n_ && a.w_ == b.w_;
    }
    friend bool operator!=(const BitVec& a, const BitVec& b) { return !(a == b); }

    std::vector<int> bits() const {
        std::vector<int> out(n_);
        for (std::size_t i = 0; i < n_; ++i) out[i] = get(i) ? 1 : 0;
        return out;
    }

private:
    std::size_t n_;
    std::vector<std::uint64_t> w_;
};

/// Mod-2 reduction of a skew-symmetric matrix: a symmetric bilinear form
/// with zero diagonal on GF(2)^n.
class BitMatrix {
public:
    static BitMatrix from_skew(const SkewMatrix& b) {
        BitMatrix m(b.size());
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j)
                if (b(i, j) % 2 != 0) m.rows_[i].set(j, true);
        return m;
    }

    explicit BitMatrix(std::size_t n) : n_(n), rows_(n, BitVec(n)) {}

    std::size_t size() const { return n_; }
    bool bit(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
    const BitVec& row(std::size_t i) const { return rows_[i]; }

    /// u^t B v over GF(2).
    int pairing(const BitVec& u, const BitVec& v) const {
        int acc = 0;
        for (std::size_t i = 0; i < n_; ++i)
            if (u.get(i)) acc ^= dot(rows_[i], v);
        return acc;
    }

    BitVec column(std::size_t j) const {
        BitVec c(n_);
        for (std::size_t i = 0; i < n_; ++i) c.set(i, bit(i, j));
        return c;
    }

private:
    std::size_t n_;
    std::vector<BitVec> rows_;
};

/// Rank of b over GF(2); even for symmetric zero-diagonal forms.
inline std::size_t rank_mod2(const SkewMatrix& b) {
    BitMatrix m = BitMatrix::from_skew(b);
    const std::size_t n = b.size();
    std::vector<BitVec> rows;
    rows.reserve(n);
    for (std::size_t i = 0; i < n; ++i) rows.push_back(m.row(i));
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t pivot = rank;
        while (pivot < n && !rows[pivot].get(col)) ++pivot;
        if (pivot == n) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        ++rank;
    }
    return rank;
}

/// Hyperbolic pairs (e_i, f_i) with e_i B f_j = delta_ij and
/// e_i B e_j = f_i B f_j = 0, plus a basis of the radical.
struct SymplecticBasis {
    std::vector<std::pair<BitVec, BitVec>> pairs;
    std::vector<BitVec> radical;
};

/// Greedy extraction with the lowest-index rule: the first candidate
/// pairing nontrivially with a later one is matched with its first
/// partner; the rest are corrected to pair to zero with both.
inline SymplecticBasis symplectic_reduce(const BitMatrix& form, std::vector<BitVec> cands) {
    SymplecticBasis out;
    for (;;) {
        std::size_t ei = cands.size(), fi = 0;
        for (std::size_t i = 0; i < cands.size() && ei == cands.size(); ++i)
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (form.pairing(cands[i], cands[j])) {
                    ei = i;
                    fi = j;
                    break;
                }
        if (ei == cands.size()) break;
        BitVec e = cands[ei], f = cands[fi];
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(fi));
        cands.erase(cands.begin() + static_cast<std::ptrdiff_t>(ei));
        for (auto& w : cands) {
            const int pf = form.pairing(w, f);
            const int pe = form.pairing(w, e);
            if (pf) w ^= e;
            if (pe) w ^= f;
        }
        out.pairs.emplace_back(std::move(e), std::move(f));
    }
    for (auto& w : cands)
        if (w.any()) out.radical.push_back(std::move(w));
    return out;
}

/// Symplectic basis of GF(2)^n extracted from the unit vectors.
inline SymplecticBasis symplectic_basis(const SkewMatrix& b) {
    const std::size_t n = b.size();
    std::vector<BitVec> units;
    units.reserve(n);
    for (std::size_t i = 0; i < n; ++i) units.push_back(BitVec::unit(n, i));
    return symplectic_reduce(BitMatrix::from_skew(b), std::move(units));
}

/// Validity of the pairing identities for a (possibly external) basis.
inline bool check_symplectic(const SkewMatrix& b, const SymplecticBasis& sb) {
    BitMatrix form = BitMatrix::from_skew(b);
    const auto& ps = sb.pairs;
    for (std::size_t i = 0; i < ps.size(); ++i)
        for (std::size_t j = 0; j < ps.size(); ++j) {
            if (form.pairing(ps[i].first, ps[j].first) != 0) return false;
            if (form.pairing(ps[i].second, ps[j].second) != 0) return false;
            if (form.pairing(ps[i].first, ps[j].second) != (i == j ? 1 : 0)) return false;
        }
    std::vector<BitVec> all;
    for (const auto& p : ps) {
        all.push_back(p.first);
        all.push_back(p.second);
    }
    for (const auto& r : sb.radical) all.push_back(r);
    for (const auto& r : sb.radical)
        for (const auto& v : all)
            if (form.pairing(r, v) != 0) return false;
    return true;
}

/// Quadratic refinement of the form on N = span(basis), pinned to 1 on
/// every basis vector and extended by q(v+w) = q(v) + q(w) + v^t B w.
struct QuadraticRefinement {
    std::vector<BitVec> basis;
};

namespace detail {

/// Solve sum c_i * cols[i] = target over GF(2). Expansions are unique
/// when the columns are independent.
inline std::optional<std::vector<int>> solve_gf2(const std::vector<BitVec>& cols,
                                                 const BitVec& target) {
    const std::size_t n = target.size();
    const std::size_t r = cols.size();
    // rows of the augmented system [cols | target]
    std::vector<BitVec> rows(n, BitVec(r + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < r; ++c) rows[i].set(c, cols[c].get(i));
        rows[i].set(r, target.get(i));
    }
    std::vector<std::size_t> pivot_col;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < r && rank < n; ++col) {
        std::size_t p = rank;
        while (p < n && !rows[p].get(col)) ++p;
        if (p == n) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t i = 0; i < n; ++i)
            if (i != rank && rows[i].get(col)) rows[i] ^= rows[rank];
        pivot_col.push_back(col);
        ++rank;
    }
    for (std::size_t i = rank; i < n; ++i)
        if (rows[i].get(r)) return std::nullopt; // inconsistent
    std::vector<int> coeff(r, 0);
    for (std::size_t i = 0; i < rank; ++i) coeff[pivot_col[i]] = rows[i].get(r) ? 1 : 0;
    return coeff;
}

} // namespace detail

/// The deterministic refinement: N is spanned by the unit vectors at the
/// lexicographically first maximal independent column set of B mod 2;
/// the restriction of the form to N is nondegenerate.
inline QuadraticRefinement deterministic_refinement(const SkewMatrix& b) {
    BitMatrix m = BitMatrix::from_skew(b);
    const std::size_t n = b.size();
    QuadraticRefinement q;
    std::vector<BitVec> echelon; // reduced columns, one pivot each
    std::vector<std::size_t> pivots;
    for (std::size_t j = 0; j < n; ++j) {
        BitVec v = m.column(j);
        for (std::size_t k = 0; k < echelon.size(); ++k)
            if (v.get(pivots[k])) v ^= echelon[k];
        if (!v.any()) continue;
        std::size_t p = 0;
        while (!v.get(p)) ++p;
        echelon.push_back(std::move(v));
        pivots.push_back(p);
        q.basis.push_back(BitVec::unit(n, j));
    }
    return q;
}

/// q(v) for v in N, by expanding v in the refinement basis and folding
/// q(x + w) = q(x) + q(w) + x^t B w one basis vector at a time.
inline int q_value(const QuadraticRefinement& q, const SkewMatrix& b, const BitVec& v) {
    if (v.size() != b.size())
        throw std::invalid_argument("q_value: vector size mismatch");
    auto coeff = detail::solve_gf2(q.basis, v);
    if (!coeff) throw std::domain_error("q_value: vector outside the refinement span");
    BitMatrix form = BitMatrix::from_skew(b);
    int val = 0;
    BitVec acc(v.size());
    for (std::size_t i = 0; i < q.basis.size(); ++i) {
        if (!(*coeff)[i]) continue;
        val ^= 1 ^ form.pairing(acc, q.basis[i]);
        acc ^= q.basis[i];
    }
    return val;
}

/// Arf invariant of the deterministic refinement: sum of q(e_i) q(f_i)
/// over a symplectic basis of N extracted with the lowest-index rule.
/// Rank 0 gives the empty sum, 0.
inline int arf_invariant(const SkewMatrix& b) {
    QuadraticRefinement q = deterministic_refinement(b);
    BitMatrix form = BitMatrix::from_skew(b);
    SymplecticBasis sb = symplectic_reduce(form, q.basis);
    if (!sb.radical.empty())
        throw std::logic_error("arf_invariant: restriction to N is degenerate");
    int arf = 0;
    for (const auto& [e, f] : sb.pairs) arf ^= q_value(q, b, e) & q_value(q, b, f);
    return arf;
}

/// Arf invariant computed against an explicitly supplied symplectic basis
/// and refinement basis. The pairing identities are validated, the pair
/// count must equal rank/2, and every vector must lie in the refinement
/// span.
inline int arf_with_basis(const SkewMatrix& b, const SymplecticBasis& sb,
                          const QuadraticRefinement& q) {
    if (!check_symplectic(b, sb))
        throw std::domain_error("arf_with_basis: pairing identities fail");
    if (2 * sb.pairs.size() != rank_mod2(b))
        throw std::domain_error("arf_with_basis: pair count does not match rank");
    int arf = 0;
    for (const auto& [e, f] : sb.pairs) arf ^= q_value(q, b, e) & q_value(q, b, f);
    return arf;
}

} // namespace skewmut
