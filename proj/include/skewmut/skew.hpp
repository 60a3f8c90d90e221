#pragma once

#include "skewmut/int_matrix.hpp"

#include <numeric>

namespace skewmut {

/// Square integer matrix with B = -B^t (hence zero diagonal), validated
/// at construction. Immutable afterwards.
class SkewMatrix {
public:
    explicit SkewMatrix(IntMatrix m) : mat_(std::move(m)) {
        if (!mat_.is_square())
            throw std::invalid_argument("SkewMatrix: matrix not square");
        if (!mat_.is_skew_symmetric())
            throw std::domain_error("SkewMatrix: matrix not skew-symmetric");
    }

    SkewMatrix(std::initializer_list<std::initializer_list<long long>> rows)
        : SkewMatrix(IntMatrix(rows)) {}

    static SkewMatrix zero(std::size_t n) { return SkewMatrix(IntMatrix(n, n)); }

    std::size_t size() const { return mat_.rows(); }
    const IntMatrix& mat() const { return mat_; }
    const Int& operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }

    friend bool operator==(const SkewMatrix& a, const SkewMatrix& b) {
        return a.mat_ == b.mat_;
    }
    friend bool operator!=(const SkewMatrix& a, const SkewMatrix& b) { return !(a == b); }
    friend bool lex_less(const SkewMatrix& a, const SkewMatrix& b) {
        return lex_less(a.mat_, b.mat_);
    }

    friend SkewMatrix operator-(const SkewMatrix& a) { return SkewMatrix(-a.mat_); }

private:
    IntMatrix mat_;
};

/// Bijection on [n] stored as 0-based images; induces the matrix P with
/// P[image(i)][i] = 1, so that P*B*P^t relabels index i as image(i).
class PermutationMatrix {
public:
    static PermutationMatrix identity(std::size_t n) {
        std::vector<std::size_t> im(n);
        std::iota(im.begin(), im.end(), std::size_t{0});
        return PermutationMatrix(std::move(im));
    }

    /// One-line notation with 1-based images: {2,1,3} swaps 1 and 2.
    static PermutationMatrix from_one_line(const std::vector<std::size_t>& images_1based) {
        std::vector<std::size_t> im;
        im.reserve(images_1based.size());
        for (std::size_t v : images_1based) {
            if (v < 1 || v > images_1based.size())
                throw std::invalid_argument("PermutationMatrix: image out of range");
            im.push_back(v - 1);
        }
        return PermutationMatrix(std::move(im));
    }

    /// Simple transposition s_k swapping k and k+1 (k 1-based, k in [n-1]).
    static PermutationMatrix transposition(std::size_t n, std::size_t k) {
        if (k < 1 || k >= n)
            throw std::invalid_argument("PermutationMatrix: transposition index out of range");
        auto p = identity(n);
        std::swap(p.images_[k - 1], p.images_[k]);
        return p;
    }

    /// From 0-based images; validates bijectivity.
    explicit PermutationMatrix(std::vector<std::size_t> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (std::size_t v : images_) {
            if (v >= images_.size() || seen[v])
                throw std::invalid_argument("PermutationMatrix: not a bijection");
            seen[v] = true;
        }
    }

    std::size_t size() const { return images_.size(); }
    std::size_t image(std::size_t i) const { return images_[i]; }
    const std::vector<std::size_t>& images() const { return images_; }

    PermutationMatrix inverse() const {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
        return PermutationMatrix(std::move(inv));
    }

    /// Composition: (a * b).image(i) == a.image(b.image(i)).
    friend PermutationMatrix operator*(const PermutationMatrix& a, const PermutationMatrix& b) {
        if (a.size() != b.size())
            throw std::invalid_argument("PermutationMatrix: size mismatch");
        std::vector<std::size_t> im(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) im[i] = a.image(b.image(i));
        return PermutationMatrix(std::move(im));
    }

    friend bool operator==(const PermutationMatrix& a, const PermutationMatrix& b) {
        return a.images_ == b.images_;
    }

    IntMatrix to_matrix() const {
        IntMatrix p(images_.size(), images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) p(images_[i], i) = 1;
        return p;
    }

private:
    std::vector<std::size_t> images_;
};

} // namespace skewmut
