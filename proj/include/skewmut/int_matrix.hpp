#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace skewmut {

/// Exact arbitrary-precision integer used for every matrix entry.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& v) { return v < 0 ? Int(-v) : v; }

/// Sign in {-1, 0, +1}.
inline int sign_of(const Int& v) { return v < 0 ? -1 : (v > 0 ? 1 : 0); }

/// Least non-negative residue of v modulo m (m > 0).
inline Int floor_mod(const Int& v, const Int& m) {
    Int r = v % m;
    if (r < 0) r += m;
    return r;
}

/// Dense row-major matrix over the integers. All arithmetic is exact;
/// entries have no magnitude cap.
class IntMatrix {
public:
    IntMatrix() : rows_(0), cols_(0) {}

    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
    }

    IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
        : rows_(rows), cols_(cols), entries_(std::move(entries)) {
        if (rows == 0 || cols == 0)
            throw std::invalid_argument("IntMatrix: dimensions must be positive");
        if (entries_.size() != rows * cols)
            throw std::invalid_argument("IntMatrix: entry count does not match dimensions");
    }

    /// Construct from nested braces, e.g. IntMatrix{{0, 1}, {-1, 0}}.
    IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
        rows_ = rows.size();
        if (rows_ == 0) throw std::invalid_argument("IntMatrix: empty initializer");
        cols_ = rows.begin()->size();
        if (cols_ == 0) throw std::invalid_argument("IntMatrix: empty row");
        entries_.reserve(rows_ * cols_);
        for (const auto& r : rows) {
            if (r.size() != cols_)
                throw std::invalid_argument("IntMatrix: ragged initializer rows");
            for (long long v : r) entries_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    // 0-based element access; indices at module boundaries (mutation
    // directions, elementary positions) are 1-based instead.
    Int& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Int& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    const std::vector<Int>& entries() const { return entries_; }

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
    }
    friend bool operator!=(const IntMatrix& a, const IntMatrix& b) { return !(a == b); }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b, "operator+");
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] += b.entries_[i];
        return out;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b, "operator-");
        IntMatrix out = a;
        for (std::size_t i = 0; i < out.entries_.size(); ++i) out.entries_[i] -= b.entries_[i];
        return out;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix out = a;
        for (auto& e : out.entries_) e = -e;
        return out;
    }

    friend IntMatrix operator*(const Int& s, const IntMatrix& a) {
        IntMatrix out = a;
        for (auto& e : out.entries_) e *= s;
        return out;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_)
            throw std::invalid_argument("operator*: inner dimensions differ");
        IntMatrix out(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const Int& aik = a(i, k);
                if (aik == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    out(i, j) += aik * b(k, j);
            }
        return out;
    }

    bool is_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != (*this)(j, i)) return false;
        return true;
    }

    bool is_skew_symmetric() const {
        if (!is_square()) return false;
        for (std::size_t i = 0; i < rows_; ++i) {
            if ((*this)(i, i) != 0) return false;
            for (std::size_t j = i + 1; j < cols_; ++j)
                if ((*this)(i, j) != -(*this)(j, i)) return false;
        }
        return true;
    }

    bool has_zero_diagonal() const {
        for (std::size_t i = 0; i < rows_ && i < cols_; ++i)
            if ((*this)(i, i) != 0) return false;
        return true;
    }

    bool is_zero() const {
        for (const auto& e : entries_)
            if (e != 0) return false;
        return true;
    }

    Int trace() const {
        if (!is_square()) throw std::invalid_argument("trace: matrix not square");
        Int t = 0;
        for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
        return t;
    }

    Int max_abs_entry() const {
        Int m = 0;
        for (const auto& e : entries_) {
            Int a = abs_int(e);
            if (a > m) m = a;
        }
        return m;
    }

    /// Row-major lexicographic order; used as the total order for
    /// canonical forms.
    friend bool lex_less(const IntMatrix& a, const IntMatrix& b) {
        a.require_same_shape(b, "lex_less");
        return a.entries_ < b.entries_;
    }

private:
    void require_same_shape(const IntMatrix& other, const char* what) const {
        if (rows_ != other.rows_ || cols_ != other.cols_)
            throw std::invalid_argument(std::string(what) + ": shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<Int> entries_;
};

/// Elementary matrix with a single 1 at (i, j); i, j are 1-based.
inline IntMatrix elementary(std::size_t i, std::size_t j, std::size_t n) {
    if (i < 1 || i > n || j < 1 || j > n)
        throw std::invalid_argument("elementary: index out of range");
    IntMatrix m(n, n);
    m(i - 1, j - 1) = 1;
    return m;
}

/// x * b * x^t for square matrices of equal size.
inline IntMatrix conjugate(const IntMatrix& x, const IntMatrix& b) {
    if (!x.is_square() || !b.is_square() || x.rows() != b.rows())
        throw std::invalid_argument("conjugate: operands must be square of equal size");
    IntMatrix out = x * b * x.transposed();
    if (b.is_skew_symmetric() && !out.is_skew_symmetric())
        throw std::logic_error("conjugate: skew-symmetry lost");
    return out;
}

} // namespace skewmut
