#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ballvol/rng.hpp"

namespace ballvol::gf2 {

// Dense GF(2) matrix with 64-bit word rows. Sized for desk-scale homology
// (hundreds of columns), where dense bit rows beat any sparse structure.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), bits_(rows * stride_, 0) {}

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (bits_[r * stride_ + c / 64] >> (c % 64)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        std::uint64_t& w = bits_[r * stride_ + c / 64];
        const std::uint64_t mask = std::uint64_t(1) << (c % 64);
        if (v)
            w |= mask;
        else
            w &= ~mask;
    }

    void xor_row(std::size_t dst, std::size_t src) {
        std::uint64_t* d = &bits_[dst * stride_];
        const std::uint64_t* s = &bits_[src * stride_];
        for (std::size_t w = 0; w < stride_; ++w) d[w] ^= s[w];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t w = 0; w < stride_; ++w)
            std::swap(bits_[a * stride_ + w], bits_[b * stride_ + w]);
    }

    std::vector<bool> row(std::size_t r) const {
        std::vector<bool> out(cols_);
        for (std::size_t c = 0; c < cols_; ++c) out[c] = get(r, c);
        return out;
    }

    // this * v  (v indexed by columns)
    std::vector<bool> apply(const std::vector<bool>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("gf2::apply: size mismatch");
        std::vector<bool> out(rows_, false);
        for (std::size_t r = 0; r < rows_; ++r) {
            bool acc = false;
            for (std::size_t c = 0; c < cols_; ++c) acc = acc != (get(r, c) && v[c]);
            out[r] = acc;
        }
        return out;
    }

    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw std::invalid_argument("gf2::operator*: shape mismatch");
        Matrix out(a.rows_, b.cols_);
        for (std::size_t r = 0; r < a.rows_; ++r)
            for (std::size_t k = 0; k < a.cols_; ++k)
                if (a.get(r, k))
                    for (std::size_t w = 0; w < out.stride_; ++w)
                        out.bits_[r * out.stride_ + w] ^= b.bits_[k * b.stride_ + w];
        return out;
    }

    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.bits_ == b.bits_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, stride_ = 0;
    std::vector<std::uint64_t> bits_;
};

inline std::size_t rank(Matrix m) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        ++r;
    }
    return r;
}

// Basis of the null space of m (vectors of length cols).
inline std::vector<std::vector<bool>> null_space(Matrix m) {
    const std::size_t n = m.cols();
    std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < m.rows() && !m.get(pivot, c)) ++pivot;
        if (pivot == m.rows()) continue;
        m.swap_rows(r, pivot);
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m.get(i, c)) m.xor_row(i, r);
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(r);
        ++r;
    }
    std::vector<std::vector<bool>> basis;
    for (std::size_t free_col = 0; free_col < n; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        std::vector<bool> v(n, false);
        v[free_col] = true;
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] >= 0 && m.get(static_cast<std::size_t>(pivot_of_col[c]), free_col))
                v[c] = true;
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b; empty optional when inconsistent.
inline std::optional<std::vector<bool>> solve(Matrix a, std::vector<bool> b) {
    if (b.size() != a.rows()) throw std::invalid_argument("gf2::solve: size mismatch");
    const std::size_t n = a.cols();
    std::vector<std::ptrdiff_t> pivot_of_col(n, -1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < a.rows(); ++c) {
        std::size_t pivot = r;
        while (pivot < a.rows() && !a.get(pivot, c)) ++pivot;
        if (pivot == a.rows()) continue;
        a.swap_rows(r, pivot);
        std::swap(b[r], b[pivot]);
        for (std::size_t i = 0; i < a.rows(); ++i) {
            if (i != r && a.get(i, c)) {
                a.xor_row(i, r);
                b[i] = b[i] != b[r];
            }
        }
        pivot_of_col[c] = static_cast<std::ptrdiff_t>(r);
        ++r;
    }
    for (std::size_t i = r; i < a.rows(); ++i)
        if (b[i]) return std::nullopt;
    std::vector<bool> x(n, false);
    for (std::size_t c = 0; c < n; ++c)
        if (pivot_of_col[c] >= 0) x[c] = b[static_cast<std::size_t>(pivot_of_col[c])];
    return x;
}

inline Matrix random_invertible(std::size_t n, Rng& rng) {
    if (n == 0) return Matrix(0, 0);
    while (true) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m.set(r, c, rng.below(2) == 1);
        if (rank(m) == n) return m;
    }
}

// Inverse of a square invertible matrix.
inline Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("gf2::inverse: not square");
    const std::size_t n = m.rows();
    // Augment [m | I] and reduce.
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug.set(r, c, m.get(r, c));
        aug.set(r, n + r, true);
    }
    std::size_t rr = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pivot = rr;
        while (pivot < n && !aug.get(pivot, c)) ++pivot;
        if (pivot == n) throw std::invalid_argument("gf2::inverse: singular matrix");
        aug.swap_rows(rr, pivot);
        for (std::size_t i = 0; i < n; ++i)
            if (i != rr && aug.get(i, c)) aug.xor_row(i, rr);
        ++rr;
    }
    Matrix out(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) out.set(r, c, aug.get(r, n + c));
    return out;
}

}  // namespace ballvol::gf2
