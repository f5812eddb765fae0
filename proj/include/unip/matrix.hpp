#pragma once

// Dense matrices over an exact scalar ring (Fp, Rational, Integer, or a
// Polynomial ring). Matrices are value types; an exemplar zero travels with
// each matrix so scalar parameters (like the Fp modulus) are preserved by
// every construction.
//
// Rank, kernel and inverse use plain Gaussian elimination with exact
// arithmetic and are only available over fields.

#include <stdexcept>
#include <string>
#include <vector>

#include "unip/fp.hpp"

namespace unip {

template <typename T>
class Matrix {
  public:
    Matrix(int rows, int cols, T zero)
        : rows_(rows), cols_(cols), zero_(std::move(zero)), a_(static_cast<std::size_t>(rows) * cols, zero_) {
        if (rows < 0 || cols < 0) throw std::invalid_argument("Matrix: negative dimension");
    }

    static Matrix zeros(int rows, int cols, const T& exemplar) {
        return Matrix(rows, cols, ring_ops<T>::zero(exemplar));
    }

    static Matrix identity(int n, const T& exemplar) {
        Matrix m = zeros(n, n, exemplar);
        const T one = ring_ops<T>::one(exemplar);
        for (int i = 0; i < n; ++i) m(i, i) = one;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const T& zero() const { return zero_; }

    T& operator()(int i, int j) { return a_.at(static_cast<std::size_t>(i) * cols_ + j); }
    const T& operator()(int i, int j) const { return a_.at(static_cast<std::size_t>(i) * cols_ + j); }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] += o.a_[k];
        return r;
    }

    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix r = *this;
        for (std::size_t k = 0; k < a_.size(); ++k) r.a_[k] = r.a_[k] - o.a_[k];
        return r;
    }

    Matrix operator-() const {
        Matrix r = *this;
        for (auto& x : r.a_) x = zero_ - x;
        return r;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("Matrix: shape mismatch in product");
        Matrix r = zeros(rows_, o.cols_, zero_);
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const T& aik = (*this)(i, k);
                if (aik == zero_) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    const T& bkj = o(k, j);
                    if (bkj == zero_) continue;
                    r(i, j) += aik * bkj;
                }
            }
        }
        return r;
    }

    Matrix scaled(const T& k) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * k;
        return r;
    }

    Matrix pow(unsigned long e) const {
        require_square();
        Matrix r = identity(rows_, zero_);
        Matrix b = *this;
        while (e > 0) {
            if (e & 1) r = r * b;
            e >>= 1;
            if (e) b = b * b;
        }
        return r;
    }

    Matrix transpose() const {
        Matrix r = zeros(cols_, rows_, zero_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }

    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == zero_)) return false;
        return true;
    }

    bool is_identity() const {
        if (rows_ != cols_) return false;
        return *this == identity(rows_, zero_);
    }

    bool is_strictly_upper() const {
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j <= i && j < cols_; ++j)
                if (!((*this)(i, j) == zero_)) return false;
        return true;
    }

    void require_square() const {
        if (rows_ != cols_) throw std::invalid_argument("Matrix: square matrix required");
    }

  private:
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("Matrix: shape mismatch");
    }

    int rows_, cols_;
    T zero_;
    std::vector<T> a_;
};

// Least e with X^e = 0; rejects non-nilpotent input.
template <typename T>
int nilpotence_degree(const Matrix<T>& x) {
    x.require_square();
    Matrix<T> power = Matrix<T>::identity(x.rows(), x.zero());
    for (int e = 0; e <= x.rows(); ++e) {
        if (power.is_zero()) return e;
        power = power * x;
    }
    throw std::invalid_argument("nilpotence_degree: matrix is not nilpotent");
}

// Row echelon reduction in place; returns the pivot columns. Field scalars only.
template <typename T>
std::vector<int> row_reduce(Matrix<T>& m) {
    const T zero = ring_ops<T>::zero(m.zero());
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
        int p = -1;
        for (int i = row; i < m.rows(); ++i) {
            if (!(m(i, col) == zero)) {
                p = i;
                break;
            }
        }
        if (p < 0) continue;
        if (p != row)
            for (int j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(row, j));
        const T inv = ring_ops<T>::invert(m(row, col));
        for (int j = col; j < m.cols(); ++j) m(row, j) = m(row, j) * inv;
        for (int i = 0; i < m.rows(); ++i) {
            if (i == row || m(i, col) == zero) continue;
            const T f = m(i, col);
            for (int j = col; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

template <typename T>
int rank(Matrix<T> m) {
    return static_cast<int>(row_reduce(m).size());
}

// Columns form a basis of the kernel.
template <typename T>
Matrix<T> kernel_basis(Matrix<T> m) {
    const int n = m.cols();
    std::vector<int> pivots = row_reduce(m);
    std::vector<bool> is_pivot(n, false);
    for (int c : pivots) is_pivot[c] = true;
    const T one = ring_ops<T>::one(m.zero());
    Matrix<T> ker = Matrix<T>::zeros(n, n - static_cast<int>(pivots.size()), m.zero());
    int out = 0;
    for (int freec = 0; freec < n; ++freec) {
        if (is_pivot[freec]) continue;
        ker(freec, out) = one;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            ker(pivots[r], out) = ring_ops<T>::zero(m.zero()) - m(static_cast<int>(r), freec);
        ++out;
    }
    return ker;
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& m) {
    m.require_square();
    const int n = m.rows();
    Matrix<T> aug = Matrix<T>::zeros(n, 2 * n, m.zero());
    const T one = ring_ops<T>::one(m.zero());
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug(i, j) = m(i, j);
        aug(i, n + i) = one;
    }
    std::vector<int> pivots = row_reduce(aug);
    if (static_cast<int>(pivots.size()) != n || pivots[n - 1] != n - 1)
        throw std::domain_error("Matrix: not invertible");
    Matrix<T> inv = Matrix<T>::zeros(n, n, m.zero());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
    return inv;
}

// Horizontal stack of equally-tall matrices.
template <typename T>
Matrix<T> hstack(const std::vector<Matrix<T>>& parts) {
    if (parts.empty()) throw std::invalid_argument("hstack: empty");
    int cols = 0;
    for (const auto& p : parts) cols += p.cols();
    Matrix<T> r = Matrix<T>::zeros(parts[0].rows(), cols, parts[0].zero());
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) r(i, off + j) = p(i, j);
        off += p.cols();
    }
    return r;
}

// Vertical stack of equally-wide matrices.
template <typename T>
Matrix<T> vstack(const std::vector<Matrix<T>>& parts) {
    if (parts.empty()) throw std::invalid_argument("vstack: empty");
    int rows = 0;
    for (const auto& p : parts) rows += p.rows();
    Matrix<T> r = Matrix<T>::zeros(rows, parts[0].cols(), parts[0].zero());
    int off = 0;
    for (const auto& p : parts) {
        for (int i = 0; i < p.rows(); ++i)
            for (int j = 0; j < p.cols(); ++j) r(off + i, j) = p(i, j);
        off += p.rows();
    }
    return r;
}

}  // namespace unip
