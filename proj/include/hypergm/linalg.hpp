#pragma once

#include <optional>
#include <vector>

#include "hypergm/errors.hpp"

namespace hypergm {

/// Minimal dense matrix over an exact field, sized for the tiny systems
/// appearing here (n up to a handful).
template <typename K>
class Matrix {
  public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, K(0)) {}

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = K(1);
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    K& operator()(int i, int j) { return a_[i * cols_ + j]; }
    const K& operator()(int i, int j) const { return a_[i * cols_ + j]; }

    friend bool operator==(const Matrix& x, const Matrix& y) {
        return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
    }
    friend bool operator!=(const Matrix& x, const Matrix& y) { return !(x == y); }

    friend Matrix operator+(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] + y.a_[i];
        return r;
    }
    friend Matrix operator-(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, x.cols_);
        for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] = x.a_[i] - y.a_[i];
        return r;
    }
    friend Matrix operator*(const Matrix& x, const Matrix& y) {
        Matrix r(x.rows_, y.cols_);
        for (int i = 0; i < x.rows_; ++i)
            for (int k = 0; k < x.cols_; ++k) {
                if (x(i, k).is_zero()) continue;
                for (int j = 0; j < y.cols_; ++j)
                    r(i, j) += x(i, k) * y(k, j);
            }
        return r;
    }

    Matrix scaled(const K& s) const {
        Matrix r = *this;
        for (auto& x : r.a_) x = x * s;
        return r;
    }

    template <typename F>
    auto map(F f) const -> Matrix<decltype(f(K(0)))> {
        Matrix<decltype(f(K(0)))> r(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) r(i, j) = f((*this)(i, j));
        return r;
    }

    K det() const {
        Matrix m = *this;
        K d(1);
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int r = c; r < rows_; ++r)
                if (!m(r, c).is_zero()) { p = r; break; }
            if (p < 0) return K(0);
            if (p != c) { m.swap_rows(p, c); d = -d; }
            d = d * m(c, c);
            K inv = m(c, c).inv();
            for (int r = c + 1; r < rows_; ++r) {
                if (m(r, c).is_zero()) continue;
                K f = m(r, c) * inv;
                for (int j = c; j < cols_; ++j) m(r, j) = m(r, j) - f * m(c, j);
            }
        }
        return d;
    }

    int rank() const {
        Matrix m = *this;
        int rk = 0;
        for (int c = 0; c < cols_ && rk < rows_; ++c) {
            int p = -1;
            for (int r = rk; r < rows_; ++r)
                if (!m(r, c).is_zero()) { p = r; break; }
            if (p < 0) continue;
            m.swap_rows(p, rk);
            K inv = m(rk, c).inv();
            for (int r = rk + 1; r < rows_; ++r) {
                if (m(r, c).is_zero()) continue;
                K f = m(r, c) * inv;
                for (int j = c; j < cols_; ++j) m(r, j) = m(r, j) - f * m(rk, j);
            }
            ++rk;
        }
        return rk;
    }

    /// Solves A x = b; empty when A is singular.
    std::optional<std::vector<K>> solve(const std::vector<K>& b) const {
        Matrix m(rows_, cols_ + 1);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j);
            m(i, cols_) = b[i];
        }
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int r = c; r < rows_; ++r)
                if (!m(r, c).is_zero()) { p = r; break; }
            if (p < 0) return std::nullopt;
            m.swap_rows(p, c);
            K inv = m(c, c).inv();
            for (int j = c; j <= cols_; ++j) m(c, j) = m(c, j) * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == c || m(r, c).is_zero()) continue;
                K f = m(r, c);
                for (int j = c; j <= cols_; ++j) m(r, j) = m(r, j) - f * m(c, j);
            }
        }
        std::vector<K> x(cols_);
        for (int i = 0; i < cols_; ++i) x[i] = m(i, cols_);
        return x;
    }

    std::optional<Matrix> inverse() const {
        Matrix aug(rows_, 2 * cols_);
        for (int i = 0; i < rows_; ++i) {
            for (int j = 0; j < cols_; ++j) aug(i, j) = (*this)(i, j);
            aug(i, cols_ + i) = K(1);
        }
        for (int c = 0; c < cols_; ++c) {
            int p = -1;
            for (int r = c; r < rows_; ++r)
                if (!aug(r, c).is_zero()) { p = r; break; }
            if (p < 0) return std::nullopt;
            aug.swap_rows(p, c);
            K inv = aug(c, c).inv();
            for (int j = 0; j < 2 * cols_; ++j) aug(c, j) = aug(c, j) * inv;
            for (int r = 0; r < rows_; ++r) {
                if (r == c || aug(r, c).is_zero()) continue;
                K f = aug(r, c);
                for (int j = 0; j < 2 * cols_; ++j) aug(r, j) = aug(r, j) - f * aug(c, j);
            }
        }
        Matrix out(rows_, cols_);
        for (int i = 0; i < rows_; ++i)
            for (int j = 0; j < cols_; ++j) out(i, j) = aug(i, cols_ + j);
        return out;
    }

  private:
    void swap_rows(int i, int j) {
        if (i == j) return;
        for (int c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
    }

    int rows_, cols_;
    std::vector<K> a_;
};

}  // namespace hypergm
