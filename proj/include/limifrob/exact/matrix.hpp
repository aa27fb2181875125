#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

#include "limifrob/errors.hpp"

namespace limifrob {

// Dense row-major matrix over a ring R. R(0) and R(1) must be the ring's zero and one.
template <class R>
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, R(0)) {}
    Matrix(std::size_t rows, std::size_t cols, std::vector<R> entries)
        : rows_(rows), cols_(cols), a_(std::move(entries)) {
        if (a_.size() != rows * cols) throw DimensionMismatch("Matrix: entry count");
    }

    static Matrix identity(std::size_t n) {
        Matrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    const std::vector<R>& entries() const { return a_; }
    std::vector<R>& entries() { return a_; }

    template <class F>
    auto map(F&& f) const -> Matrix<decltype(f(std::declval<const R&>()))> {
        using S = decltype(f(std::declval<const R&>()));
        std::vector<S> v;
        v.reserve(a_.size());
        for (const auto& x : a_) v.push_back(f(x));
        return Matrix<S>(rows_, cols_, std::move(v));
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
        Matrix b(nr, nc);
        for (std::size_t i = 0; i < nr; ++i)
            for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
        return b;
    }

    std::vector<R> column(std::size_t j) const {
        std::vector<R> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }
    void set_column(std::size_t j, const std::vector<R>& c) {
        for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = c[i];
    }

    bool is_zero() const {
        for (const auto& x : a_)
            if (!(x == R(0))) return false;
        return true;
    }

    Matrix& operator+=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
        return *this;
    }
    Matrix& operator-=(const Matrix& o) {
        check_same(o);
        for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
        return *this;
    }
    friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
    friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
    friend Matrix operator-(Matrix a) {
        for (auto& x : a.a_) x = -x;
        return a;
    }
    friend Matrix operator*(const Matrix& a, const Matrix& b) {
        if (a.cols_ != b.rows_) throw DimensionMismatch("Matrix product: inner dimensions differ");
        Matrix c(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                const R& aik = a(i, k);
                if (aik == R(0)) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
            }
        return c;
    }
    friend Matrix operator*(const R& s, Matrix a) {
        for (auto& x : a.a_) x = s * x;
        return a;
    }
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    std::vector<R> apply(const std::vector<R>& v) const {
        if (v.size() != cols_) throw DimensionMismatch("Matrix::apply");
        std::vector<R> out(rows_, R(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
        return out;
    }

private:
    void check_same(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("Matrix: shapes differ");
    }
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> a_;
};

template <class R>
Matrix<R> power(const Matrix<R>& m, unsigned k) {
    if (!m.is_square()) throw NonSquare("power: matrix not square");
    Matrix<R> r = Matrix<R>::identity(m.rows());
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

}  // namespace limifrob
