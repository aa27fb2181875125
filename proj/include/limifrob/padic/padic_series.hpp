#pragma once

#include <vector>

#include "limifrob/padic/padic_scalar.hpp"

namespace limifrob {

// Power series in one variable known modulo u^order; coefficients carry their
// own p-adic precision.
class PadicSeries {
public:
    PadicSeries() = default;
    PadicSeries(long p, int order);  // exact zero series
    PadicSeries(std::vector<PadicScalar> coeffs) : c_(std::move(coeffs)) {}

    int order() const { return static_cast<int>(c_.size()); }
    PadicScalar& operator[](int i) { return c_[i]; }
    const PadicScalar& operator[](int i) const { return c_[i]; }
    const std::vector<PadicScalar>& coeffs() const { return c_; }

    PadicSeries derivative() const;  // order drops by one
    PadicSeries truncate(int order) const;

    friend PadicSeries operator+(const PadicSeries& a, const PadicSeries& b);
    friend PadicSeries operator-(const PadicSeries& a, const PadicSeries& b);
    // Product truncated to the smaller order.
    friend PadicSeries operator*(const PadicSeries& a, const PadicSeries& b);

private:
    std::vector<PadicScalar> c_;
};

// Matrix of series sharing one truncation order.
class PadicSeriesMatrix {
public:
    PadicSeriesMatrix() = default;
    PadicSeriesMatrix(std::size_t rows, std::size_t cols, long p, int order);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    int order() const { return order_; }
    PadicSeries& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const PadicSeries& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    friend PadicSeriesMatrix operator+(const PadicSeriesMatrix& a, const PadicSeriesMatrix& b);
    friend PadicSeriesMatrix operator*(const PadicSeriesMatrix& a, const PadicSeriesMatrix& b);
    PadicSeriesMatrix derivative() const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    int order_ = 0;
    std::vector<PadicSeries> e_;
};

}  // namespace limifrob
