#include "limifrob/padic/padic_series.hpp"

#include <algorithm>

#include "limifrob/errors.hpp"

namespace limifrob {

PadicSeries::PadicSeries(long p, int order) : c_(order, PadicScalar::zero(p, kInfiniteValuation)) {}

PadicSeries PadicSeries::derivative() const {
    if (c_.empty()) return {};
    std::vector<PadicScalar> d;
    d.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * PadicScalar(static_cast<long>(i)));
    return PadicSeries(std::move(d));
}

PadicSeries PadicSeries::truncate(int order) const {
    if (order >= this->order()) return *this;
    return PadicSeries(std::vector<PadicScalar>(c_.begin(), c_.begin() + std::max(order, 0)));
}

PadicSeries operator+(const PadicSeries& a, const PadicSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<PadicScalar> c(n);
    for (int i = 0; i < n; ++i) c[i] = a[i] + b[i];
    return PadicSeries(std::move(c));
}

PadicSeries operator-(const PadicSeries& a, const PadicSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<PadicScalar> c(n);
    for (int i = 0; i < n; ++i) c[i] = a[i] - b[i];
    return PadicSeries(std::move(c));
}

PadicSeries operator*(const PadicSeries& a, const PadicSeries& b) {
    const int n = std::min(a.order(), b.order());
    std::vector<PadicScalar> c(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= i; ++j) c[i] += a[j] * b[i - j];
    return PadicSeries(std::move(c));
}

PadicSeriesMatrix::PadicSeriesMatrix(std::size_t rows, std::size_t cols, long p, int order)
    : rows_(rows), cols_(cols), order_(order), e_(rows * cols, PadicSeries(p, order)) {}

PadicSeriesMatrix operator+(const PadicSeriesMatrix& a, const PadicSeriesMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("series matrix sum");
    PadicSeriesMatrix c = a;
    c.order_ = std::min(a.order_, b.order_);
    for (std::size_t i = 0; i < c.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
    return c;
}

PadicSeriesMatrix operator*(const PadicSeriesMatrix& a, const PadicSeriesMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("series matrix product");
    PadicSeriesMatrix c;
    c.rows_ = a.rows_;
    c.cols_ = b.cols_;
    c.order_ = std::min(a.order_, b.order_);
    c.e_.assign(c.rows_ * c.cols_, PadicSeries(std::vector<PadicScalar>(c.order_)));
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t j = 0; j < b.cols_; ++j)
            for (std::size_t k = 0; k < a.cols_; ++k) c(i, j) = c(i, j) + a(i, k) * b(k, j);
    return c;
}

PadicSeriesMatrix PadicSeriesMatrix::derivative() const {
    PadicSeriesMatrix d = *this;
    d.order_ = std::max(order_ - 1, 0);
    for (auto& s : d.e_) s = s.derivative();
    return d;
}

}  // namespace limifrob
