#include "limifrob/cn/laurent_series.hpp"

#include <algorithm>
#include <stdexcept>

#include "limifrob/errors.hpp"

namespace limifrob {

LaurentSeries::LaurentSeries(long c) : val_(0), prec_(kExact) {
    if (c != 0) c_.emplace_back(c);
    strip();
}

LaurentSeries::LaurentSeries(int val, std::vector<BigRational> c, int prec)
    : val_(val), prec_(prec), c_(std::move(c)) {
    strip();
}

void LaurentSeries::strip() {
    const int room = std::max(0, prec_ - val_);
    if (static_cast<int>(c_.size()) > room) c_.resize(room);
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        val_ = prec_;
        return;
    }
    c_.erase(c_.begin(), c_.begin() + static_cast<long>(lead));
    val_ += static_cast<int>(lead);
}

LaurentSeries LaurentSeries::zero(int prec) { return LaurentSeries(prec, {}, prec); }

LaurentSeries LaurentSeries::from(const LaurentPoly& f, int prec) {
    if (f.is_zero()) return zero(prec);
    return LaurentSeries(f.valuation(), f.base().coeffs(), prec);
}

LaurentSeries LaurentSeries::quotient(const LaurentPoly& num, const QPoly& den, int prec) {
    if (den.is_zero()) throw std::domain_error("LaurentSeries::quotient: zero denominator");
    int v = 0;
    while (den.coeff(v) == 0) ++v;
    if (num.is_zero()) return zero(prec);
    // 1/den = s^-v * (1/u) with u(0) != 0; compute 1/u to the needed length.
    const int need = prec - (num.valuation() - v);
    std::vector<BigRational> inv;
    if (need > 0) {
        inv.resize(need);
        const BigRational u0 = den.coeff(v);
        for (int k = 0; k < need; ++k) {
            BigRational acc = k == 0 ? BigRational(1) : BigRational(0);
            for (int j = 1; j <= std::min(k, den.degree() - v); ++j) acc -= den.coeff(v + j) * inv[k - j];
            acc /= u0;
            inv[k] = acc;
        }
    }
    return LaurentSeries(num.valuation(), num.base().coeffs(), kExact) *
           LaurentSeries(-v, std::move(inv), prec - num.valuation());
}

BigRational LaurentSeries::coeff(int k) const {
    if (k >= prec_) throw PrecisionExhausted("LaurentSeries::coeff beyond precision");
    const int i = k - val_;
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

LaurentSeries LaurentSeries::shift(int k) const {
    const int p = prec_ >= kExact ? kExact : prec_ + k;
    return LaurentSeries(val_ + k, c_, p);
}

LaurentSeries LaurentSeries::derivative() const {
    std::vector<BigRational> d(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) d[i] = c_[i] * (val_ + static_cast<int>(i));
    return LaurentSeries(val_ - 1, std::move(d), prec_ >= kExact ? kExact : prec_ - 1);
}

LaurentSeries LaurentSeries::truncate(int prec) const {
    return LaurentSeries(val_, c_, std::min(prec, prec_));
}

LaurentSeries LaurentSeries::inverse() const {
    if (c_.empty()) throw PrecisionExhausted("LaurentSeries::inverse of a zero series");
    if (prec_ >= kExact && c_.size() != 1) throw std::domain_error("LaurentSeries::inverse of an exact non-monomial");
    const int rel = prec_ >= kExact ? 1 : prec_ - val_;
    std::vector<BigRational> inv(rel);
    const int len = static_cast<int>(c_.size());
    for (int k = 0; k < rel; ++k) {
        BigRational acc = k == 0 ? BigRational(1) : BigRational(0);
        for (int j = 1; j <= std::min(k, len - 1); ++j) acc -= c_[j] * inv[k - j];
        inv[k] = acc / c_[0];
    }
    return LaurentSeries(-val_, std::move(inv), prec_ >= kExact ? kExact : -val_ + rel);
}

LaurentPoly LaurentSeries::head(int bound) const {
    if (bound > prec_) throw PrecisionExhausted("LaurentSeries::head beyond precision");
    if (c_.empty() || bound <= val_) return LaurentPoly();
    std::vector<BigRational> h(c_.begin(), c_.begin() + std::min<long>(bound - val_, static_cast<long>(c_.size())));
    return LaurentPoly(QPoly(std::move(h)), val_);
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int prec = std::min(a.prec_, b.prec_);
    if (a.c_.empty()) return LaurentSeries(b.val_, b.c_, prec);
    if (b.c_.empty()) return LaurentSeries(a.val_, a.c_, prec);
    const int v = std::min(a.val_, b.val_);
    const int top = std::min<long>(prec, std::max<long>(a.val_ + static_cast<long>(a.c_.size()),
                                                        b.val_ + static_cast<long>(b.c_.size())));
    std::vector<BigRational> c(std::max(0, top - v));
    for (std::size_t i = 0; i < a.c_.size() && a.val_ + static_cast<int>(i) < top; ++i) c[a.val_ - v + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size() && b.val_ + static_cast<int>(i) < top; ++i) c[b.val_ - v + i] += b.c_[i];
    return LaurentSeries(v, std::move(c), prec);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    auto cap = [](long x) { return static_cast<int>(std::min<long>(x, LaurentSeries::kExact)); };
    const int prec = cap(std::min<long>(static_cast<long>(a.val_) + b.prec_, static_cast<long>(b.val_) + a.prec_));
    if (a.c_.empty() || b.c_.empty()) return LaurentSeries::zero(prec);
    const int v = a.val_ + b.val_;
    const long natural = static_cast<long>(a.c_.size() + b.c_.size()) - 1;
    const long len = std::min<long>(natural, static_cast<long>(prec) - v);
    if (len <= 0) return LaurentSeries::zero(prec);
    std::vector<BigRational> c(len);
    for (std::size_t i = 0; i < a.c_.size() && static_cast<long>(i) < len; ++i) {
        if (a.c_[i] == 0) continue;
        const std::size_t jmax = std::min<long>(b.c_.size(), len - static_cast<long>(i));
        for (std::size_t j = 0; j < jmax; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentSeries(v, std::move(c), prec);
}

LaurentSeries operator*(const BigRational& c, const LaurentSeries& a) {
    if (c == 0) return LaurentSeries::zero(a.prec_);
    LaurentSeries r = a;
    for (auto& x : r.c_) x *= c;
    return r;
}

}  // namespace limifrob
