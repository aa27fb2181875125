#include "limifrob/exact/ratfunc.hpp"

#include <stdexcept>

namespace limifrob {

RatFunc::RatFunc(QPoly num, QPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("RatFunc: zero denominator");
    normalize();
}

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = QPoly::constant(1);
        return;
    }
    if (den_.degree() > 0) {
        QPoly g = gcd_q(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.exact_div(g);
            den_ = den_.exact_div(g);
        }
    }
    BigRational lc = den_.leading();
    if (lc != 1) {
        BigRational inv = 1 / lc;
        num_ *= inv;
        den_ *= inv;
    }
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("RatFunc::inverse of zero");
    return RatFunc(den_, num_);
}

BigRational RatFunc::eval(const BigRational& x) const {
    BigRational d = den_.eval(x);
    if (d == 0) throw std::domain_error("RatFunc::eval at a pole");
    return num_.eval(x) / d;
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

int RatFunc::valuation_at_zero() const {
    if (is_zero()) return kInfiniteValuation;
    return num_.low_degree() - den_.low_degree();
}

std::string to_string(const RatFunc& f, const std::string& var) {
    if (f.is_polynomial()) return to_string(f.num(), var);
    return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

}  // namespace limifrob
