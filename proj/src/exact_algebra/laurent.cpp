#include "limifrob/exact/laurent.hpp"

#include <stdexcept>

namespace limifrob {

LaurentPoly::LaurentPoly(QPoly base, int valuation) {
    const int low = base.low_degree();
    if (low < 0) return;  // zero
    base_ = low > 0 ? base.shift(-low) : std::move(base);
    val_ = valuation + low;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    const int v = std::min(a.val_, b.val_);
    return LaurentPoly(a.base_.shift(a.val_ - v) + b.base_.shift(b.val_ - v), v);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return LaurentPoly();
    if (a.is_monomial()) return LaurentPoly(b.base_ * a.base_.coeff(0), a.val_ + b.val_);
    if (b.is_monomial()) return LaurentPoly(a.base_ * b.base_.coeff(0), a.val_ + b.val_);
    return LaurentPoly(a.base_ * b.base_, a.val_ + b.val_);
}

LaurentPoly LaurentPoly::derivative() const {
    if (is_zero()) return {};
    std::vector<BigRational> v(base_.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) v[i] = base_.coeffs()[i] * BigRational(val_ + static_cast<long>(i));
    return LaurentPoly(QPoly(std::move(v)), val_ - 1);
}

BigRational LaurentPoly::eval(const BigRational& x) const {
    if (is_zero()) return 0;
    if (x == 0 && val_ < 0) throw std::domain_error("LaurentPoly::eval at 0 with negative powers");
    BigRational xv = 1;
    const BigRational base = val_ >= 0 ? x : BigRational(1 / x);
    for (int i = 0; i < std::abs(val_); ++i) xv *= base;
    return xv * base_.eval(x);
}

LaurentPoly LaurentPoly::monomial_inverse() const {
    if (!is_monomial()) throw std::domain_error("LaurentPoly::monomial_inverse: not a monomial");
    return monomial(1 / base_.coeff(0), -val_);
}

std::string to_string(const LaurentPoly& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int e = f.valuation(); e <= f.top_degree(); ++e) {
        BigRational c = f.coeff(e);
        if (c == 0) continue;
        std::string s = c.get_str();
        const bool neg = s[0] == '-';
        if (neg) s = s.substr(1);
        out += out.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (e == 0)
            out += s;
        else {
            if (s != "1") out += s + "*";
            out += var;
            if (e != 1) out += "^" + std::to_string(e);
        }
    }
    return out;
}

}  // namespace limifrob
