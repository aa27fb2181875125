#pragma once

#include <string>

#include "limifrob/exact/unipoly.hpp"

namespace limifrob {

// Element of Q[t, 1/t] stored as t^valuation * base with base(0) != 0.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(BigRational(c)) {}  // NOLINT
    LaurentPoly(const BigRational& c) : base_(QPoly::constant(c)) {}  // NOLINT
    LaurentPoly(QPoly base, int valuation = 0);

    static LaurentPoly monomial(const BigRational& c, int e) { return LaurentPoly(QPoly::constant(c), e); }

    const QPoly& base() const { return base_; }
    int valuation() const { return val_; }
    bool is_zero() const { return base_.is_zero(); }
    // Largest exponent present (meaningless for zero).
    int top_degree() const { return val_ + base_.degree(); }
    BigRational coeff(int e) const { return base_.coeff(e - val_); }
    bool is_monomial() const { return base_.degree() == 0; }

    LaurentPoly derivative() const;
    LaurentPoly shift(int k) const { return is_zero() ? LaurentPoly() : LaurentPoly(base_, val_ + k); }
    // f(t^k), k >= 1
    LaurentPoly inflate(int k) const { return is_zero() ? LaurentPoly() : LaurentPoly(base_.inflate(k), val_ * k); }
    BigRational eval(const BigRational& x) const;
    // Inverse of a nonzero monomial.
    LaurentPoly monomial_inverse() const;

    LaurentPoly operator-() const { return LaurentPoly(-base_, val_); }
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.val_ == b.val_ && a.base_ == b.base_;
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

private:
    QPoly base_;
    int val_ = 0;
};

std::string to_string(const LaurentPoly& f, const std::string& var = "s");

}  // namespace limifrob
