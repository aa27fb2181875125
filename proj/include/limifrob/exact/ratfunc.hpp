#pragma once

#include <string>

#include "limifrob/exact/unipoly.hpp"

namespace limifrob {

// Element of Q(t) in lowest terms with a monic denominator.
class RatFunc {
public:
    RatFunc() : den_(QPoly::constant(1)) {}
    RatFunc(long c) : num_(QPoly::constant(BigRational(c))), den_(QPoly::constant(1)) {}  // NOLINT
    RatFunc(const BigRational& c) : num_(QPoly::constant(c)), den_(QPoly::constant(1)) {}  // NOLINT
    RatFunc(QPoly num) : num_(std::move(num)), den_(QPoly::constant(1)) {}  // NOLINT
    RatFunc(QPoly num, QPoly den);

    static RatFunc t() { return RatFunc(QPoly::x()); }

    const QPoly& num() const { return num_; }
    const QPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.degree() == 0; }

    BigRational eval(const BigRational& x) const;  // throws on a pole
    RatFunc derivative() const;
    RatFunc inverse() const;
    // f(t^k)
    RatFunc inflate(int k) const { return RatFunc(num_.inflate(k), den_.inflate(k)); }
    // Order of vanishing at t = 0 (negative for a pole).
    int valuation_at_zero() const;

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

private:
    void normalize();
    QPoly num_;
    QPoly den_;
};

std::string to_string(const RatFunc& f, const std::string& var = "t");

}  // namespace limifrob
