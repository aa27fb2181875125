#pragma once

#include <vector>

#include "limifrob/exact/laurent.hpp"
#include "limifrob/exact/matrix.hpp"

namespace limifrob {

// A Laurent series in s over Q known modulo s^prec. The stored coefficients
// start at degree val() and are followed by implicit zeros up to prec(), so an
// exact Laurent polynomial has prec() == kExact. A series with no nonzero
// known coefficient is a zero to precision and has val() == prec().
class LaurentSeries {
public:
    static constexpr int kExact = 1 << 28;

    LaurentSeries() : LaurentSeries(0L) {}
    LaurentSeries(long c);  // NOLINT: exact constant, needed by Matrix
    static LaurentSeries zero(int prec);
    static LaurentSeries from(const LaurentPoly& f, int prec);
    // Expansion of num/den at s = 0 to absolute precision prec.
    static LaurentSeries quotient(const LaurentPoly& num, const QPoly& den, int prec);

    int val() const { return val_; }
    int prec() const { return prec_; }
    bool is_zero() const { return c_.empty(); }
    BigRational coeff(int k) const;
    BigRational leading() const { return c_.empty() ? BigRational(0) : c_.front(); }

    LaurentSeries shift(int k) const;
    LaurentSeries derivative() const;
    LaurentSeries truncate(int prec) const;
    // Requires a nonzero series; the result has the same relative precision.
    LaurentSeries inverse() const;
    // Terms of degree < bound (bound <= prec()).
    LaurentPoly head(int bound) const;

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const BigRational& c, const LaurentSeries& a);
    LaurentSeries& operator+=(const LaurentSeries& o) { return *this = *this + o; }
    LaurentSeries& operator-=(const LaurentSeries& o) { return *this = *this - o; }
    // Equality to the common precision.
    friend bool operator==(const LaurentSeries& a, const LaurentSeries& b) { return (a - b).is_zero(); }

private:
    LaurentSeries(int val, std::vector<BigRational> c, int prec);
    void strip();

    int val_ = 0;
    int prec_ = 0;
    std::vector<BigRational> c_;  // c_[i] is the coefficient of s^(val_ + i)
};

using SeriesMatrix = Matrix<LaurentSeries>;

}  // namespace limifrob
