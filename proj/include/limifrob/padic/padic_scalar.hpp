#pragma once

#include <string>

#include "limifrob/exact/numbers.hpp"

namespace limifrob {

// An element p^v * u of Q_p known modulo p^(v+N), with p not dividing u and
// 0 < u < p^N. A value known only to be divisible by p^a is a "zero to
// absolute precision a" (u = 0, v = a, N = 0). Exact values have
// N = kInfiniteValuation; exact integers built from a plain long do not yet
// know their prime and adopt the prime of the first operand they meet, which
// lets generic matrix code write R(0) and R(1).
class PadicScalar {
public:
    PadicScalar() : PadicScalar(0L) {}
    explicit PadicScalar(long a);

    // q known to absolute precision abs_prec (q must be a p-adic number, i.e.
    // any rational; the denominator is inverted p-adically).
    static PadicScalar from_rational(long p, const BigRational& q, int abs_prec);
    // Integer x known modulo p^abs_prec.
    static PadicScalar from_integer(long p, const BigInt& x, int abs_prec);
    static PadicScalar exact(long p, const BigInt& x);
    static PadicScalar zero(long p, int abs_prec);

    long prime() const { return p_; }
    bool is_exact() const { return N_ == kInfiniteValuation; }
    // True when the value is indistinguishable from 0 at its precision.
    bool is_zero() const { return u_ == 0; }
    // For zero values this is the absolute precision.
    int valuation() const { return v_; }
    int relative_precision() const { return N_; }
    int absolute_precision() const;
    const BigInt& unit() const { return u_; }

    // Value modulo p^abs as an integer in [0, p^abs); requires valuation >= 0
    // (or a zero) and abs <= absolute_precision().
    BigInt residue(int abs) const;
    // The rational p^v * u (u the stored representative).
    BigRational to_rational() const;
    // Drop digits so that the absolute precision is at most abs.
    PadicScalar reduce(int abs) const;

    PadicScalar operator-() const;
    PadicScalar& operator+=(const PadicScalar& o);
    PadicScalar& operator-=(const PadicScalar& o);
    PadicScalar& operator*=(const PadicScalar& o);
    PadicScalar& operator/=(const PadicScalar& o);
    friend PadicScalar operator+(PadicScalar a, const PadicScalar& b) { return a += b; }
    friend PadicScalar operator-(PadicScalar a, const PadicScalar& b) { return a -= b; }
    friend PadicScalar operator*(PadicScalar a, const PadicScalar& b) { return a *= b; }
    friend PadicScalar operator/(PadicScalar a, const PadicScalar& b) { return a /= b; }
    // Equal to the available precision of both operands.
    friend bool operator==(const PadicScalar& a, const PadicScalar& b) { return (a - b).is_zero(); }
    friend bool operator!=(const PadicScalar& a, const PadicScalar& b) { return !(a == b); }

    std::string str() const;

private:
    // Build p^v0 * X known modulo p^(v0 + rel), rel may be infinite.
    static PadicScalar normalize(long p, int v0, BigInt X, int rel);
    // Bring an unbound exact integer under prime p.
    PadicScalar bind(long p) const;
    static void unify(PadicScalar& a, PadicScalar& b);

    long p_ = 0;
    int v_ = kInfiniteValuation;
    BigInt u_ = 0;
    int N_ = kInfiniteValuation;
};

}  // namespace limifrob
