#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>

namespace limifrob {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline constexpr int kInfiniteValuation = INT_MAX;

inline BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline BigInt ipow(long base, unsigned long e) { return ipow(BigInt(base), e); }

// p-adic valuation; kInfiniteValuation for zero.
inline int ord_p(const BigInt& x, long p) {
    if (x == 0) return kInfiniteValuation;
    BigInt q = x;
    int v = 0;
    BigInt pp(p);
    while (mpz_divisible_p(q.get_mpz_t(), pp.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
        ++v;
    }
    return v;
}

inline int ord_p(const BigRational& x, long p) {
    if (x == 0) return kInfiniteValuation;
    return ord_p(BigInt(x.get_num()), p) - ord_p(BigInt(x.get_den()), p);
}

// Strip all factors of p: returns (v, u) with x = p^v * u and p not dividing u.
inline std::pair<int, BigInt> split_p(const BigInt& x, long p) {
    BigInt q = x;
    int v = 0;
    BigInt pp(p);
    while (q != 0 && mpz_divisible_p(q.get_mpz_t(), pp.get_mpz_t())) {
        mpz_divexact(q.get_mpz_t(), q.get_mpz_t(), pp.get_mpz_t());
        ++v;
    }
    return {v, q};
}

inline BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline BigInt inverse_mod(const BigInt& a, const BigInt& m) {
    BigInt r;
    if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
        throw std::domain_error("inverse_mod: not invertible");
    return r;
}

// Image of a p-integral rational in Z/m.
inline BigInt rational_mod(const BigRational& q, const BigInt& m) {
    BigInt den(q.get_den());
    return mod_floor(BigInt(q.get_num()) * inverse_mod(den, m), m);
}

// Symmetric representative in (-m/2, m/2].
inline BigInt symmetric_residue(const BigInt& a, const BigInt& m) {
    BigInt r = mod_floor(a, m);
    if (2 * r > m) r -= m;
    return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline std::string to_string(const BigInt& x) { return x.get_str(); }
inline std::string to_string(const BigRational& x) { return x.get_str(); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

}  // namespace limifrob
