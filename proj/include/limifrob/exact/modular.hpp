#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "limifrob/exact/numbers.hpp"
#include "limifrob/exact/unipoly.hpp"

namespace limifrob {

// Arithmetic in Z/l for a prime l < 2^62.
class PrimeField {
public:
    explicit PrimeField(std::uint64_t l) : l_(l) {}
    std::uint64_t modulus() const { return l_; }

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        std::uint64_t s = a + b;
        return s >= l_ ? s - l_ : s;
    }
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + l_ - b; }
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : l_ - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % l_);
    }
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const {
        std::uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    std::uint64_t inv(std::uint64_t a) const;  // throws on zero
    std::uint64_t from_long(long a) const {
        long r = a % static_cast<long>(l_);
        return static_cast<std::uint64_t>(r < 0 ? r + static_cast<long>(l_) : r);
    }
    // Image of a rational; nullopt when the denominator vanishes mod l.
    std::optional<std::uint64_t> from_rational(const BigRational& q) const;

private:
    std::uint64_t l_;
};

// The i-th prime below 2^62 in decreasing order (deterministic, cached).
std::uint64_t large_prime(std::size_t i);

// Polynomials over Z/l as coefficient vectors (index = degree, trimmed).
using ModPoly = std::vector<std::uint64_t>;
void trim(ModPoly& f);
ModPoly mod_mul(const PrimeField& F, const ModPoly& a, const ModPoly& b);
std::pair<ModPoly, ModPoly> mod_divmod(const PrimeField& F, const ModPoly& a, const ModPoly& b);
std::uint64_t mod_eval(const PrimeField& F, const ModPoly& f, std::uint64_t x);
// f(x + a)
ModPoly mod_taylor_shift(const PrimeField& F, const ModPoly& f, std::uint64_t a);

// Rational function num/den with deg num <= dn, deg den <= dd and den(0) = 1
// matching the power series s modulo x^(dn+dd+1). Uses the extended Euclidean
// algorithm on (x^K, s); nullopt if no such approximant exists.
std::optional<std::pair<ModPoly, ModPoly>> pade(const PrimeField& F, const ModPoly& s, int dn, int dd);

// Chinese remaindering of a running residue (a mod m) with (b mod l).
void crt_accumulate(BigInt& a, BigInt& m, std::uint64_t b, std::uint64_t l);

// Rational number reconstruction of a mod m with |num|, den <= sqrt(m/2).
std::optional<BigRational> rational_reconstruct(const BigInt& a, const BigInt& m);

}  // namespace limifrob
