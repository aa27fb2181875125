#pragma once

#include <cstdint>
#include <vector>

namespace limifrob {

// F_{p^k} with elements numbered 0..q-1: the base-p digits of an element's
// number are its coordinates on 1, x, ..., x^(k-1) modulo the defining
// polynomial. Multiplication goes through discrete log tables, so q must stay
// small (the counting budget keeps it far below the table limit).
class FiniteField {
public:
    using Elt = std::uint32_t;

    FiniteField(long p, int k);

    long characteristic() const { return p_; }
    int degree() const { return k_; }
    std::uint32_t order() const { return q_; }
    // Monic defining polynomial, constant term first (length k + 1).
    const std::vector<long>& modulus() const { return mod_; }

    Elt from_int(long a) const;
    Elt add(Elt a, Elt b) const;
    Elt neg(Elt a) const;
    Elt mul(Elt a, Elt b) const {
        if (a == 0 || b == 0) return 0;
        const std::uint32_t s = log_[a] + log_[b];
        return exp_[s >= q_ - 1 ? s - (q_ - 1) : s];
    }
    // Discrete log with respect to the fixed generator (a != 0), and its inverse.
    std::uint32_t log(Elt a) const { return log_[a]; }
    Elt exp(std::uint64_t i) const { return exp_[i % (q_ - 1)]; }
    // a^e for e >= 0 (0^0 = 1).
    Elt pow(Elt a, unsigned long e) const;
    // Quadratic character: 0, 1 or -1 (p odd).
    int legendre(Elt a) const { return a == 0 ? 0 : (log_[a] % 2 == 0 ? 1 : -1); }

private:
    long p_;
    int k_;
    std::uint32_t q_;
    std::vector<long> mod_;
    std::vector<std::uint32_t> log_, exp_;
};

// Smallest monic irreducible polynomial of degree k over F_p, ordering
// candidates by the integer sum c_i p^i of their lower coefficients.
std::vector<long> smallest_irreducible(long p, int k);

}  // namespace limifrob
