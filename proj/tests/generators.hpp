#pragma once

// Small hand-rolled generators for property tests. Seeds are fixed per test so
// failures replay exactly.

#include <random>

#include "limifrob/exact/linalg.hpp"
#include "limifrob/exact/ratfunc.hpp"

namespace limifrob::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
    bool coin() { return integer(0, 1) == 1; }

    BigRational rational(long range = 20) {
        BigRational q(integer(-range, range), integer(1, range));
        q.canonicalize();
        return q;
    }

    QPoly qpoly(int max_deg, long range = 9) {
        std::vector<BigRational> c(integer(0, max_deg) + 1);
        for (auto& x : c) x = rational(range);
        return QPoly(std::move(c));
    }

    RatFunc ratfunc(int max_deg) {
        QPoly den = qpoly(max_deg);
        if (den.is_zero()) den = QPoly::constant(1);
        return RatFunc(qpoly(max_deg), den);
    }

    QMatrix qmatrix(std::size_t r, std::size_t c, long range = 9) {
        QMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m(i, j) = rational(range);
        return m;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace limifrob::testing
