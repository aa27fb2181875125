#pragma once

#include "limifrob/padic/padic_scalar.hpp"

namespace limifrob {

// The (p-1)-th root of unity congruent to a mod p, to absolute precision N.
PadicScalar teichmuller_lift(long a, long p, int N);

// Morita's p-adic Gamma function at a nonnegative integer x, modulo p^N:
// Gamma_p(x) = (-1)^x * prod_{0<j<x, p∤j} j. Only x mod p^N matters, and the
// product is evaluated by a digit-block recursion so that x may be as large as
// p^N without enumerating the range.
PadicScalar padic_gamma(const BigInt& x, long p, int N);

// Gamma_p at a p-integral rational, through its image in Z/p^N.
PadicScalar padic_gamma(const BigRational& x, long p, int N);

}  // namespace limifrob
