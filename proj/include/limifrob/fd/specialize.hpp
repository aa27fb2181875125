#pragma once

#include "limifrob/cn/normalize.hpp"
#include "limifrob/fd/global.hpp"

namespace limifrob {

struct LimitingFrobenius {
    PadicMatrix Fr0;
    int N_ach = 0;  // absolute precision of every entry of Fr0
    int e = 1;
    int delta = 0;
};

// delta = -min(0, ord_p H, ord_p H^-1).
int gauge_delta(const NormalizedConnection& norm, long p);
// A bound for the pole order of F at t = 0 implied by H: F(s^e) =
// H(s)^-1 F'(s) H(s^p) with F' holomorphic.
int pole_order_bound(const NormalizedConnection& norm, long p);

// Fr0 = coefficient of s^0 in H(s) F(s^e) H(s^p)^-1. Every negative power
// must vanish to the tracked precision (NegativeCoefficientNonzero otherwise).
LimitingFrobenius specialize_limit(const GlobalFrobenius& G, const NormalizedConnection& norm);

}  // namespace limifrob
