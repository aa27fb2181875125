#pragma once

#include <vector>

#include "limifrob/exact/unipoly.hpp"
#include "limifrob/oracle/counting.hpp"

namespace limifrob {

// Numerator 1 + a_1 T + ... + a_{2g} T^{2g} of the zeta function of a smooth
// projective curve of genus g over F_p, from the counts over F_{p^k},
// k <= counts.size(). a_1..a_g come from Newton's identities and the rest
// from a_{2g-i} = p^(g-i) a_i. Extra counts are checked against the completed
// polynomial (SymmetryViolation on disagreement).
ZPoly zeta_numerator_curve(const CountVector& counts, int g, long p);

// A factor f(T)^exponent of a zeta function, f(0) = 1.
struct ZetaFactor {
    ZPoly poly;
    int exponent = 1;
};

// (1 - p^i T)^(-1) for i = 0..n.
std::vector<ZetaFactor> projective_factors(int n, long p);

struct ConsistencyReport {
    bool pass = true;
    int first_mismatch = 0;  // 1-based k, 0 when everything agrees
    CountVector predicted;   // counts implied by the assembled zeta function
};

// Assemble Z(T) = Q(T)^((-1)^(n+1)) * prod extra and compare the counts it
// implies with the given ones.
ConsistencyReport zeta_consistency(const ZPoly& Q, const CountVector& counts, int n, long p,
                                   const std::vector<ZetaFactor>& extra);

// Power sums s_k = sum beta^k for k = 1..K where f(T) = prod (1 - beta T).
std::vector<BigInt> inverse_root_power_sums(const ZPoly& f, int K);

}  // namespace limifrob
