#pragma once

#include <vector>

#include "limifrob/exact/numbers.hpp"
#include "limifrob/gd/mpoly.hpp"

namespace limifrob {

// |X(F_{p^k})| for k = 1, 2, ...
using CountVector = std::vector<BigInt>;

// Projective points over F_{p^k} of the hypersurface P = 0 in P^{n+1}
// (P has n + 2 variables and coefficients in Z_(p)). Representatives are
// normalized so that the first nonzero coordinate is 1. The zero polynomial
// counts every point. Throws BudgetExceeded when p^(k(n+1)) > 1e9.
BigInt count_points(const MPoly& P, int n, long p, int k, int threads = 1);
CountVector count_points_upto(const MPoly& P, int n, long p, int kmax, int threads = 1);

// Points of the smooth complete model of y^2 = f(x) over F_{p^k}, p odd and f
// squarefree mod p with integer coefficients (constant term first). An odd
// degree gives one point at infinity, an even degree gives 1 + chi(lc(f)).
BigInt count_hyperelliptic(const std::vector<long>& f, long p, int k);
CountVector count_hyperelliptic_upto(const std::vector<long>& f, long p, int kmax);

// (q^(m) - 1)/(q - 1): the number of points of P^{m-1}(F_q).
BigInt projective_space_size(long q, int m);

}  // namespace limifrob
