#pragma once

#include <vector>

#include "limifrob/exact/linalg.hpp"
#include "limifrob/exact/ratfunc.hpp"
#include "limifrob/gd/mpoly.hpp"

namespace limifrob {

// The pencil P_t = (1 - t) P0 + t P1 of degree-d hypersurfaces in
// n + 2 variables, with P1 the diagonal x_0^d + ... + x_{n+1}^d.
struct Family {
    int n = 1;
    int d = 4;
    long p = 5;
    MPoly P0, P1;

    int nvars() const { return n + 2; }
    MPoly dPdt() const { return P1 - P0; }
    // Throws HomogeneityError / DegreeNotDividing / std::invalid_argument.
    void validate() const;
    static MPoly fermat(int nvars, int d);
};

struct DworkBasisElement {
    Exponent w;
    int k = 1;
    friend bool operator==(const DworkBasisElement&, const DworkBasisElement&) = default;
};

// All x^w Omega / P^k with 0 <= w_i <= d-2 and |w| + n + 2 = k d, ordered by
// (k, lexicographic w).
std::vector<DworkBasisElement> dwork_basis(int n, int d);

struct ConnectionData {
    std::vector<DworkBasisElement> basis;
    Matrix<RatFunc> N;
    // Monic product of the denominators met; every pole of N is a root.
    QPoly excised;
};

}  // namespace limifrob
