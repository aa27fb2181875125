#pragma once

#include <vector>

#include "limifrob/cn/connection.hpp"

namespace limifrob {

struct GaugeResult {
    LaurentMatrix H;
    LaurentMatrix Hinv;
    LaurentConnection N;  // the transformed connection
};

// Brings a regular singular connection to one with at most a simple pole at
// 0. Connections already of that kind come back with H = I.
GaugeResult regularize(const LaurentConnection& N);
GaugeResult regularize(const Matrix<RatFunc>& N);

// For invertible G over Q(s), a Laurent matrix H invertible over Q[s, 1/s]
// with G H^-1 holomorphic and invertible at s = 0.
LaurentMatrix laurent_factorize(const Matrix<RatFunc>& G);

// lcm of the denominators of the residue eigenvalues.
int ramification_index(const LaurentConnection& N);
int ramification_index(const Matrix<RatFunc>& N);

// Makes the residue nilpotent with s^(+-1) shears on generalized eigenspaces,
// one extremal eigenvalue at a time.
GaugeResult shear_to_nilpotent(const LaurentConnection& N);
GaugeResult shear_to_nilpotent(const Matrix<RatFunc>& N);

struct NormalizedConnection {
    int e = 1;
    LaurentMatrix H;     // from coordinates of e s^(e-1) N(s^e) to the normal form
    LaurentMatrix Hinv;
    LaurentConnection Nprime;
    QMatrix N0;
    int nilpotency_index = 0;  // least k with N0^k = 0
    bool regularized = false;

    Matrix<RatFunc> nprime_ratfunc() const { return Nprime.to_ratfunc(); }
};

// Full pipeline. When max_nilpotency > 0 a residue needing more than that many
// powers to vanish raises NotNilpotent.
NormalizedConnection normalize(const Matrix<RatFunc>& N, int max_nilpotency = 0);
NormalizedConnection normalize(const LaurentConnection& N, int max_nilpotency = 0);

}  // namespace limifrob
