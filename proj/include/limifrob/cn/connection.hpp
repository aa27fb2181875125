#pragma once

#include "limifrob/cn/laurent_series.hpp"
#include "limifrob/exact/linalg.hpp"
#include "limifrob/exact/ratfunc.hpp"

namespace limifrob {

using LaurentMatrix = Matrix<LaurentPoly>;

// Conventions used throughout: column j of N is the derivative of the j-th
// basis vector, so coordinates of a horizontal section satisfy c' = -N c. A
// gauge H acts on coordinates (c_new = H c) and sends N to
// H N H^-1 - H' H^-1.
//
// The connection N = A / den with A a matrix of Laurent polynomials and den a
// monic polynomial with den(0) != 0. Gauge changes by Laurent matrices only
// touch A, so the finite poles never move.
struct LaurentConnection {
    LaurentMatrix A;
    QPoly den;

    std::size_t dim() const { return A.rows(); }
    static LaurentConnection from_ratfunc(const Matrix<RatFunc>& N);
    Matrix<RatFunc> to_ratfunc() const;
    // Order of the pole at 0 (0 when holomorphic there).
    int pole_order() const;
    // Coefficient of s^-1; requires pole_order() <= 1.
    QMatrix residue() const;
    // Laurent expansion at 0 to absolute precision prec.
    SeriesMatrix expand(int prec) const;
};

LaurentConnection apply_gauge(const LaurentConnection& N, const LaurentMatrix& H, const LaurentMatrix& Hinv);
// e s^(e-1) N(s^e)
LaurentConnection pullback(const LaurentConnection& N, int e);

LaurentMatrix laurent_identity(std::size_t n);
LaurentMatrix laurent_derivative(const LaurentMatrix& H);
LaurentMatrix laurent_inflate(const LaurentMatrix& H, int e);
LaurentMatrix to_laurent(const QMatrix& M);
// Smallest p-adic valuation of a coefficient (kInfiniteValuation for zero).
int padic_valuation(const LaurentMatrix& H, long p);

// Ratfunc-level operations, mirroring the above for callers holding Q(t) matrices.
Matrix<RatFunc> apply_gauge(const Matrix<RatFunc>& N, const LaurentMatrix& H, const LaurentMatrix& Hinv);
Matrix<RatFunc> pullback(const Matrix<RatFunc>& N, int e);
Matrix<RatFunc> to_ratfunc(const LaurentMatrix& H);
QMatrix residue(const Matrix<RatFunc>& N);

}  // namespace limifrob
