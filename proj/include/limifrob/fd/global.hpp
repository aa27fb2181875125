#pragma once

#include <optional>
#include <vector>

#include "limifrob/exact/unipoly.hpp"
#include "limifrob/fd/diagonal.hpp"
#include "limifrob/gd/family.hpp"

namespace limifrob {

// Knobs for one deformation run. N_work is the working modulus p^N_work of
// the fixed-point series, M the number of series terms around t = 1, and b the
// allowed pole order of F at t = 0.
struct PrecisionPlan {
    int N_target = 6;
    int delta = 0;
    int N_work = 0;
    int M = 0;
    int b = 0;
    int round = 0;
    int max_rounds = 4;
};

// deg_delta is the degree of the finite singular locus, excluding t = 0.
PrecisionPlan precision_plan(int N_target, int delta, int e, long p, int r, int deg_delta);
// Doubles (N_work - N_target, M, b); nullopt once max_rounds is reached.
std::optional<PrecisionPlan> escalate(const PrecisionPlan& plan);

// F(t) = X(t) / (p^c t^b Delta(t)^m) modulo p^N_ach, with X integral and
// reduced into [0, p^(c + N_ach)).
struct GlobalFrobenius {
    long p = 0;
    int c = 0;
    int m = 0;
    int b = 0;
    int N_ach = 0;
    ZPoly Delta;
    Matrix<ZPoly> X;
    // Diagnostics: series length, degree of X, guard digits.
    int M = 0;
    int D = 0;
    int guard = 0;

    std::size_t dim() const { return X.rows(); }
    // F at a point tau in Z_p with tau and Delta(tau) units.
    PadicMatrix evaluate(const PadicScalar& tau) const;
    // Laurent coefficients of F at t = 0: result[i] is the coefficient of
    // t^(i - b), for i < count.
    std::vector<PadicMatrix> laurent_at_zero(int count) const;
};

// Deformation from the diagonal fiber: solve for the horizontal sections C
// around t = 1, form C(t) F1 C(t^p)^(-1), and recover the rational form.
// Throws ReconstructionFailed when no m fits in the series length, and
// ResidualCheckFailed when the recovered F misses the Frobenius equation.
GlobalFrobenius global_frobenius(const ConnectionData& conn, const PadicMatrix& F1, const PrecisionPlan& plan);

// The same with escalation: computes F1 for (n, d, p) at each round's
// N_work and retries on ReconstructionFailed.
GlobalFrobenius global_frobenius_adaptive(const ConnectionData& conn, int n, int d, long p, PrecisionPlan plan);

// Integer residual of the Frobenius equation for G, scaled to be a polynomial
// identity; returns its minimum p-adic valuation minus the scaling, i.e. the
// precision to which G satisfies dF/dt + N F = p t^(p-1) F N(t^p).
int frobenius_residual_precision(const GlobalFrobenius& G, const Matrix<RatFunc>& N);

}  // namespace limifrob
