#pragma once

#include <optional>
#include <string>
#include <vector>

#include "limifrob/exact/linalg.hpp"
#include "limifrob/exact/unipoly.hpp"
#include "limifrob/padic/padic_scalar.hpp"

namespace limifrob {

using PadicMatrix = Matrix<PadicScalar>;

// The quadruple (H0, N0, Fr0, e) for an n-dimensional fibre; H0 = Q_p^r.
struct LimitingStructure {
    int n = 1;
    long p = 0;
    int e = 1;
    QMatrix N0;
    PadicMatrix Fr0;
    int N_ach = 0;
    std::size_t r() const { return N0.rows(); }
};

struct StructureCheck {
    bool nilpotent = false;        // N0^(n+1) = 0
    bool commutes = false;         // N0 Fr0 = p Fr0 N0 to the available precision
    int commutation_precision = 0; // least absolute precision of the checked entries
    bool det_known = false;        // ord_p det Fr0 determined at this precision
    int det_valuation = 0;
    bool det_valuation_ok = false; // equals n r / 2
};
StructureCheck check_structure(const LimitingStructure& ls);

// Increasing filtration W_{-1} = 0 <= W_0 <= ... <= W_{2n} = H0. Each entry
// is a matrix whose columns are a basis.
struct MonodromyFiltration {
    int n = 1;
    std::vector<QMatrix> spaces;  // spaces[k + 1] = W_k, k = -1 .. 2n
    const QMatrix& W(int k) const;
    std::vector<int> dims() const;  // dim W_{-1} .. dim W_{2n}
};

// W_k = sum over j >= 0 of Ker N0^(k - n + j + 1) intersected with Im N0^j.
MonodromyFiltration monodromy_filtration(const QMatrix& N0, int n);

// Symmetric lifts of p-adic coefficients, each of absolute value at most
// bounds[i]. Throws BoundTooLargeForPrecision when 2 bound >= p^precision and
// Unrecognized when a coefficient is not integral or its lift exceeds the bound.
ZPoly recognize_integer_poly(const std::vector<PadicScalar>& coeffs, const std::vector<BigInt>& bounds);

// Bounds on the coefficients of prod (1 - a_i T) when |a_i| = p^(w_i / 2),
// keeping only the `degree` largest moduli: coefficient i is bounded by the
// i-th elementary symmetric function of those moduli (rounded up).
std::vector<BigInt> weight_bounds(long p, std::vector<int> twice_weights, int degree);

struct WeilCheck {
    bool pass = false;
    double worst_relative_error = 0;  // max over reciprocal roots of | |a| / p^w - 1 |
};
inline constexpr double kWeilTolerance = 1e-6;
// Every reciprocal root of Q (Q(0) = 1) has absolute value p^(twice_weight / 2).
WeilCheck weil_weight_check(const ZPoly& Q, int twice_weight, long p);

struct GradedPiece {
    int k = 0;
    int dim = 0;
    ZPoly poly;  // det(1 - T Fr0 | W_k / W_(k-1))
    WeilCheck weil;
    bool frobenius_stable = false;
};

struct WeilReport {
    std::vector<GradedPiece> pieces;
    ZPoly full;           // det(1 - T Fr0 | H0)
    ZPoly kernel_factor;  // det(1 - T Fr0 | Ker N0)
    bool product_matches = false;
    bool all_weights_pass = false;
    bool all_stable = false;
    bool full_is_weil_symmetric = false;  // Q(0) = 1 and |leading| = p^(n r / 2)
};

// Throws Unrecognized naming the offending piece.
WeilReport graded_analysis(const LimitingStructure& ls, const MonodromyFiltration& filt);

// Coefficients of det(1 - T M) = det(x I - M) read highest first, with
// precision tracked by the p-adic arithmetic.
std::vector<PadicScalar> reverse_char_poly(const PadicMatrix& M);

// Matrix of Fr0 in the basis given by the columns of B (B invertible, rational).
PadicMatrix change_basis(const PadicMatrix& F, const QMatrix& B, int guard_precision);

}  // namespace limifrob
