#include <algorithm>

#include "limifrob/errors.hpp"
#include "limifrob/ls/limiting.hpp"

namespace limifrob {

namespace {

PadicMatrix to_padic(const QMatrix& A, long p, int prec) {
    return A.map([&](const BigRational& q) { return PadicScalar::from_rational(p, q, prec); });
}

// Extend the columns of U (a basis) to a basis of the span of U and V.
QMatrix extend_basis(const QMatrix& U, const QMatrix& V) {
    QMatrix B = U;
    for (std::size_t j = 0; j < V.cols(); ++j) {
        QMatrix c(V.rows(), 1, V.column(j));
        QMatrix trial = hcat(B, c);
        if (rank(trial) > B.cols()) B = trial;
    }
    return B;
}

int guard_for(const LimitingStructure& ls) { return ls.N_ach + 64; }

// Largest absolute precision not exceeded by any entry.
int least_precision(const std::vector<PadicScalar>& v) {
    int m = kInfiniteValuation;
    for (const auto& x : v)
        if (!x.is_exact()) m = std::min(m, x.absolute_precision());
    return m;
}

}  // namespace

std::vector<PadicScalar> reverse_char_poly(const PadicMatrix& M) { return char_poly_coeffs(M); }

PadicMatrix change_basis(const PadicMatrix& F, const QMatrix& B, int guard_precision) {
    long p = F.entries().empty() ? 0 : F.entries().front().prime();
    return to_padic(inverse(B), p, guard_precision) * F * to_padic(B, p, guard_precision);
}

StructureCheck check_structure(const LimitingStructure& ls) {
    StructureCheck c;
    QMatrix P = QMatrix::identity(ls.r());
    for (int i = 0; i <= ls.n; ++i) P = P * ls.N0;
    c.nilpotent = P.is_zero();

    PadicMatrix N = to_padic(ls.N0, ls.p, guard_for(ls));
    PadicMatrix diff = N * ls.Fr0 - PadicScalar::exact(ls.p, ls.p) * PadicMatrix(ls.Fr0 * N);
    c.commutes = true;
    for (const auto& x : diff.entries())
        if (!x.is_zero()) c.commutes = false;
    c.commutation_precision = least_precision(diff.entries());

    PadicScalar det = determinant(ls.Fr0);
    c.det_known = !det.is_zero();
    if (c.det_known) {
        c.det_valuation = det.valuation();
        c.det_valuation_ok = 2 * c.det_valuation == ls.n * static_cast<int>(ls.r());
    }
    return c;
}

WeilReport graded_analysis(const LimitingStructure& ls, const MonodromyFiltration& filt) {
    const std::size_t r = ls.r();
    if (filt.W(2 * filt.n).cols() != r || ls.Fr0.rows() != r) throw DimensionMismatch("graded_analysis: dimensions");
    const int guard = guard_for(ls);
    WeilReport rep;

    // Basis adapted to the filtration; Fr0 is block upper triangular in it.
    QMatrix B(r, 0);
    std::vector<std::size_t> starts;
    for (int k = 0; k <= 2 * filt.n; ++k) {
        starts.push_back(B.cols());
        B = extend_basis(B, filt.W(k));
    }
    starts.push_back(r);
    PadicMatrix M = change_basis(ls.Fr0, B, guard);

    std::vector<int> twice_weights;
    for (int k = 0; k <= 2 * filt.n; ++k)
        for (std::size_t i = starts[k]; i < starts[k + 1]; ++i) twice_weights.push_back(k);

    rep.all_weights_pass = rep.all_stable = true;
    ZPoly product{BigInt(1)};
    for (int k = 0; k <= 2 * filt.n; ++k) {
        GradedPiece g;
        g.k = k;
        const std::size_t a = starts[k], b = starts[k + 1];
        g.dim = static_cast<int>(b - a);
        // Stability of W_k: the columns of W_k have no components beyond it.
        g.frobenius_stable = true;
        for (std::size_t i = b; i < r; ++i)
            for (std::size_t j = 0; j < b; ++j)
                if (!M(i, j).is_zero()) g.frobenius_stable = false;
        try {
            g.poly = recognize_integer_poly(reverse_char_poly(M.block(a, a, g.dim, g.dim)),
                                            weight_bounds(ls.p, std::vector<int>(g.dim, k), g.dim));
        } catch (const Unrecognized& ex) {
            throw Unrecognized("graded piece W_" + std::to_string(k) + "/W_" + std::to_string(k - 1) + ": " + ex.what());
        } catch (const BoundTooLargeForPrecision& ex) {
            throw BoundTooLargeForPrecision("graded piece W_" + std::to_string(k) + "/W_" + std::to_string(k - 1) +
                                            ": " + ex.what());
        }
        g.weil = weil_weight_check(g.poly, k, ls.p);
        rep.all_weights_pass = rep.all_weights_pass && g.weil.pass;
        rep.all_stable = rep.all_stable && g.frobenius_stable;
        product = product * g.poly;
        rep.pieces.push_back(std::move(g));
    }

    rep.full = recognize_integer_poly(reverse_char_poly(ls.Fr0), weight_bounds(ls.p, twice_weights, int(r)));
    rep.product_matches = rep.full == product;
    rep.full_is_weil_symmetric = rep.full.coeff(0) == 1 && rep.full.degree() == int(r) &&
                                 abs(rep.full.coeff(int(r))) == ipow(ls.p, ls.n * int(r) / 2) &&
                                 ls.n * int(r) % 2 == 0;

    // Ker N0 is Frobenius stable; put it first and read off the leading block.
    QMatrix K = nullspace(ls.N0);
    const std::size_t dk = K.cols();
    QMatrix BK = extend_basis(K, QMatrix::identity(r));
    PadicMatrix MK = change_basis(ls.Fr0, BK, guard);
    try {
        rep.kernel_factor = recognize_integer_poly(reverse_char_poly(MK.block(0, 0, dk, dk)),
                                                   weight_bounds(ls.p, twice_weights, int(dk)));
    } catch (const Unrecognized& ex) {
        throw Unrecognized(std::string("kernel factor: ") + ex.what());
    } catch (const BoundTooLargeForPrecision& ex) {
        throw BoundTooLargeForPrecision(std::string("kernel factor: ") + ex.what());
    }
    return rep;
}

}  // namespace limifrob
