#include "limifrob/cn/normalize.hpp"

#include <numeric>

#include "limifrob/errors.hpp"

namespace limifrob {

int ramification_index(const LaurentConnection& N) {
    long e = 1;
    for (const auto& lam : rational_eigenvalues(N.residue())) e = std::lcm(e, BigInt(lam.get_den()).get_si());
    return static_cast<int>(e);
}

int ramification_index(const Matrix<RatFunc>& N) { return ramification_index(LaurentConnection::from_ratfunc(N)); }

GaugeResult shear_to_nilpotent(const LaurentConnection& N) {
    const std::size_t r = N.dim();
    GaugeResult out{laurent_identity(r), laurent_identity(r), N};
    long budget = -1;
    for (;;) {
        const QMatrix R = out.N.residue();
        const auto ev = rational_eigenvalues(R);
        long total = 0;
        for (const auto& lam : ev) {
            if (lam.get_den() != 1) throw NonIntegerEigenvalue("shear_to_nilpotent: residue eigenvalue " + lam.get_str());
            total += std::abs(BigInt(lam.get_num()).get_si());
        }
        if (total == 0) break;
        // Every step moves one eigenvalue block one unit toward 0.
        if (budget < 0) budget = total;
        if (budget-- == 0) throw NotRegular("shear_to_nilpotent: shearing did not terminate");

        const BigRational lam = ev.back() > 0 ? ev.back() : ev.front();
        const int beta = lam > 0 ? 1 : -1;
        QMatrix M = R;
        for (std::size_t i = 0; i < r; ++i) M(i, i) -= lam;
        M = power(M, static_cast<unsigned>(r));
        const QMatrix K = nullspace(M);
        const QMatrix P = hcat(K, column_basis(M));
        LaurentMatrix D = laurent_identity(r), Dinv = laurent_identity(r);
        for (std::size_t i = 0; i < K.cols(); ++i) {
            D(i, i) = LaurentPoly::monomial(1, beta);
            Dinv(i, i) = LaurentPoly::monomial(1, -beta);
        }
        const LaurentMatrix Hs = D * to_laurent(inverse(P)), Hsinv = to_laurent(P) * Dinv;
        out.N = apply_gauge(out.N, Hs, Hsinv);
        out.H = Hs * out.H;
        out.Hinv = out.Hinv * Hsinv;
    }
    return out;
}

GaugeResult shear_to_nilpotent(const Matrix<RatFunc>& N) {
    return shear_to_nilpotent(LaurentConnection::from_ratfunc(N));
}

NormalizedConnection normalize(const LaurentConnection& N, int max_nilpotency) {
    NormalizedConnection nc;
    nc.regularized = N.pole_order() > 1;
    const GaugeResult reg = regularize(N);
    nc.e = ramification_index(reg.N);
    const GaugeResult sh = shear_to_nilpotent(pullback(reg.N, nc.e));
    nc.H = sh.H * laurent_inflate(reg.H, nc.e);
    nc.Hinv = laurent_inflate(reg.Hinv, nc.e) * sh.Hinv;
    nc.Nprime = sh.N;
    nc.N0 = sh.N.residue();

    const std::size_t r = N.dim();
    QMatrix P = QMatrix::identity(r);
    int k = 0;
    while (!P.is_zero()) {
        if (k > static_cast<int>(r)) throw NotNilpotent("normalize: residue is not nilpotent");
        P = P * nc.N0;
        ++k;
    }
    nc.nilpotency_index = k;
    if (max_nilpotency > 0 && k > max_nilpotency)
        throw NotNilpotent("normalize: nilpotency index " + std::to_string(k) + " exceeds " +
                           std::to_string(max_nilpotency));
    return nc;
}

NormalizedConnection normalize(const Matrix<RatFunc>& N, int max_nilpotency) {
    return normalize(LaurentConnection::from_ratfunc(N), max_nilpotency);
}

}  // namespace limifrob
