#include <doctest.h>

#include <boost/multiprecision/cpp_complex.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include "families.hpp"
#include "limifrob/errors.hpp"
#include "limifrob/fd/diagonal.hpp"
#include "limifrob/fd/specialize.hpp"
#include "limifrob/gd/gauss_manin.hpp"
#include "limifrob/ls/limiting.hpp"
#include "limifrob/padic/ode.hpp"
#include "limifrob/padic/special.hpp"
#include "limifrob/oracle/counting.hpp"
#include "limifrob/oracle/zeta.hpp"

using namespace limifrob;

namespace {

// prod (1 - lambda_i T) for a diagonal matrix, lifted to the symmetric residue
// system mod p^N.
ZPoly diagonal_charpoly(const PadicMatrix& F, long p, int N) {
    const BigInt m = ipow(p, N);
    std::vector<BigInt> c{1};
    for (std::size_t i = 0; i < F.rows(); ++i) {
        const BigInt lam = F(i, i).residue(N);
        std::vector<BigInt> nc(c.size() + 1, 0);
        for (std::size_t k = 0; k < c.size(); ++k) {
            nc[k] += c[k];
            nc[k + 1] -= c[k] * lam;
        }
        c = std::move(nc);
    }
    for (auto& x : c) {
        x = mod_floor(x, m);
        if (2 * x > m) x -= m;
    }
    return ZPoly(std::move(c));
}

// prod over a of (1 - alpha_a T) with alpha_a = (-1)^n g(chi^a_0)...g(chi^a_{n+1}) / p,
// chi of order d on F_p, by complex Gauss sums.
ZPoly jacobi_charpoly(int n, int d, long p) {
    using C = boost::multiprecision::cpp_complex_100;
    using R = boost::multiprecision::cpp_bin_float_100;
    const R pi = boost::math::constants::pi<R>();
    long g = 2;
    for (;; ++g) {
        long y = g, ord = 1;
        while (y != 1) {
            y = y * g % p;
            ++ord;
        }
        if (ord == p - 1) break;
    }
    std::vector<long> dlog(p, 0);
    for (long i = 0, y = 1; i < p - 1; ++i, y = y * g % p) dlog[y] = i;
    auto gauss = [&](int a) {
        C s = 0;
        for (long x = 1; x < p; ++x) {
            const R angle = 2 * pi * R((dlog[x] * a) % d) / d + 2 * pi * R(x) / p;
            s += C(cos(angle), sin(angle));
        }
        return s;
    };
    std::vector<C> poly{1};
    for (const auto& b : dwork_basis(n, d)) {
        C alpha = R(n % 2 == 0 ? 1 : -1) / R(p);
        for (int wi : b.w) alpha *= gauss(wi + 1);
        std::vector<C> np(poly.size() + 1, 0);
        for (std::size_t k = 0; k < poly.size(); ++k) {
            np[k] += poly[k];
            np[k + 1] -= poly[k] * alpha;
        }
        poly = std::move(np);
    }
    std::vector<BigInt> out;
    for (const auto& z : poly) {
        CHECK(abs(z.imag()) < R(1e-20));
        out.emplace_back(round(z.real()).convert_to<boost::multiprecision::cpp_int>().str());
    }
    return ZPoly(std::move(out));
}

int det_valuation(const PadicMatrix& F) {
    int v = 0;
    for (std::size_t i = 0; i < F.rows(); ++i) v += F(i, i).valuation();
    return v;
}

}  // namespace

TEST_CASE("diagonal_frobenius: Fermat quartic curve matches point counts over F_5, F_25, F_125") {
    const PadicMatrix F = diagonal_frobenius(1, 4, 5, 12);
    REQUIRE(F.rows() == 6);
    const ZPoly Q = zeta_numerator_curve(count_points_upto(Family::fermat(3, 4), 1, 5, 3), 3, 5);
    CHECK(diagonal_charpoly(F, 5, 12) == Q);
    CHECK(det_valuation(F) == 3);
}

TEST_CASE("diagonal_frobenius: valuation of the determinant is n r / 2") {
    struct Case {
        int n, d;
        long p;
        int expected;
    };
    for (auto c : {Case{1, 4, 5, 3}, Case{3, 3, 19, 15}, Case{2, 4, 13, 21}, Case{1, 6, 7, 10}, Case{1, 5, 11, 6}}) {
        const PadicMatrix F = diagonal_frobenius(c.n, c.d, c.p, 6);
        const int r = static_cast<int>(F.rows());
        CHECK(det_valuation(F) == c.expected);
        CHECK(2 * det_valuation(F) == c.n * r);
        // Same number from the pole orders: sum over levels of (k - 1) |B_k|.
        int pole = 0;
        for (const auto& b : dwork_basis(c.n, c.d)) pole += b.k - 1;
        CHECK(pole == det_valuation(F));
        for (std::size_t i = 0; i < F.rows(); ++i)
            for (std::size_t j = 0; j < F.cols(); ++j)
                if (i != j) CHECK(F(i, j).is_zero());
    }
}

TEST_CASE("diagonal_frobenius: characteristic polynomial equals the Gauss-sum product") {
    struct Case {
        int n, d;
        long p;
        int N;
    };
    for (auto c : {Case{1, 4, 5, 10}, Case{1, 3, 7, 8}, Case{1, 4, 13, 10}, Case{2, 4, 5, 30}, Case{3, 3, 19, 20},
                   Case{1, 6, 7, 14}}) {
        const PadicMatrix F = diagonal_frobenius(c.n, c.d, c.p, c.N);
        INFO("n=", c.n, " d=", c.d, " p=", c.p, " padic=", to_string(diagonal_charpoly(F, c.p, c.N)),
             " gauss=", to_string(jacobi_charpoly(c.n, c.d, c.p)));
        CHECK(diagonal_charpoly(F, c.p, c.N) == jacobi_charpoly(c.n, c.d, c.p));
    }
}

TEST_CASE("diagonal_frobenius: quartic surface matches counts up to k = 3") {
    const PadicMatrix F = diagonal_frobenius(2, 4, 5, 30);
    const ZPoly Q = diagonal_charpoly(F, 5, 30);
    const CountVector c = count_points_upto(Family::fermat(4, 4), 2, 5, 3);
    CHECK(zeta_consistency(Q, c, 2, 5, projective_factors(2, 5)).pass);
}

TEST_CASE("diagonal_frobenius: d must divide p - 1") {
    CHECK_THROWS_AS(diagonal_frobenius(1, 4, 7, 5), DegreeNotDividing);
}

namespace {

struct Deformed {
    Family fam;
    ConnectionData cd;
    NormalizedConnection norm;
    GlobalFrobenius G;
};

Deformed deform(const Family& fam, int N) {
    Deformed D{fam, gauss_manin_matrix(fam), {}, {}};
    D.norm = normalize(D.cd.N);
    PrecisionPlan plan = precision_plan(N, gauge_delta(D.norm, fam.p), D.norm.e, fam.p, D.cd.N.rows(),
                                        D.cd.excised.degree() - 1);
    plan.b = pole_order_bound(D.norm, fam.p) + 1;
    D.G = global_frobenius_adaptive(D.cd, fam.n, fam.d, fam.p, plan);
    return D;
}

const Deformed& double_conic_6() {
    static const Deformed D = deform(limifrob::testing::double_conic(), 6);
    return D;
}

// f(1 + u) as a power series mod u^M with exact rational coefficients.
std::vector<BigRational> expand_at_one(const RatFunc& f, int M) {
    auto shift = [&](const QPoly& a) {
        QPoly out;
        const QPoly x1{BigRational(1), BigRational(1)};
        for (int i = a.degree(); i >= 0; --i) out = out * x1 + QPoly::constant(a.coeff(i));
        return out;
    };
    const QPoly num = shift(f.num()), den = shift(f.den());
    std::vector<BigRational> q(M);
    for (int i = 0; i < M; ++i) {
        BigRational s = num.coeff(i);
        for (int j = 1; j <= i && j <= den.degree(); ++j) s -= den.coeff(j) * q[i - j];
        q[i] = s / den.coeff(0);
    }
    return q;
}

PadicMatrix evaluate_series(const PadicSeriesMatrix& C, const PadicScalar& u) {
    PadicMatrix out(C.rows(), C.cols());
    for (std::size_t i = 0; i < C.rows(); ++i)
        for (std::size_t j = 0; j < C.cols(); ++j) {
            PadicScalar s = PadicScalar::zero(u.prime(), 200), pw = PadicScalar::exact(u.prime(), 1);
            for (int k = 0; k < C.order(); ++k) {
                s += C(i, j)[k] * pw;
                pw *= u;
            }
            out(i, j) = s;
        }
    return out;
}

int agreement(const PadicMatrix& A, const PadicMatrix& B) {
    int worst = kInfiniteValuation;
    for (std::size_t i = 0; i < A.entries().size(); ++i) {
        PadicScalar d = A.entries()[i] - B.entries()[i];
        worst = std::min(worst, d.is_zero() ? d.absolute_precision() : d.valuation());
    }
    return worst;
}

}  // namespace

TEST_CASE("global_frobenius: constant pencil reproduces the diagonal Frobenius") {
    const Family fam = limifrob::testing::constant_pencil(1, 4, 5);
    Deformed D = deform(fam, 6);
    const PadicMatrix F1 = diagonal_frobenius(1, 4, 5, 12);
    CHECK(agreement(D.G.evaluate(PadicScalar::exact(5, 3)), F1) >= 6);
    LimitingFrobenius L = specialize_limit(D.G, D.norm);
    CHECK(L.e == 1);
    CHECK(agreement(L.Fr0, F1) >= 6);
}

TEST_CASE("global_frobenius: the Frobenius equation holds to the achieved precision") {
    const Deformed& D = double_conic_6();
    CHECK(D.G.N_ach >= 6);
    CHECK(frobenius_residual_precision(D.G, D.cd.N) >= D.G.N_ach);
}

TEST_CASE("global_frobenius: agrees with C(t) F1 C(t^p)^-1 from the series solver") {
    // Second route: horizontal sections around t = 1 from series_ode_solve,
    // compared with the reconstructed rational F at t = 1 + p.
    const Deformed& D = double_conic_6();
    const long p = 5;
    const int M = 40, Nw = 30;
    const std::size_t r = D.cd.N.rows();
    PadicSeriesMatrix Nloc(r, r, p, M);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            auto q = expand_at_one(D.cd.N(i, j), M);
            for (int k = 0; k < M; ++k) Nloc(i, j)[k] = PadicScalar::from_rational(p, q[k], Nw);
        }
    const PadicSeriesMatrix C = series_ode_solve(Nloc, M, Nw);
    const PadicScalar tau = PadicScalar::exact(p, 1 + p);
    PadicScalar taup = PadicScalar::exact(p, 1);
    for (int i = 0; i < p; ++i) taup *= tau;
    const PadicMatrix Cu = evaluate_series(C, tau - PadicScalar::exact(p, 1));
    const PadicMatrix Cup = evaluate_series(C, taup - PadicScalar::exact(p, 1));
    const PadicMatrix F1 = diagonal_frobenius(1, 4, 5, Nw);
    // F(tau) C(tau^p) = C(tau) F1
    CHECK(agreement(D.G.evaluate(tau) * Cup, Cu * F1) >= 6);
}

TEST_CASE("global_frobenius: smooth fibres match point counts (Teichmuller lifts)") {
    const Deformed& D = double_conic_6();
    const long p = 5;
    int checked = 0;
    for (long t0 = 1; t0 < p; ++t0) {
        if (mod_floor(D.G.Delta.eval(BigInt(t0)), BigInt(p)) == 0) continue;
        PadicMatrix F = D.G.evaluate(teichmuller_lift(t0, p, D.G.c + D.G.N_ach + 8));
        ZPoly Q = recognize_integer_poly(reverse_char_poly(F), weight_bounds(p, std::vector<int>(6, 1), 6));
        MPoly Pt = BigRational(1 - t0) * D.fam.P0 + BigRational(t0) * D.fam.P1;
        auto rep = zeta_consistency(Q, count_points_upto(Pt, 1, p, 3), 1, p, projective_factors(1, p));
        CHECK_MESSAGE(rep.pass, "t0 = " << t0);
        ++checked;
    }
    CHECK(checked >= 2);
}

TEST_CASE("specialize_limit: Fr0 invariants on the double conic") {
    const Deformed& D = double_conic_6();
    LimitingFrobenius L = specialize_limit(D.G, D.norm);
    CHECK(L.e == 2);
    CHECK(L.N_ach >= 6);
    LimitingStructure ls{1, 5, L.e, D.norm.N0, L.Fr0, L.N_ach};
    StructureCheck sc = check_structure(ls);
    CHECK(sc.nilpotent);
    CHECK(sc.commutes);
    CHECK(sc.det_valuation_ok);
    // Negative Laurent powers vanished (specialize_limit would have thrown).
    for (const auto& x : L.Fr0.entries()) CHECK(x.absolute_precision() >= L.N_ach);
}

TEST_CASE("precision_plan: sizes grow with the target and escalate") {
    PrecisionPlan a = precision_plan(6, 0, 2, 5, 6, 22);
    PrecisionPlan b = precision_plan(12, 0, 2, 5, 6, 22);
    CHECK(a.N_work > a.N_target);
    CHECK(b.M > a.M);
    CHECK(b.N_work > a.N_work);
    auto c = escalate(a);
    REQUIRE(c.has_value());
    CHECK(c->M == 2 * a.M);
    CHECK(c->N_work - c->N_target == 2 * (a.N_work - a.N_target));
    PrecisionPlan last = a;
    last.round = last.max_rounds;
    CHECK_FALSE(escalate(last).has_value());
}
