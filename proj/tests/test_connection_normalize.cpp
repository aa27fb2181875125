#include <doctest.h>

#include <numeric>

#include "families.hpp"
#include "generators.hpp"
#include "limifrob/cn/normalize.hpp"
#include "limifrob/gd/gauss_manin.hpp"

using namespace limifrob;
using limifrob::testing::Gen;

namespace {

RatFunc s_pow(int k) {
    if (k >= 0) return RatFunc(QPoly::monomial(BigRational(1), k));
    return RatFunc(QPoly::constant(BigRational(1)), QPoly::monomial(BigRational(1), -k));
}

Matrix<RatFunc> scalar(const RatFunc& f) {
    Matrix<RatFunc> m(1, 1);
    m(0, 0) = f;
    return m;
}

bool laurent_invertible(const LaurentMatrix& H, const LaurentMatrix& Hinv) {
    const auto I = laurent_identity(H.rows());
    const LaurentPoly d = determinant(H);
    return H * Hinv == I && Hinv * H == I && !d.is_zero() && d.is_monomial();
}

// Replays the gauge law with plain rational-function arithmetic.
Matrix<RatFunc> replay(const Matrix<RatFunc>& N, const LaurentMatrix& H, const LaurentMatrix& Hinv) {
    const auto h = to_ratfunc(H), hi = to_ratfunc(Hinv);
    const auto dh = H.map([](const LaurentPoly& f) { return f.derivative(); });
    return h * N * hi - to_ratfunc(dh) * hi;
}

bool nilpotent(const QMatrix& M) { return power(M, static_cast<unsigned>(M.rows())).is_zero(); }

// Every pole lies at 0 or at a root of D.
bool poles_within(const Matrix<RatFunc>& N, const QPoly& D) {
    for (const auto& f : N.entries()) {
        QPoly den = f.den();
        den = den.shift(-std::max(0, den.low_degree()));
        QPoly g = D;
        for (int i = 0; i < 8 && den.degree() > 0; ++i) {
            const QPoly c = gcd_q(den, g);
            if (c.degree() == 0) break;
            den = den.exact_div(c);
        }
        if (den.degree() > 0) return false;
    }
    return true;
}

std::size_t rank_of(const QMatrix& M) { return rank(M); }

// R/s + holomorphic part with random rational entries, denominators coprime to s.
Matrix<RatFunc> simple_pole(Gen& g, const QMatrix& R) {
    const std::size_t r = R.rows();
    Matrix<RatFunc> N(r, r);
    const RatFunc inv_s = s_pow(-1);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            QPoly den = g.qpoly(1, 5);
            if (den.coeff(0) == 0) den = den + QPoly::constant(1);
            N(i, j) = RatFunc(R(i, j)) * inv_s + RatFunc(g.qpoly(2, 5), den);
        }
    return N;
}

QMatrix conjugated_diagonal(Gen& g, const std::vector<BigRational>& diag) {
    const std::size_t r = diag.size();
    QMatrix D(r, r);
    for (std::size_t i = 0; i < r; ++i) {
        D(i, i) = diag[i];
        if (i + 1 < r && g.coin()) D(i, i + 1) = diag[i] == diag[i + 1] ? BigRational(1) : BigRational(0);
    }
    QMatrix P;
    do P = g.qmatrix(r, r, 4);
    while (rank(P) < r);
    return P * D * inverse(P);
}

}  // namespace

TEST_CASE("Laurent series arithmetic") {
    const auto geo = LaurentSeries::quotient(LaurentPoly(1), QPoly{1, -1}, 6);  // 1/(1-s)
    for (int k = 0; k < 6; ++k) CHECK(geo.coeff(k) == 1);
    CHECK_THROWS_AS(geo.coeff(6), PrecisionExhausted);
    const auto x = LaurentSeries::quotient(LaurentPoly(QPoly{2, 3}, -1), QPoly{0, 0, 0, 1, 1}, 5);  // (2+3s)/(s^4(1+s))
    CHECK(x.val() == -4);
    CHECK(x.coeff(-4) == 2);
    CHECK(x.coeff(-3) == 1);
    CHECK(x.coeff(-2) == -1);
    const auto one = x * x.inverse();
    CHECK(one.coeff(0) == 1);
    for (int k = 1; k < one.prec(); ++k) CHECK(one.coeff(k) == 0);
    CHECK(one.prec() == 9);
}

TEST_CASE("regularize: a simple pole is left alone") {
    Matrix<RatFunc> N(2, 2);
    N(0, 1) = s_pow(-1);
    N(1, 0) = RatFunc(QPoly{1, 1}, QPoly{2, 1});
    const auto reg = regularize(N);
    CHECK(reg.H == laurent_identity(2));
    CHECK(reg.N.to_ratfunc() == N);
}

TEST_CASE("regularize: [[0, 1/t^2], [0, 0]] reaches a simple pole") {
    Matrix<RatFunc> N(2, 2);
    N(0, 1) = s_pow(-2);
    const auto reg = regularize(N);
    CHECK(reg.N.pole_order() <= 1);
    CHECK(laurent_invertible(reg.H, reg.Hinv));
    CHECK(replay(N, reg.H, reg.Hinv) == reg.N.to_ratfunc());
}

TEST_CASE("property: regularize on gauge-scrambled simple poles") {
    // A Laurent gauge applied to a simple-pole connection generally creates a
    // higher-order pole; regularize has to undo it.
    Gen g(31);
    int exercised = 0;
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t r = g.integer(2, 3);
        std::vector<BigRational> diag(r);
        for (auto& x : diag) x = BigRational(g.integer(-1, 2), g.integer(1, 2));
        for (auto& x : diag) x.canonicalize();
        const auto N0 = simple_pole(g, conjugated_diagonal(g, diag));
        LaurentMatrix U = laurent_identity(r);
        U(r - 1, 0) = LaurentPoly::monomial(g.integer(1, 3), -static_cast<int>(g.integer(1, 2)));
        LaurentMatrix Uinv = laurent_identity(r);
        Uinv(r - 1, 0) = -U(r - 1, 0);
        const auto N = replay(N0, U, Uinv);
        if (LaurentConnection::from_ratfunc(N).pole_order() > 1) ++exercised;
        const auto reg = regularize(N);
        CHECK(reg.N.pole_order() <= 1);
        CHECK(laurent_invertible(reg.H, reg.Hinv));
        CHECK(replay(N, reg.H, reg.Hinv) == reg.N.to_ratfunc());
    }
    CHECK(exercised >= 3);
}

TEST_CASE("laurent_factorize examples") {
    Matrix<RatFunc> G(2, 2);
    G(0, 0) = RatFunc(QPoly{1, 1});
    G(0, 1) = RatFunc(QPoly{0, 1}, QPoly{1, 2});
    G(1, 0) = RatFunc(3);
    G(1, 1) = RatFunc(QPoly{2, 0, 1});
    CHECK(laurent_factorize(G) == laurent_identity(2));

    Matrix<RatFunc> D(2, 2);
    D(0, 0) = s_pow(-1);
    D(1, 1) = s_pow(1);
    LaurentMatrix expect(2, 2);
    expect(0, 0) = LaurentPoly::monomial(1, -1);
    expect(1, 1) = LaurentPoly::monomial(1, 1);
    CHECK(laurent_factorize(D) == expect);

    CHECK_THROWS_AS(laurent_factorize(Matrix<RatFunc>(2, 2)), Singular);
}

TEST_CASE("property: laurent_factorize leaves a holomorphic invertible cofactor") {
    Gen g(8);
    for (int trial = 0; trial < 12; ++trial) {
        const std::size_t r = g.integer(2, 3);
        Matrix<RatFunc> G(r, r);
        for (auto i = 0u; i < r; ++i)
            for (auto j = 0u; j < r; ++j) G(i, j) = g.ratfunc(2) * s_pow(static_cast<int>(g.integer(-2, 2)));
        if (determinant(G).is_zero()) continue;
        const LaurentMatrix H = laurent_factorize(G);
        const LaurentPoly d = determinant(H);
        REQUIRE(!d.is_zero());
        CHECK(d.is_monomial());
        const auto Hinv = to_ratfunc(H).map([](const RatFunc& f) { return f; });
        const Matrix<RatFunc> L = G * [&] {
            // inverse over Q(s) by Cramer, independent of the triangular solve inside
            const RatFunc det = determinant(Hinv);
            Matrix<RatFunc> adj(r, r);
            for (auto i = 0u; i < r; ++i)
                for (auto j = 0u; j < r; ++j) {
                    Matrix<RatFunc> m = Hinv;
                    for (auto k = 0u; k < r; ++k) m(j, k) = k == i ? RatFunc(1) : RatFunc(0);
                    adj(i, j) = determinant(m) / det;
                }
            return adj;
        }();
        QMatrix L0(r, r);
        bool holo = true;
        for (auto i = 0u; i < r; ++i)
            for (auto j = 0u; j < r; ++j) {
                if (L(i, j).is_zero()) continue;
                holo = holo && L(i, j).valuation_at_zero() >= 0;
                if (holo) L0(i, j) = L(i, j).eval(0);
            }
        CHECK(holo);
        if (holo) CHECK(rank(L0) == r);
    }
}

TEST_CASE("pullback examples") {
    Gen g(4);
    const auto N = simple_pole(g, g.qmatrix(2, 2));
    CHECK(pullback(N, 1) == N);
    CHECK(pullback(scalar(RatFunc(BigRational(5, 3)) * s_pow(-1)), 2) == scalar(RatFunc(BigRational(10, 3)) * s_pow(-1)));
    CHECK(pullback(LaurentConnection::from_ratfunc(N), 3).to_ratfunc() == pullback(N, 3));
}

TEST_CASE("property: pullback multiplies residue eigenvalues by e") {
    Gen g(12);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t r = g.integer(1, 4);
        std::vector<BigRational> diag(r);
        for (auto& x : diag) x = g.rational(6);
        const auto N = simple_pole(g, conjugated_diagonal(g, diag));
        const int e = static_cast<int>(g.integer(1, 6));
        auto ev = rational_eigenvalues(residue(N));
        for (auto& x : ev) x *= e;
        CHECK(rational_eigenvalues(residue(pullback(N, e))) == ev);
    }
}

TEST_CASE("property: ramification_index is the least e clearing residue denominators") {
    Gen g(13);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t r = g.integer(1, 4);
        std::vector<BigRational> diag(r);
        for (auto& x : diag) x = g.rational(6);
        const auto N = simple_pole(g, conjugated_diagonal(g, diag));
        const int e = ramification_index(N);
        auto integral = [&](int k) {
            for (const auto& x : diag)
                if (BigRational(x * k).get_den() != 1) return false;
            return true;
        };
        CHECK(integral(e));
        for (int k = 1; k < e; ++k)
            if (e % k == 0) CHECK_FALSE(integral(k));
    }
}

TEST_CASE("shear_to_nilpotent examples") {
    Matrix<RatFunc> nil(2, 2);
    nil(0, 1) = s_pow(-1);
    nil(1, 0) = RatFunc(QPoly{1, 1});
    CHECK(shear_to_nilpotent(nil).H == laurent_identity(2));

    // Coordinates move by H = s^c, the inverse of the basis change s^-c.
    for (int c : {-3, -1, 2, 4}) {
        const auto sh = shear_to_nilpotent(scalar(RatFunc(c) * s_pow(-1)));
        CHECK(sh.H(0, 0) == LaurentPoly::monomial(1, c));
        CHECK(sh.N.A(0, 0).is_zero());
    }

    Gen g(9);
    QMatrix R(2, 2);
    R(0, 0) = 1;
    const auto N = simple_pole(g, R);
    const auto sh = shear_to_nilpotent(N);
    CHECK(nilpotent(sh.N.residue()));
    CHECK(replay(N, sh.H, sh.Hinv) == sh.N.to_ratfunc());

    QMatrix half(1, 1);
    half(0, 0) = BigRational(1, 2);
    CHECK_THROWS_AS(shear_to_nilpotent(simple_pole(g, half)), NonIntegerEigenvalue);
}

TEST_CASE("property: shearing is gauge covariant and creates no new poles") {
    Gen g(21);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t r = g.integer(1, 4);
        std::vector<BigRational> diag(r);
        for (auto& x : diag) x = g.integer(-2, 2);
        const auto N = simple_pole(g, conjugated_diagonal(g, diag));
        QPoly D = QPoly::constant(1);
        for (const auto& f : N.entries()) D = D * f.den();
        const auto sh = shear_to_nilpotent(N);
        const auto M = replay(N, sh.H, sh.Hinv);
        CHECK(M == sh.N.to_ratfunc());
        CHECK(nilpotent(sh.N.residue()));
        CHECK(laurent_invertible(sh.H, sh.Hinv));
        CHECK(poles_within(M, D));
    }
}

TEST_CASE("normalize on the degenerations") {
    struct Case {
        const char* name;
        Family fam;
        int e;
        bool regularized;
        std::size_t rank_n0;
        int index;
    };
    using namespace limifrob::testing;
    const std::vector<Case> cases{
        {"double conic", double_conic(), 2, false, 0, 1},
        {"three cusps", three_cusps(), 6, false, 0, 1},
        {"nodal sextic", nodal_sextic(), 1, false, 1, 2},
        {"quintic lines", quintic_lines(), 3, true, 1, 2},
        {"roman surface", roman_surface(), 2, false, 0, 3},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        const auto cd = gauss_manin_matrix(c.fam);
        const auto nc = normalize(cd.N, c.fam.n + 1);
        CHECK(nc.e == c.e);
        CHECK(nc.regularized == c.regularized);
        CHECK(nc.nilpotency_index == c.index);
        if (c.index <= 2) CHECK(rank_of(nc.N0) == c.rank_n0);
        CHECK(nc.Nprime.pole_order() <= 1);
        CHECK(laurent_invertible(nc.H, nc.Hinv));
        if (cd.basis.size() <= 12) {
            const auto M = replay(pullback(cd.N, nc.e), nc.H, nc.Hinv);
            CHECK(M == nc.nprime_ratfunc());
            CHECK(poles_within(M, cd.excised.inflate(nc.e)));
        }
    }
}
