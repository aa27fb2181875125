#include <doctest.h>

#include "generators.hpp"
#include "limifrob/exact/laurent.hpp"
#include "limifrob/exact/linalg.hpp"
#include "limifrob/exact/modular.hpp"
#include "limifrob/exact/ratfunc.hpp"

using namespace limifrob;
using limifrob::testing::Gen;

namespace {

RatFunc tpoly(std::initializer_list<long> c) {
    std::vector<BigRational> v;
    for (long x : c) v.emplace_back(x);
    return RatFunc(QPoly(std::move(v)));
}

// Cramer's rule with Berkowitz determinants: an oracle independent of the
// elimination code path.
std::vector<RatFunc> cramer(const Matrix<RatFunc>& A, const std::vector<RatFunc>& b) {
    const RatFunc d = determinant(A);
    std::vector<RatFunc> x;
    for (std::size_t j = 0; j < A.cols(); ++j) {
        Matrix<RatFunc> Aj = A;
        Aj.set_column(j, b);
        x.push_back(determinant(Aj) / d);
    }
    return x;
}

}  // namespace

TEST_CASE("solve_linear: identity returns the right-hand side") {
    Gen g(1);
    auto I = Matrix<RatFunc>::identity(3);
    std::vector<RatFunc> b{g.ratfunc(2), g.ratfunc(2), g.ratfunc(2)};
    auto x = solve_linear(I, b);
    REQUIRE(x.has_value());
    CHECK(*x == b);
}

TEST_CASE("solve_linear: diagonal system [[t,0],[0,t+1]] x = (t^2, t+1)") {
    Matrix<RatFunc> A(2, 2);
    A(0, 0) = RatFunc::t();
    A(1, 1) = tpoly({1, 1});
    auto x = solve_linear(A, {tpoly({0, 0, 1}), tpoly({1, 1})});
    REQUIRE(x.has_value());
    CHECK((*x)[0] == RatFunc::t());
    CHECK((*x)[1] == RatFunc(1));
}

TEST_CASE("solve_linear: random 4x4 over Q(t) agrees with Cramer oracle") {
    Gen g(2024);
    for (int trial = 0; trial < 6; ++trial) {
        Matrix<RatFunc> A(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) A(i, j) = g.ratfunc(2);
        if (determinant(A).is_zero()) continue;
        std::vector<RatFunc> x0{g.ratfunc(2), g.ratfunc(1), g.ratfunc(2), g.ratfunc(1)};
        auto b = A.apply(x0);
        auto x = solve_linear(A, b);
        REQUIRE(x.has_value());
        CHECK(*x == x0);
        CHECK(cramer(A, b) == x0);
        CHECK(A.apply(*x) == b);
    }
}

TEST_CASE("solve_linear: inconsistent and rectangular systems") {
    Matrix<RatFunc> A(2, 2);
    A(0, 0) = RatFunc::t();
    A(0, 1) = RatFunc(1);
    A(1, 0) = RatFunc::t() * RatFunc::t();
    A(1, 1) = RatFunc::t();
    CHECK_FALSE(solve_linear(A, {RatFunc(1), RatFunc(1)}).has_value());
    auto x = solve_linear(A, {RatFunc(1), RatFunc::t()});
    REQUIRE(x.has_value());
    CHECK(A.apply(*x) == std::vector<RatFunc>{RatFunc(1), RatFunc::t()});
    CHECK_THROWS_AS(solve_linear(A, {RatFunc(1)}), DimensionMismatch);
}

TEST_CASE("char_poly examples") {
    CHECK(char_poly(QMatrix(2, 2)) == QPoly{0, 0, 1});
    QMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 3;
    CHECK(char_poly(d) == QPoly{6, -5, 1});
    // companion matrix of x^3 - x - 1
    QMatrix c(3, 3);
    c(1, 0) = 1;
    c(2, 1) = 1;
    c(0, 2) = 1;
    c(1, 2) = 1;
    CHECK(char_poly(c) == QPoly{-1, -1, 0, 1});
    CHECK_THROWS_AS(char_poly(QMatrix(2, 3)), NonSquare);
}

TEST_CASE("rational_eigenvalues examples") {
    QMatrix nil(3, 3);
    nil(0, 1) = 5;
    nil(1, 2) = BigRational(-2, 7);
    nil(0, 2) = 1;
    CHECK(rational_eigenvalues(nil) == std::vector<BigRational>{0, 0, 0});

    QMatrix d(3, 3);
    d(0, 0) = BigRational(1, 2);
    d(1, 1) = BigRational(1, 2);
    d(2, 2) = -1;
    CHECK(rational_eigenvalues(d) == std::vector<BigRational>{-1, BigRational(1, 2), BigRational(1, 2)});

    // companion of (x - 2/3)(x + 1) = x^2 + x/3 - 2/3, conjugated to scramble entries
    QMatrix c(2, 2);
    c(1, 0) = 1;
    c(0, 1) = BigRational(2, 3);
    c(1, 1) = BigRational(-1, 3);
    QMatrix P(2, 2);
    P(0, 0) = 3;
    P(0, 1) = 1;
    P(1, 0) = 5;
    P(1, 1) = 2;
    CHECK(rational_eigenvalues(P * c * inverse(P)) == std::vector<BigRational>{-1, BigRational(2, 3)});

    QMatrix rot(2, 2);
    rot(0, 1) = -1;
    rot(1, 0) = 1;
    CHECK_THROWS_AS(rational_eigenvalues(rot), NotRationalSpectrum);
}

TEST_CASE("property: eigenvalues are roots of the characteristic polynomial") {
    Gen g(77);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = g.integer(1, 6);
        QMatrix D(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            D(i, i) = BigRational(g.integer(-6, 6), g.integer(1, 6));
            D(i, i).canonicalize();
            for (std::size_t j = i + 1; j < n; ++j) D(i, j) = g.rational(4);
        }
        QMatrix P = g.qmatrix(n, n, 5);
        if (rank(P) < n) continue;
        QMatrix M = P * D * inverse(P);
        auto ev = rational_eigenvalues(M);
        REQUIRE(ev.size() == n);
        QPoly cp = char_poly(M);
        for (const auto& e : ev) CHECK(cp.eval(e) == 0);
        std::vector<BigRational> diag;
        for (std::size_t i = 0; i < n; ++i) diag.push_back(D(i, i));
        std::sort(diag.begin(), diag.end());
        CHECK(ev == diag);
    }
}

TEST_CASE("property: exact field axioms on random triples") {
    Gen g(5);
    for (int trial = 0; trial < 50; ++trial) {
        BigRational a = g.rational(1000), b = g.rational(1000), c = g.rational(1000);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        RatFunc f = g.ratfunc(3), h = g.ratfunc(3), k = g.ratfunc(2);
        CHECK((f + h) + k == f + (h + k));
        CHECK(f * (h + k) == f * h + f * k);
        for (const RatFunc* r : {&f, &h, &k}) {
            CHECK(r->den().leading() == 1);
            CHECK(gcd_q(r->num(), r->den()).degree() <= 0);
        }
        if (!h.is_zero()) CHECK((f / h) * h == f);
    }
}

TEST_CASE("Laurent polynomials") {
    LaurentPoly a(QPoly{1, 2}, -1);  // 1/s + 2
    LaurentPoly b = LaurentPoly::monomial(3, 2);
    CHECK((a * b).valuation() == 1);
    CHECK((a * b).coeff(2) == 6);
    CHECK(a.derivative() == LaurentPoly::monomial(-1, -2));
    CHECK((a - a).is_zero());
    CHECK(b.monomial_inverse() * b == LaurentPoly(1));
    CHECK(a.inflate(2) == LaurentPoly(QPoly{1, 0, 2}, -2));
}

TEST_CASE("subspace operations") {
    QMatrix U(3, 2);
    U(0, 0) = 1;
    U(1, 1) = 1;
    QMatrix W(3, 2);
    W(1, 0) = 1;
    W(2, 1) = 1;
    CHECK(subspace_intersection(U, W).cols() == 1);
    CHECK(subspace_sum(U, W).cols() == 3);
    CHECK(subspace_contains(subspace_sum(U, W), U));
    CHECK(nullspace(U.transpose()).cols() == 1);
}

TEST_CASE("modular helpers: CRT, rational reconstruction, Pade") {
    BigRational q(-123457, 9871);
    BigInt a = 0, m = 0;
    for (std::size_t i = 0; i < 2; ++i) {
        PrimeField F(large_prime(i));
        crt_accumulate(a, m, *F.from_rational(q), F.modulus());
    }
    auto r = rational_reconstruct(a, m);
    REQUIRE(r.has_value());
    CHECK(*r == q);

    PrimeField F(large_prime(0));
    // (1 + 2x) / (1 - 3x) as a series
    ModPoly s(10);
    s[0] = 1;
    for (int i = 1; i < 10; ++i) s[i] = F.mul(5, F.pow(3, i - 1));
    auto p = pade(F, s, 1, 1);
    REQUIRE(p.has_value());
    CHECK(p->first == ModPoly{1, 2});
    CHECK(p->second == ModPoly{1, F.neg(3)});
}
