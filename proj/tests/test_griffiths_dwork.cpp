#include <doctest.h>

#include <chrono>
#include <map>
#include <numeric>

#include "families.hpp"
#include "generators.hpp"
#include "limifrob/errors.hpp"
#include "limifrob/gd/gauss_manin.hpp"

using namespace limifrob;
using namespace limifrob::testing;

namespace {

std::map<int, int> counts_by_k(const std::vector<DworkBasisElement>& b) {
    std::map<int, int> c;
    for (const auto& e : b) ++c[e.k];
    return c;
}

// sum_k [x^(kd-n-2)] (1 + x + ... + x^(d-2))^(n+2), by polynomial powering.
long generating_count(int n, int d) {
    std::vector<long> f{1};
    for (int i = 0; i < n + 2; ++i) {
        std::vector<long> g(f.size() + d - 2, 0);
        for (std::size_t a = 0; a < f.size(); ++a)
            for (int b = 0; b <= d - 2; ++b) g[a + b] += f[a];
        f = g;
    }
    long s = 0;
    for (int k = 1; k * d - n - 2 < static_cast<int>(f.size()); ++k)
        if (k * d - n - 2 >= 0) s += f[k * d - n - 2];
    return s;
}

// Independent oracle at a rational point for pole order 2: solve
// A = sum_{B_2} c_b x^w + sum_{B_1} c_b x^w P + (sum_i d_i B_i) P - sum_i B_i d_i P
// as one dense system over Q. The basis coefficients are unique.
std::vector<BigRational> oracle_level2(const Family& fam, const BigRational& t0, const MPoly& A) {
    const int m = fam.nvars(), d = fam.d;
    const auto basis = dwork_basis(fam.n, d);
    const MPoly P = fam.P0 + t0 * fam.dPdt();
    MonomialIndex rows(m, 2 * d - m);
    MonomialIndex bm(m, d - m + 1);
    std::vector<MPoly> cols;
    for (const auto& b : basis) {
        MPoly x = MPoly::monomial(b.w);
        cols.push_back(b.k == 2 ? x : x * P);
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < bm.size(); ++j) {
            MPoly B = MPoly::monomial(bm[j]);
            cols.push_back(B.derivative(i) * P - B * P.derivative(i));
        }
    QMatrix S(rows.size(), cols.size() + 1);
    for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [e, v] : cols[c].terms()) S(rows.find(e), c) = v;
    for (const auto& [e, v] : A.terms()) S(rows.find(e), cols.size()) = v;
    Rref rr = rref(S);
    std::vector<BigRational> out(basis.size(), 0);
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        REQUIRE(rr.pivots[i] < cols.size());  // consistent
        if (rr.pivots[i] < basis.size()) out[rr.pivots[i]] = rr.reduced(i, cols.size());
    }
    // uniqueness: no free column may touch the basis block
    return out;
}

RatMPoly to_rat(const MPoly& f) {
    RatMPoly r;
    for (const auto& [e, c] : f.terms()) r[e] = RatFunc(c);
    return r;
}

}  // namespace

TEST_CASE("dwork_basis cardinalities") {
    auto b14 = dwork_basis(1, 4);
    CHECK(b14.size() == 6);
    CHECK(counts_by_k(b14) == std::map<int, int>{{1, 3}, {2, 3}});
    auto b24 = dwork_basis(2, 4);
    CHECK(b24.size() == 21);
    CHECK(counts_by_k(b24) == std::map<int, int>{{1, 1}, {2, 19}, {3, 1}});
    auto b33 = dwork_basis(3, 3);
    CHECK(b33.size() == 10);
    CHECK(counts_by_k(b33) == std::map<int, int>{{2, 5}, {3, 5}});
}

TEST_CASE("property: dwork_basis matches the generating function for n <= 3, d <= 6") {
    for (int n = 1; n <= 3; ++n)
        for (int d = 2; d <= 6; ++d) {
            auto b = dwork_basis(n, d);
            CHECK(static_cast<long>(b.size()) == generating_count(n, d));
            for (std::size_t i = 0; i < b.size(); ++i) {
                const int s = std::accumulate(b[i].w.begin(), b[i].w.end(), 0);
                CHECK(s + n + 2 == b[i].k * d);
                for (int wi : b[i].w) CHECK(wi <= d - 2);
                if (i > 0) CHECK((b[i - 1].k < b[i].k || (b[i - 1].k == b[i].k && b[i - 1].w < b[i].w)));
            }
        }
}

TEST_CASE("reduce_to_basis: basis elements map to unit columns") {
    Family fam = double_conic();
    const auto basis = dwork_basis(1, 4);
    for (std::size_t j = 0; j < basis.size(); ++j) {
        RatMPoly A{{basis[j].w, RatFunc(1)}};
        auto col = reduce_to_basis(A, basis[j].k, fam);
        for (std::size_t i = 0; i < basis.size(); ++i) CHECK(col[i] == RatFunc(i == j ? 1 : 0));
    }
}

TEST_CASE("reduce_to_basis: one hand Griffiths step on the Fermat quartic") {
    // 4 x0^4 x1 = B_0 dP/dx0 with B_0 = x0 x1, so the class is d/dx0(x0 x1) Omega/P = x1 Omega/P.
    Family fam = constant_pencil(1, 4, 5);
    RatMPoly A{{{4, 1, 0}, RatFunc(4)}};
    auto col = reduce_to_basis(A, 2, fam);
    const auto basis = dwork_basis(1, 4);
    for (std::size_t i = 0; i < basis.size(); ++i)
        CHECK(col[i] == RatFunc(basis[i].k == 1 && basis[i].w == Exponent{0, 1, 0} ? 1 : 0));
}

TEST_CASE("property: reduction agrees with the one-shot oracle and commutes with specialization") {
    Gen g(404);
    Family fam = double_conic();
    MonomialIndex deg5(3, 5);
    for (int trial = 0; trial < 3; ++trial) {
        MPoly A(3);
        for (int i = 0; i < deg5.size(); ++i)
            if (g.coin()) A.add_term(deg5[i], g.rational(9));
        const BigRational t0 = g.rational(7);
        auto oracle = oracle_level2(fam, t0, A);
        auto at_point = reduce_to_basis(to_rat(A), 2, fam, t0);
        auto generic = reduce_to_basis(to_rat(A), 2, fam);
        for (std::size_t i = 0; i < oracle.size(); ++i) {
            CHECK(at_point[i] == RatFunc(oracle[i]));
            CHECK(generic[i].eval(t0) == oracle[i]);
        }
    }
}

TEST_CASE("property: reduce_to_basis is Q(t)-linear") {
    Gen g(8);
    Family fam = double_conic();
    MonomialIndex deg5(3, 5);
    MPoly A(3), B(3);
    for (int i = 0; i < deg5.size(); ++i) {
        if (g.coin()) A.add_term(deg5[i], g.rational(5));
        if (g.coin()) B.add_term(deg5[i], g.rational(5));
    }
    RatFunc alpha = g.ratfunc(1), beta = g.ratfunc(1);
    RatMPoly C;
    for (const auto& [e, c] : A.terms()) C[e] += alpha * RatFunc(c);
    for (const auto& [e, c] : B.terms()) C[e] += beta * RatFunc(c);
    auto ra = reduce_to_basis(to_rat(A), 2, fam), rb = reduce_to_basis(to_rat(B), 2, fam);
    auto rc = reduce_to_basis(C, 2, fam);
    for (std::size_t i = 0; i < ra.size(); ++i) CHECK(rc[i] == alpha * ra[i] + beta * rb[i]);
}

TEST_CASE("gauss_manin_matrix: constant pencil has N = 0") {
    auto cd = gauss_manin_matrix(constant_pencil(1, 4, 5));
    CHECK(cd.N.is_zero());
    CHECK(cd.N.rows() == 6);
}

TEST_CASE("gauss_manin_matrix: modular route equals exact Q(t) elimination") {
    Family fam = three_cusps();
    auto fast = gauss_manin_matrix(fam);
    auto exact = gauss_manin_matrix_exact(fam);
    CHECK(fast.N == exact.N);
    CHECK(fast.excised == exact.excised);
    CHECK(satisfies_transversality(fast));
}

TEST_CASE("gauss_manin_matrix: transversality on the degenerations") {
    for (const Family& fam : {double_conic(), three_cusps(), nodal_sextic(), quintic_lines(), roman_surface()}) {
        auto t0 = std::chrono::steady_clock::now();
        auto cd = gauss_manin_matrix(fam);
        MESSAGE("r = ", cd.basis.size(), ", deg excised = ", cd.excised.degree(), ", ",
                std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(), " s");
        CHECK(satisfies_transversality(cd));
        // poles of N lie in the excised locus
        for (const auto& e : cd.N.entries()) CHECK(cd.excised.divmod(cd.excised, e.den()).second.is_zero());
    }
}
