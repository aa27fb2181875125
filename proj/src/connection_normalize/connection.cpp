#include "limifrob/cn/connection.hpp"

#include <algorithm>

#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

RatFunc laurent_to_ratfunc(const LaurentPoly& f, const QPoly& den) {
    if (f.is_zero()) return RatFunc(0);
    if (f.valuation() >= 0) return RatFunc(f.base().shift(f.valuation()), den);
    return RatFunc(f.base(), den.shift(-f.valuation()));
}

}  // namespace

LaurentConnection LaurentConnection::from_ratfunc(const Matrix<RatFunc>& N) {
    if (!N.is_square()) throw NonSquare("connection matrix not square");
    QPoly D = QPoly::constant(1);
    for (const auto& x : N.entries())
        if (!x.is_zero()) D = D * x.den().exact_div(gcd_q(D, x.den()));
    const int a = D.low_degree();
    LaurentConnection c;
    c.den = D.shift(-a).monic();
    const BigRational scale = BigRational(1) / D.shift(-a).leading();
    c.A = LaurentMatrix(N.rows(), N.cols());
    for (std::size_t i = 0; i < N.rows(); ++i)
        for (std::size_t j = 0; j < N.cols(); ++j) {
            const RatFunc& x = N(i, j);
            if (x.is_zero()) continue;
            c.A(i, j) = LaurentPoly(x.num() * D.exact_div(x.den()) * scale, 0).shift(-a);
        }
    return c;
}

Matrix<RatFunc> LaurentConnection::to_ratfunc() const {
    return A.map([&](const LaurentPoly& f) { return laurent_to_ratfunc(f, den); });
}

int LaurentConnection::pole_order() const {
    int k = 0;
    for (const auto& f : A.entries())
        if (!f.is_zero()) k = std::max(k, -f.valuation());
    return k;
}

QMatrix LaurentConnection::residue() const {
    if (pole_order() > 1) throw NotRegular("residue: pole of order above one");
    const BigRational d0 = den.coeff(0);
    QMatrix R(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!A(i, j).is_zero()) R(i, j) = A(i, j).coeff(-1) / d0;
    return R;
}

SeriesMatrix LaurentConnection::expand(int prec) const {
    return A.map([&](const LaurentPoly& f) { return LaurentSeries::quotient(f, den, prec); });
}

LaurentConnection apply_gauge(const LaurentConnection& N, const LaurentMatrix& H, const LaurentMatrix& Hinv) {
    LaurentConnection out;
    out.den = N.den;
    out.A = H * N.A * Hinv - LaurentPoly(N.den) * (laurent_derivative(H) * Hinv);
    return out;
}

LaurentConnection pullback(const LaurentConnection& N, int e) {
    if (e < 1) throw std::invalid_argument("pullback: e must be positive");
    if (e == 1) return N;
    const LaurentPoly jac = LaurentPoly::monomial(e, e - 1);
    LaurentConnection out;
    out.den = N.den.inflate(e);
    out.A = N.A.map([&](const LaurentPoly& f) { return jac * f.inflate(e); });
    return out;
}

LaurentMatrix laurent_identity(std::size_t n) { return LaurentMatrix::identity(n); }

LaurentMatrix laurent_derivative(const LaurentMatrix& H) {
    return H.map([](const LaurentPoly& f) { return f.derivative(); });
}

LaurentMatrix laurent_inflate(const LaurentMatrix& H, int e) {
    return H.map([&](const LaurentPoly& f) { return f.inflate(e); });
}

LaurentMatrix to_laurent(const QMatrix& M) {
    return M.map([](const BigRational& x) { return LaurentPoly(x); });
}

int padic_valuation(const LaurentMatrix& H, long p) {
    int v = kInfiniteValuation;
    for (const auto& f : H.entries())
        for (const auto& c : f.base().coeffs())
            if (c != 0) v = std::min(v, ord_p(c, p));
    return v;
}

Matrix<RatFunc> to_ratfunc(const LaurentMatrix& H) {
    return H.map([](const LaurentPoly& f) { return laurent_to_ratfunc(f, QPoly::constant(1)); });
}

Matrix<RatFunc> apply_gauge(const Matrix<RatFunc>& N, const LaurentMatrix& H, const LaurentMatrix& Hinv) {
    const auto h = to_ratfunc(H), hi = to_ratfunc(Hinv), dh = to_ratfunc(laurent_derivative(H));
    return h * N * hi - dh * hi;
}

Matrix<RatFunc> pullback(const Matrix<RatFunc>& N, int e) {
    if (e < 1) throw std::invalid_argument("pullback: e must be positive");
    const RatFunc jac(QPoly::monomial(BigRational(e), e - 1));
    return N.map([&](const RatFunc& f) { return jac * f.inflate(e); });
}

QMatrix residue(const Matrix<RatFunc>& N) { return LaurentConnection::from_ratfunc(N).residue(); }

}  // namespace limifrob
