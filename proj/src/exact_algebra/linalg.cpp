#include "limifrob/exact/linalg.hpp"

#include <algorithm>

#include "limifrob/exact/roots.hpp"

namespace limifrob {

// ---------------------------------------------------------------------------
// Fraction-free solve over Q(t)

std::optional<std::vector<RatFunc>> solve_linear(const Matrix<RatFunc>& A, const std::vector<RatFunc>& b) {
    const std::size_t m = A.rows(), n = A.cols();
    if (b.size() != m) throw DimensionMismatch("solve_linear: right-hand side length differs from row count");

    // Clear denominators row by row and pull out the rational content.
    Matrix<QPoly> M(m, n + 1);
    for (std::size_t i = 0; i < m; ++i) {
        QPoly den = QPoly::constant(1);
        auto absorb = [&](const RatFunc& f) {
            if (!f.is_zero() && f.den().degree() > 0) den = den * f.den().exact_div(gcd_q(den, f.den()));
        };
        for (std::size_t j = 0; j < n; ++j) absorb(A(i, j));
        absorb(b[i]);
        for (std::size_t j = 0; j <= n; ++j) {
            const RatFunc& f = j < n ? A(i, j) : b[i];
            M(i, j) = f.is_zero() ? QPoly() : f.num() * den.exact_div(f.den());
        }
        BigInt g = 0, l = 1;
        for (std::size_t j = 0; j <= n; ++j)
            for (const auto& c : M(i, j).coeffs()) {
                g = gcd(g, BigInt(c.get_num()));
                l = lcm(l, BigInt(c.get_den()));
            }
        if (g != 0) {
            BigRational s(l, g);
            s.canonicalize();
            for (std::size_t j = 0; j <= n; ++j) M(i, j) *= s;
        }
    }

    // Bareiss elimination: every division below is exact.
    QPoly prev = QPoly::constant(1);
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t piv = m;
        for (std::size_t i = row; i < m; ++i)
            if (!M(i, col).is_zero() && (piv == m || M(i, col).degree() < M(piv, col).degree())) piv = i;
        if (piv == m) continue;
        if (piv != row)
            for (std::size_t j = 0; j <= n; ++j) std::swap(M(piv, j), M(row, j));
        for (std::size_t i = row + 1; i < m; ++i) {
            for (std::size_t j = col + 1; j <= n; ++j)
                M(i, j) = (M(row, col) * M(i, j) - M(i, col) * M(row, j)).exact_div(prev);
            M(i, col) = QPoly();
        }
        // Rows above the pivot row keep their scale, so later divisions stay exact
        // only for rows below; that is all back substitution needs.
        prev = M(row, col);
        pivots.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!M(i, n).is_zero()) return std::nullopt;

    std::vector<RatFunc> x(n, RatFunc());
    for (std::size_t k = pivots.size(); k-- > 0;) {
        const std::size_t col = pivots[k];
        RatFunc acc(M(k, n));
        for (std::size_t j = col + 1; j < n; ++j)
            if (!M(k, j).is_zero() && !x[j].is_zero()) acc -= RatFunc(M(k, j)) * x[j];
        x[col] = acc / RatFunc(M(k, col));
    }
    return x;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial and rational spectrum

QPoly char_poly(const QMatrix& M) {
    auto c = char_poly_coeffs(M);
    std::reverse(c.begin(), c.end());
    return QPoly(std::move(c));
}

std::vector<BigRational> rational_roots(const QPoly& f, QPoly* rest) {
    std::vector<BigRational> roots;
    if (f.is_zero()) throw std::domain_error("rational_roots: zero polynomial");
    QPoly g = f.monic();
    while (g.degree() > 0 && g.coeff(0) == 0) {
        roots.push_back(0);
        g = g.shift(-1);
    }
    if (g.degree() > 0) {
        // Roots of the squarefree part are simple, hence numerically well located.
        QPoly sqf = g.exact_div(gcd_q(g, g.derivative()));
        ZPoly z = primitive_part(sqf);
        const BigInt lead = z.leading();
        std::vector<BigRational> candidates;
        for (const auto& r : approximate_roots(z)) {
            if (abs(r.imag()) > HighFloat("1e-30") * (abs(r.real()) + 1)) continue;
            // Rational-root theorem: a root a/b in lowest terms has b | lead, so lead*root is an integer.
            HighFloat scaled = r.real() * HighFloat(lead.get_str());
            BigInt y = round_to_bigint(scaled);
            BigRational cand(y, lead);
            cand.canonicalize();
            if (sqf.eval(cand) == 0) candidates.push_back(cand);
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
        for (const auto& c : candidates) {
            QPoly lin{-c, BigRational(1)};
            for (;;) {
                auto [q, r] = QPoly::divmod(g, lin);
                if (!r.is_zero()) break;
                roots.push_back(c);
                g = q;
            }
        }
    }
    std::sort(roots.begin(), roots.end());
    if (rest) *rest = g;
    return roots;
}

std::vector<BigRational> rational_eigenvalues(const QMatrix& M) {
    QPoly rest;
    auto roots = rational_roots(char_poly(M), &rest);
    if (rest.degree() > 0)
        throw NotRationalSpectrum("characteristic polynomial has irrational factor " + to_string(rest, "x"));
    return roots;
}

// ---------------------------------------------------------------------------
// Linear algebra over Q

Rref rref(QMatrix M) {
    Rref out;
    std::size_t row = 0;
    for (std::size_t col = 0; col < M.cols() && row < M.rows(); ++col) {
        std::size_t piv = M.rows();
        for (std::size_t i = row; i < M.rows(); ++i)
            if (M(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv == M.rows()) continue;
        if (piv != row)
            for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(piv, j), M(row, j));
        const BigRational inv = 1 / M(row, col);
        for (std::size_t j = col; j < M.cols(); ++j) M(row, j) *= inv;
        for (std::size_t i = 0; i < M.rows(); ++i) {
            if (i == row || M(i, col) == 0) continue;
            const BigRational f = M(i, col);
            for (std::size_t j = col; j < M.cols(); ++j) M(i, j) -= f * M(row, j);
        }
        out.pivots.push_back(col);
        ++row;
    }
    out.reduced = std::move(M);
    return out;
}

std::size_t rank(const QMatrix& M) { return rref(M).pivots.size(); }

QMatrix nullspace(const QMatrix& M) {
    Rref r = rref(M);
    const std::size_t n = M.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto c : r.pivots) is_pivot[c] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) free.push_back(j);
    QMatrix K(n, free.size());
    for (std::size_t k = 0; k < free.size(); ++k) {
        K(free[k], k) = 1;
        for (std::size_t i = 0; i < r.pivots.size(); ++i) K(r.pivots[i], k) = -r.reduced(i, free[k]);
    }
    return K;
}

QMatrix column_basis(const QMatrix& M) {
    Rref r = rref(M);
    QMatrix B(M.rows(), r.pivots.size());
    for (std::size_t k = 0; k < r.pivots.size(); ++k)
        for (std::size_t i = 0; i < M.rows(); ++i) B(i, k) = M(i, r.pivots[k]);
    return B;
}

QMatrix hcat(const QMatrix& A, const QMatrix& B) {
    if (A.rows() != B.rows()) throw DimensionMismatch("hcat: row counts differ");
    QMatrix C(A.rows(), A.cols() + B.cols());
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) C(i, j) = A(i, j);
        for (std::size_t j = 0; j < B.cols(); ++j) C(i, A.cols() + j) = B(i, j);
    }
    return C;
}

QMatrix inverse(const QMatrix& M) {
    if (!M.is_square()) throw NonSquare("inverse: matrix not square");
    const std::size_t n = M.rows();
    Rref r = rref(hcat(M, QMatrix::identity(n)));
    if (r.pivots.size() < n || r.pivots[n - 1] != n - 1) throw Singular("inverse: singular matrix");
    return r.reduced.block(0, n, n, n);
}

std::optional<std::vector<BigRational>> solve(const QMatrix& A, const std::vector<BigRational>& b) {
    if (b.size() != A.rows()) throw DimensionMismatch("solve: right-hand side length");
    QMatrix aug(A.rows(), A.cols() + 1);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) aug(i, j) = A(i, j);
        aug(i, A.cols()) = b[i];
    }
    Rref r = rref(aug);
    if (!r.pivots.empty() && r.pivots.back() == A.cols()) return std::nullopt;
    std::vector<BigRational> x(A.cols(), 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) x[r.pivots[i]] = r.reduced(i, A.cols());
    return x;
}

QMatrix subspace_sum(const QMatrix& U, const QMatrix& W) { return column_basis(hcat(U, W)); }

QMatrix subspace_intersection(const QMatrix& U, const QMatrix& W) {
    if (U.cols() == 0 || W.cols() == 0) return QMatrix(U.rows(), 0);
    // U a = W b  <=>  [U | -W] (a; b) = 0
    QMatrix K = nullspace(hcat(U, -W));
    QMatrix Ua = U * K.block(0, 0, U.cols(), K.cols());
    return column_basis(Ua);
}

bool subspace_contains(const QMatrix& U, const QMatrix& W) {
    if (W.cols() == 0) return true;
    return rank(hcat(U, W)) == rank(U);
}

}  // namespace limifrob
