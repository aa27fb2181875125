#pragma once

#include <optional>
#include <vector>

#include "limifrob/exact/matrix.hpp"
#include "limifrob/exact/numbers.hpp"
#include "limifrob/exact/ratfunc.hpp"
#include "limifrob/exact/unipoly.hpp"

namespace limifrob {

using QMatrix = Matrix<BigRational>;

// Solve A x = b over Q(t) by fraction-free elimination on cleared rows. Free
// variables are set to zero. nullopt when b is outside the column span.
std::optional<std::vector<RatFunc>> solve_linear(const Matrix<RatFunc>& A, const std::vector<RatFunc>& b);

// Coefficients of det(x I - M), highest degree first, computed by the
// division-free Berkowitz recursion (so R only needs ring operations).
template <class R>
std::vector<R> char_poly_coeffs(const Matrix<R>& M) {
    if (!M.is_square()) throw NonSquare("char_poly: matrix not square");
    const std::size_t n = M.rows();
    std::vector<R> vec{R(1)};
    for (std::size_t k = 0; k < n; ++k) {
        // Leading (k+1)x(k+1) block = [[A, c], [r, a]] with A the k x k block.
        const R& a = M(k, k);
        std::vector<R> t;
        t.reserve(k + 2);
        t.push_back(R(1));
        t.push_back(-a);
        std::vector<R> col(k);
        for (std::size_t i = 0; i < k; ++i) col[i] = M(i, k);
        for (std::size_t j = 0; j < k; ++j) {
            R s(0);
            for (std::size_t i = 0; i < k; ++i) s += M(k, i) * col[i];
            t.push_back(-s);
            if (j + 1 < k) {
                std::vector<R> next(k, R(0));
                for (std::size_t i = 0; i < k; ++i)
                    for (std::size_t l = 0; l < k; ++l) next[i] += M(i, l) * col[l];
                col = std::move(next);
            }
        }
        std::vector<R> nv(k + 2, R(0));
        for (std::size_t i = 0; i < k + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vec.size(); ++j) nv[i] += t[i - j] * vec[j];
        vec = std::move(nv);
    }
    return vec;
}

template <class R>
R determinant(const Matrix<R>& M) {
    auto c = char_poly_coeffs(M);
    R d = c.back();
    return (M.rows() % 2 == 0) ? d : R(-d);
}

// det(x I - M) as a polynomial (monic, degree = rows).
QPoly char_poly(const QMatrix& M);

// All eigenvalues with algebraic multiplicity, sorted ascending. Throws
// NotRationalSpectrum unless the characteristic polynomial splits over Q.
std::vector<BigRational> rational_eigenvalues(const QMatrix& M);

// Rational roots of f with multiplicity (ascending); the unsplit cofactor is returned in rest.
std::vector<BigRational> rational_roots(const QPoly& f, QPoly* rest = nullptr);

// Exact linear algebra over Q.
struct Rref {
    QMatrix reduced;
    std::vector<std::size_t> pivots;
};
Rref rref(QMatrix M);
std::size_t rank(const QMatrix& M);
// Columns form a basis of {x : M x = 0}.
QMatrix nullspace(const QMatrix& M);
// Columns form a basis of the column space of M.
QMatrix column_basis(const QMatrix& M);
QMatrix inverse(const QMatrix& M);
std::optional<std::vector<BigRational>> solve(const QMatrix& A, const std::vector<BigRational>& b);

// Subspaces of Q^n represented by a matrix whose columns are a basis
// (a 0-column matrix is the zero subspace).
QMatrix subspace_sum(const QMatrix& U, const QMatrix& W);
QMatrix subspace_intersection(const QMatrix& U, const QMatrix& W);
bool subspace_contains(const QMatrix& U, const QMatrix& W);  // W subset of U
QMatrix hcat(const QMatrix& A, const QMatrix& B);

}  // namespace limifrob
