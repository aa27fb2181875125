#pragma once

#include "limifrob/exact/matrix.hpp"
#include "limifrob/gd/family.hpp"
#include "limifrob/padic/padic_scalar.hpp"

namespace limifrob {

using PadicMatrix = Matrix<PadicScalar>;

// Frobenius on the diagonal fiber x_0^d + ... + x_{n+1}^d = 0 in the Dwork
// basis (same order as dwork_basis(n, d)), normalized to act on the primitive
// part of H^n. With p = 1 mod d every monomial class is an eigenvector; the
// element x^w Omega / P^k (a = w + 1) has eigenvalue
//
//   (-1)^(n-k) p^(n+1-k) prod_i Gamma_p((d - a_i) / d).
//
// Units are known to relative precision N_work. Throws DegreeNotDividing.
PadicMatrix diagonal_frobenius(int n, int d, long p, int N_work);

}  // namespace limifrob
