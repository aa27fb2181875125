#include "limifrob/fd/diagonal.hpp"

#include "limifrob/errors.hpp"
#include "limifrob/padic/special.hpp"

namespace limifrob {

// Gross-Koblitz turns the Jacobi sum attached to the character exponents
// d - a into the Gamma product below; its valuation k' - 1 (k' the level of
// d - a) is the Hodge slope of the element at level n + 2 - k', which is what
// pins the eigenvalue to a rather than to d - a.
PadicMatrix diagonal_frobenius(int n, int d, long p, int N_work) {
    if ((p - 1) % d != 0) throw DegreeNotDividing("d = " + std::to_string(d) + " does not divide p - 1 = " + std::to_string(p - 1));
    const auto basis = dwork_basis(n, d);
    const std::size_t r = basis.size();
    PadicMatrix F(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        const auto& b = basis[j];
        PadicScalar u = PadicScalar::exact(p, (n - b.k) % 2 == 0 ? 1 : -1);
        for (int wi : b.w) u *= padic_gamma(BigRational(d - wi - 1, d), p, N_work);
        F(j, j) = u * PadicScalar::exact(p, ipow(p, n + 1 - b.k));
    }
    return F;
}

}  // namespace limifrob
