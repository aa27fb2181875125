#include <algorithm>
#include <numeric>

#include "limifrob/errors.hpp"
#include "limifrob/gd/family.hpp"

namespace limifrob {

MPoly Family::fermat(int nvars, int d) {
    MPoly f(nvars);
    for (int i = 0; i < nvars; ++i) {
        Exponent e(nvars, 0);
        e[i] = d;
        f.add_term(e, 1);
    }
    return f;
}

void Family::validate() const {
    if (n < 1) throw InvalidFamily("fiber dimension n must be at least 1");
    if (d < 2) throw InvalidFamily("degree d must be at least 2");
    if (p < 3 || mpz_probab_prime_p(BigInt(p).get_mpz_t(), 30) == 0) throw InvalidFamily("p must be an odd prime");
    for (const MPoly* P : {&P0, &P1}) {
        if (P->is_zero()) throw HomogeneityError("polynomial is zero");
        if (P->nvars() != nvars()) throw InvalidFamily("polynomial has the wrong number of variables");
        if (!P->is_homogeneous() || P->total_degree() != d)
            throw HomogeneityError("polynomial is not homogeneous of degree " + std::to_string(d));
    }
    if (!(P1 == fermat(nvars(), d))) throw InvalidFamily("P1 must be the diagonal polynomial");
    if ((p - 1) % d != 0) throw DegreeNotDividing("d does not divide p - 1");
}

std::vector<DworkBasisElement> dwork_basis(int n, int d) {
    const int m = n + 2;
    std::vector<DworkBasisElement> out;
    Exponent w(m, 0);
    // odometer over [0, d-2]^m
    while (true) {
        const int s = std::accumulate(w.begin(), w.end(), 0);
        if ((s + m) % d == 0) out.push_back({w, (s + m) / d});
        int i = m - 1;
        while (i >= 0 && w[i] == d - 2) w[i--] = 0;
        if (i < 0) break;
        ++w[i];
    }
    std::sort(out.begin(), out.end(), [](const DworkBasisElement& a, const DworkBasisElement& b) {
        return a.k != b.k ? a.k < b.k : a.w < b.w;
    });
    return out;
}

}  // namespace limifrob
