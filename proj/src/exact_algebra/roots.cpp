#include "limifrob/exact/roots.hpp"

#include <cmath>
#include <stdexcept>

namespace limifrob {

namespace {

HighFloat to_high(const BigInt& x) { return HighFloat(x.get_str()); }

}  // namespace

BigInt round_to_bigint(const HighFloat& x) {
    std::string s = boost::multiprecision::round(x).str(0, std::ios_base::fixed);
    if (auto dot = s.find('.'); dot != std::string::npos) s.resize(dot);
    if (s == "-0") s = "0";
    return BigInt(s);
}

std::vector<HighComplex> approximate_roots(const ZPoly& f) {
    if (f.is_zero()) throw std::domain_error("approximate_roots: zero polynomial");
    const int n = f.degree();
    std::vector<HighComplex> roots;
    if (n <= 0) return roots;

    std::vector<HighComplex> c(n + 1);
    for (int i = 0; i <= n; ++i) c[i] = HighComplex(to_high(f.coeff(i)));

    auto eval = [&](const HighComplex& z, HighComplex& val, HighComplex& der) {
        val = c[n];
        der = HighComplex(0);
        for (int i = n - 1; i >= 0; --i) {
            der = der * z + val;
            val = val * z + c[i];
        }
    };

    // Cauchy bound for the initial circle.
    HighFloat bound = 0;
    const HighFloat lead = abs(c[n]);
    for (int i = 0; i < n; ++i) {
        HighFloat q = abs(c[i]) / lead;
        if (q > bound) bound = q;
    }
    bound += 1;
    const HighFloat radius = bound / 2;
    roots.resize(n);
    for (int k = 0; k < n; ++k) {
        const double angle = 2.0 * M_PI * (k + 0.25) / n + 0.4;
        roots[k] = HighComplex(radius * HighFloat(std::cos(angle)), radius * HighFloat(std::sin(angle)));
    }

    const HighFloat tol = HighFloat("1e-80");
    for (int iter = 0; iter < 2000; ++iter) {
        HighFloat worst = 0;
        for (int k = 0; k < n; ++k) {
            HighComplex val, der;
            eval(roots[k], val, der);
            if (val == HighComplex(0)) continue;
            HighComplex ratio = val / der;
            HighComplex sum(0);
            for (int j = 0; j < n; ++j)
                if (j != k) sum += HighComplex(1) / (roots[k] - roots[j]);
            HighComplex step = ratio / (HighComplex(1) - ratio * sum);
            roots[k] -= step;
            HighFloat rel = abs(step) / (abs(roots[k]) + 1);
            if (rel > worst) worst = rel;
        }
        if (worst < tol) break;
    }
    return roots;
}

}  // namespace limifrob
