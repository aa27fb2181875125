#include "limifrob/oracle/zeta.hpp"

#include "limifrob/errors.hpp"

namespace limifrob {

std::vector<BigInt> inverse_root_power_sums(const ZPoly& f, int K) {
    if (f.coeff(0) != 1) throw std::invalid_argument("inverse_root_power_sums: f(0) must be 1");
    std::vector<BigInt> s(K + 1, 0);
    for (int k = 1; k <= K; ++k) {
        BigInt v = -BigInt(k) * f.coeff(k);
        for (int i = 1; i < k; ++i) v -= f.coeff(i) * s[k - i];
        s[k] = v;
    }
    return s;
}

ZPoly zeta_numerator_curve(const CountVector& counts, int g, long p) {
    if (g == 0) return ZPoly{1};
    if (static_cast<int>(counts.size()) < g)
        throw InsufficientCounts("zeta_numerator_curve: need " + std::to_string(g) + " counts");
    // s_k = sum of k-th powers of the inverse roots = p^k + 1 - N_k.
    std::vector<BigInt> s(counts.size() + 1, 0);
    for (std::size_t k = 1; k <= counts.size(); ++k) s[k] = ipow(p, k) + 1 - counts[k - 1];

    std::vector<BigInt> a(2 * g + 1, 0);
    a[0] = 1;
    for (int k = 1; k <= g; ++k) {
        BigInt v = 0;
        for (int i = 1; i <= k; ++i) v -= s[i] * a[k - i];
        if (!mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(k)))
            throw SymmetryViolation("zeta_numerator_curve: counts give a non-integral coefficient");
        a[k] = v / k;
    }
    for (int i = 0; i < g; ++i) a[2 * g - i] = ipow(p, g - i) * a[i];
    ZPoly Q(a);

    // Weil: |a_1| <= 2g sqrt(p).
    if (Q.coeff(1) * Q.coeff(1) > BigInt(4L * g * g) * p)
        throw VerificationMismatch("zeta_numerator_curve: a_1 violates the Weil bound");

    const auto ps = inverse_root_power_sums(Q, static_cast<int>(counts.size()));
    for (std::size_t k = g + 1; k <= counts.size(); ++k)
        if (ps[k] != s[k])
            throw SymmetryViolation("zeta_numerator_curve: count over F_" + std::to_string(p) + "^" +
                                    std::to_string(k) + " disagrees with the completed numerator");
    return Q;
}

std::vector<ZetaFactor> projective_factors(int n, long p) {
    std::vector<ZetaFactor> v;
    for (int i = 0; i <= n; ++i) v.push_back({ZPoly{BigInt(1), -ipow(p, i)}, -1});
    return v;
}

ConsistencyReport zeta_consistency(const ZPoly& Q, const CountVector& counts, int n, long p,
                                   const std::vector<ZetaFactor>& extra) {
    (void)p;
    const int K = static_cast<int>(counts.size());
    std::vector<ZetaFactor> all = extra;
    all.push_back({Q, n % 2 == 0 ? -1 : 1});
    ConsistencyReport r;
    r.predicted.assign(K, 0);
    for (const auto& f : all) {
        const auto s = inverse_root_power_sums(f.poly, K);
        for (int k = 1; k <= K; ++k) r.predicted[k - 1] -= BigInt(f.exponent) * s[k];
    }
    for (int k = 1; k <= K; ++k)
        if (r.predicted[k - 1] != counts[k - 1]) {
            r.pass = false;
            r.first_mismatch = k;
            break;
        }
    return r;
}

}  // namespace limifrob
