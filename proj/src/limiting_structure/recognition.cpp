#include <algorithm>

#include "limifrob/errors.hpp"
#include "limifrob/exact/roots.hpp"
#include "limifrob/ls/limiting.hpp"

namespace limifrob {

ZPoly recognize_integer_poly(const std::vector<PadicScalar>& coeffs, const std::vector<BigInt>& bounds) {
    if (coeffs.size() != bounds.size()) throw DimensionMismatch("recognize_integer_poly: one bound per coefficient");
    std::vector<BigInt> out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        const PadicScalar& c = coeffs[i];
        const BigInt& B = bounds[i];
        const std::string where = "coefficient " + std::to_string(i);
        if (c.is_exact()) {
            BigRational q = c.to_rational();
            if (q.get_den() != 1) throw Unrecognized(where + " is not an integer");
            BigInt z = q.get_num();
            if (abs(z) > B) throw Unrecognized(where + " exceeds its bound");
            out.push_back(z);
            continue;
        }
        if (!c.is_zero() && c.valuation() < 0) throw Unrecognized(where + " is not p-integral");
        const int A = c.absolute_precision();
        if (A < 0) throw BoundTooLargeForPrecision(where + " has negative absolute precision");
        BigInt mod = ipow(c.prime(), A);
        if (2 * B >= mod)
            throw BoundTooLargeForPrecision(where + ": bound " + B.get_str() + " needs more than " + std::to_string(A) +
                                            " digits");
        BigInt z = c.residue(A);
        if (2 * z > mod) z -= mod;
        if (abs(z) > B) throw Unrecognized(where + ": lift " + z.get_str() + " exceeds bound " + B.get_str());
        out.push_back(z);
    }
    return ZPoly(std::move(out));
}

std::vector<BigInt> weight_bounds(long p, std::vector<int> twice_weights, int degree) {
    std::sort(twice_weights.rbegin(), twice_weights.rend());
    if (degree < 0 || degree > static_cast<int>(twice_weights.size()))
        throw DimensionMismatch("weight_bounds: degree exceeds the number of weights");
    std::vector<HighFloat> e(degree + 1, HighFloat(0));
    e[0] = 1;
    for (int m = 0; m < degree; ++m) {
        HighFloat a = pow(HighFloat(p), HighFloat(twice_weights[m]) / 2);
        for (int i = m + 1; i >= 1; --i) e[i] += a * e[i - 1];
    }
    std::vector<BigInt> out;
    // Exact integer bounds come out a few ulps high; do not round those up.
    for (const auto& x : e) out.push_back(round_to_bigint(ceil(x * (1 - HighFloat("1e-60")))));
    return out;
}

WeilCheck weil_weight_check(const ZPoly& Q, int twice_weight, long p) {
    WeilCheck res;
    if (Q.coeff(0) != 1) return res;
    if (Q.degree() == 0) {
        res.pass = true;
        return res;
    }
    std::vector<BigRational> qc;
    for (const auto& c : Q.coeffs()) qc.push_back(BigRational(c));
    QPoly f(qc);
    // Repeated roots slow the iteration down, so work with the squarefree part.
    QPoly g = gcd_q(f, f.derivative());
    QPoly sf = QPoly::divmod(f, g).first;
    ZPoly z = primitive_part(sf);
    std::vector<BigInt> rev(z.coeffs().rbegin(), z.coeffs().rend());
    const HighFloat target = pow(HighFloat(p), HighFloat(twice_weight) / 2);
    HighFloat worst = 0;
    for (const auto& a : approximate_roots(ZPoly(rev))) worst = std::max(worst, HighFloat(abs(abs(a) / target - 1)));
    res.worst_relative_error = static_cast<double>(worst);
    res.pass = res.worst_relative_error <= kWeilTolerance;
    return res;
}

}  // namespace limifrob
