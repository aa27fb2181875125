#include "limifrob/fd/specialize.hpp"

#include <algorithm>
#include <map>

#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

struct Span {
    int lo = kInfiniteValuation, hi = -kInfiniteValuation;
};

Span exponent_span(const LaurentMatrix& H) {
    Span s;
    for (const auto& f : H.entries()) {
        if (f.is_zero()) continue;
        s.lo = std::min(s.lo, f.valuation());
        s.hi = std::max(s.hi, f.top_degree());
    }
    return s;
}

// Coefficient matrix of s^k in H as p-adic numbers to absolute precision prec.
PadicMatrix coefficient(const LaurentMatrix& H, int k, long p, int prec) {
    PadicMatrix out(H.rows(), H.cols());
    for (std::size_t i = 0; i < H.rows(); ++i)
        for (std::size_t j = 0; j < H.cols(); ++j) {
            const BigRational c = H(i, j).is_zero() ? BigRational(0) : H(i, j).coeff(k);
            out(i, j) = c == 0 ? PadicScalar::zero(p, kInfiniteValuation) : PadicScalar::from_rational(p, c, prec);
        }
    return out;
}

void add_product(PadicMatrix& acc, const PadicMatrix& A, const PadicMatrix& B) {
    const std::size_t r = A.rows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            const PadicScalar& a = A(i, k);
            if (a.is_zero() && a.is_exact()) continue;
            for (std::size_t j = 0; j < r; ++j) {
                const PadicScalar& b = B(k, j);
                if (b.is_zero() && b.is_exact()) continue;
                acc(i, j) += a * b;
            }
        }
}

PadicMatrix zero_matrix(std::size_t r, long p) {
    PadicMatrix z(r, r);
    for (auto& x : z.entries()) x = PadicScalar::zero(p, kInfiniteValuation);
    return z;
}

}  // namespace

int gauge_delta(const NormalizedConnection& norm, long p) {
    return -std::min({0, padic_valuation(norm.H, p), padic_valuation(norm.Hinv, p)});
}

int pole_order_bound(const NormalizedConnection& norm, long p) {
    const Span h = exponent_span(norm.H), hi = exponent_span(norm.Hinv);
    const int s_pole = std::max(0, -(hi.lo + static_cast<int>(p) * h.lo));
    return (s_pole + norm.e - 1) / norm.e;
}

LimitingFrobenius specialize_limit(const GlobalFrobenius& G, const NormalizedConnection& norm) {
    const long p = G.p;
    const int e = norm.e;
    const std::size_t r = G.dim();
    const int delta = gauge_delta(norm, p);
    const Span h = exponent_span(norm.H), hi = exponent_span(norm.Hinv);
    const int prec = G.N_ach + 2 * delta + 4;

    // s-exponents: alpha (from H) + e j (from F, j >= -b) + p beta (from Hinv(s^p)).
    const int jmax = (-h.lo - static_cast<int>(p) * hi.lo) / e;
    if (jmax + G.b < 0) throw NegativeCoefficientNonzero("specialize_limit: empty coefficient window");
    const auto F = G.laurent_at_zero(jmax + G.b + 1);

    // L_n = sum_{alpha + e j = n} H_alpha F_j for n <= -p * hi.lo.
    std::map<int, PadicMatrix> Lm;
    for (int a = h.lo; a <= h.hi; ++a) {
        const PadicMatrix Ha = coefficient(norm.H, a, p, prec);
        for (int j = -G.b; j <= jmax; ++j) {
            const int n = a + e * j;
            if (n > -static_cast<int>(p) * hi.lo) continue;
            auto it = Lm.try_emplace(n, zero_matrix(r, p)).first;
            add_product(it->second, Ha, F[j + G.b]);
        }
    }
    std::map<int, PadicMatrix> out;
    for (int bta = hi.lo; bta <= hi.hi; ++bta) {
        const PadicMatrix Hb = coefficient(norm.Hinv, bta, p, prec);
        for (const auto& [n, Ln] : Lm) {
            const int k = n + static_cast<int>(p) * bta;
            if (k > 0) continue;
            auto it = out.try_emplace(k, zero_matrix(r, p)).first;
            add_product(it->second, Ln, Hb);
        }
    }

    LimitingFrobenius res;
    res.e = e;
    res.delta = delta;
    res.Fr0 = out.count(0) ? out.at(0) : zero_matrix(r, p);
    int ach = G.N_ach;
    for (const auto& x : res.Fr0.entries()) ach = std::min(ach, x.absolute_precision());
    res.N_ach = ach;
    for (auto& x : res.Fr0.entries()) x = x.reduce(ach);
    for (const auto& [k, Mk] : out) {
        if (k >= 0) continue;
        for (const auto& x : Mk.entries()) {
            const PadicScalar y = x.reduce(ach);
            if (!y.is_zero())
                throw NegativeCoefficientNonzero("coefficient of s^" + std::to_string(k) + " has valuation " +
                                                 std::to_string(y.valuation()) + " below the precision " +
                                                 std::to_string(ach));
        }
    }
    return res;
}

}  // namespace limifrob
