#include "limifrob/padic/special.hpp"

#include <stdexcept>
#include <vector>

#include "limifrob/errors.hpp"

namespace limifrob {

PadicScalar teichmuller_lift(long a, long p, int N) {
    if (a % p == 0) throw ZeroInput("teichmuller_lift: residue divisible by p");
    const BigInt m = ipow(p, N);
    BigInt x = mod_floor(BigInt(a), m);
    // x -> x^p converges to the lift, gaining one digit per step.
    for (int i = 0; i < N; ++i) mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), p, m.get_mpz_t());
    return PadicScalar::from_integer(p, x, N);
}

namespace {

using Poly = std::vector<BigInt>;

Poly poly_mul_trunc(const Poly& a, const Poly& b, std::size_t len, const BigInt& m) {
    Poly c(std::min(len, a.size() + b.size() - 1), 0);
    for (std::size_t i = 0; i < a.size() && i < c.size(); ++i)
        for (std::size_t j = 0; j < b.size() && i + j < c.size(); ++j) c[i + j] += a[i] * b[j];
    for (auto& x : c) x = mod_floor(x, m);
    return c;
}

Poly taylor_shift(Poly f, const BigInt& a, const BigInt& m) {
    const std::size_t n = f.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) f[j] = mod_floor(f[j] + a * f[j + 1], m);
    return f;
}

BigInt eval(const Poly& f, const BigInt& y, const BigInt& m) {
    BigInt acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = mod_floor(acc * y + f[i], m);
    return acc;
}

}  // namespace

PadicScalar padic_gamma(const BigInt& x_in, long p, int N) {
    if (p % 2 == 0) throw std::invalid_argument("padic_gamma: p must be odd");
    const BigInt m = ipow(p, N);
    const BigInt x = mod_floor(x_in, m);

    std::vector<long> digit;
    for (BigInt y = x; y != 0; y /= p) digit.push_back(mpz_fdiv_ui(y.get_mpz_t(), p));
    const int K = static_cast<int>(digit.size());

    // f[k](y) = prod_{0<i<p^k, p∤i} (y+i), kept only to the degree that still
    // matters when y is a multiple of p^k (terms y^j with j*k >= N vanish).
    auto keep = [&](int k) { return static_cast<std::size_t>((N + k - 1) / k); };
    std::vector<Poly> f(std::max(K, 2));
    if (K >= 2) {
        Poly f1{1};
        for (long i = 1; i < p; ++i) f1 = poly_mul_trunc(f1, Poly{BigInt(i), 1}, keep(1), m);
        f[1] = f1;
        for (int k = 1; k + 1 < K; ++k) {
            const BigInt pk = ipow(p, k);
            Poly g{1};
            for (long c = 0; c < p; ++c) g = poly_mul_trunc(g, taylor_shift(f[k], pk * c, m), keep(k + 1), m);
            f[k + 1] = g;
        }
    }

    BigInt prod = 1, base = 0;
    for (int k = K - 1; k >= 1; --k) {
        const BigInt pk = ipow(p, k);
        for (long c = 0; c < digit[k]; ++c) prod = mod_floor(prod * eval(f[k], base + pk * c, m), m);
        base += pk * digit[k];
    }
    if (K >= 1)
        for (long i = 1; i < digit[0]; ++i) prod = mod_floor(prod * (base + i), m);
    if (mpz_odd_p(x.get_mpz_t())) prod = mod_floor(-prod, m);
    return PadicScalar::from_integer(p, prod, N);
}

PadicScalar padic_gamma(const BigRational& x, long p, int N) {
    return padic_gamma(rational_mod(x, ipow(p, N)), p, N);
}

}  // namespace limifrob
