#include "limifrob/exact/modular.hpp"

#include <mutex>
#include <stdexcept>

namespace limifrob {

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a == 0) throw std::domain_error("PrimeField::inv of zero");
    return pow(a, l_ - 2);
}

std::optional<std::uint64_t> PrimeField::from_rational(const BigRational& q) const {
    BigInt L(static_cast<unsigned long>(l_));
    BigInt d = mod_floor(BigInt(q.get_den()), L);
    if (d == 0) return std::nullopt;
    BigInt n = mod_floor(BigInt(q.get_num()), L);
    return mul(n.get_ui(), inv(d.get_ui()));
}

std::uint64_t large_prime(std::size_t i) {
    static std::mutex mu;
    static std::vector<std::uint64_t> cache;
    std::lock_guard<std::mutex> lock(mu);
    BigInt c = cache.empty() ? BigInt(std::uint64_t(1) << 62) : BigInt(static_cast<unsigned long>(cache.back()));
    while (cache.size() <= i) {
        mpz_sub_ui(c.get_mpz_t(), c.get_mpz_t(), 1);
        while (mpz_probab_prime_p(c.get_mpz_t(), 40) == 0) mpz_sub_ui(c.get_mpz_t(), c.get_mpz_t(), 1);
        cache.push_back(c.get_ui());
    }
    return cache[i];
}

void trim(ModPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

ModPoly mod_mul(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
    if (a.empty() || b.empty()) return {};
    ModPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = F.add(c[i + j], F.mul(a[i], b[j]));
    }
    trim(c);
    return c;
}

std::pair<ModPoly, ModPoly> mod_divmod(const PrimeField& F, const ModPoly& a, const ModPoly& b) {
    if (b.empty()) throw std::domain_error("mod_divmod by zero");
    if (a.size() < b.size()) return {{}, a};
    ModPoly r = a;
    ModPoly q(a.size() - b.size() + 1, 0);
    const std::uint64_t il = F.inv(b.back());
    const std::size_t db = b.size() - 1;
    for (std::size_t i = a.size(); i-- > db;) {
        if (!r[i]) continue;
        std::uint64_t f = F.mul(r[i], il);
        q[i - db] = f;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = F.sub(r[i - db + j], F.mul(f, b[j]));
    }
    r.resize(db);
    trim(r);
    trim(q);
    return {q, r};
}

std::uint64_t mod_eval(const PrimeField& F, const ModPoly& f, std::uint64_t x) {
    std::uint64_t acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = F.add(F.mul(acc, x), f[i]);
    return acc;
}

ModPoly mod_taylor_shift(const PrimeField& F, const ModPoly& f, std::uint64_t a) {
    ModPoly v = f;
    const std::size_t n = v.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = n - 1; j-- > i;) v[j] = F.add(v[j], F.mul(a, v[j + 1]));
    trim(v);
    return v;
}

std::optional<std::pair<ModPoly, ModPoly>> pade(const PrimeField& F, const ModPoly& s, int dn, int dd) {
    const int K = dn + dd + 1;
    ModPoly r0(K + 1, 0);
    r0[K] = 1;
    ModPoly r1(s.begin(), s.begin() + std::min<std::size_t>(s.size(), K));
    trim(r1);
    ModPoly t0, t1{1};
    while (!r1.empty() && static_cast<int>(r1.size()) - 1 > dn) {
        auto [q, r] = mod_divmod(F, r0, r1);
        ModPoly qt = mod_mul(F, q, t1);
        ModPoly t2 = t0;
        if (t2.size() < qt.size()) t2.resize(qt.size(), 0);
        for (std::size_t i = 0; i < qt.size(); ++i) t2[i] = F.sub(t2[i], qt[i]);
        trim(t2);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (t1.empty() || static_cast<int>(t1.size()) - 1 > dd || t1[0] == 0) return std::nullopt;
    const std::uint64_t c = F.inv(t1[0]);
    for (auto& x : r1) x = F.mul(x, c);
    for (auto& x : t1) x = F.mul(x, c);
    return std::make_pair(r1, t1);
}

void crt_accumulate(BigInt& a, BigInt& m, std::uint64_t b, std::uint64_t l) {
    BigInt L(static_cast<unsigned long>(l));
    if (m == 0) {
        a = L == 0 ? BigInt(0) : BigInt(static_cast<unsigned long>(b));
        m = L;
        return;
    }
    // a + m * ((b - a) / m mod l)
    BigInt diff = mod_floor(BigInt(static_cast<unsigned long>(b)) - a, L);
    BigInt k = mod_floor(diff * inverse_mod(mod_floor(m, L), L), L);
    a += m * k;
    m *= L;
}

std::optional<BigRational> rational_reconstruct(const BigInt& a, const BigInt& m) {
    BigInt bound;
    mpz_sqrt(bound.get_mpz_t(), BigInt(m / 2).get_mpz_t());
    BigInt r0 = m, r1 = mod_floor(a, m);
    BigInt t0 = 0, t1 = 1;
    while (r1 > bound) {
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        BigInt r2 = r0 - q * r1;
        BigInt t2 = t0 - q * t1;
        r0 = r1;
        r1 = r2;
        t0 = t1;
        t1 = t2;
    }
    if (t1 == 0 || abs(t1) > bound || gcd(r1, t1) != 1) return std::nullopt;
    BigRational q(r1, t1);
    q.canonicalize();
    return q;
}

}  // namespace limifrob
