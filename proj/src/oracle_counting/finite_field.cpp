#include "limifrob/oracle/finite_field.hpp"

#include <stdexcept>

#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

using Poly = std::vector<long>;  // coefficients mod p, constant first

void trim(Poly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long inv_mod(long a, long p) {
    long r = 1, b = a % p, e = p - 2;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& m, long p) {
    trim(a);
    const int dm = static_cast<int>(m.size()) - 1;
    const long inv = inv_mod(m.back(), p);
    while (static_cast<int>(a.size()) - 1 >= dm) {
        const int s = static_cast<int>(a.size()) - 1 - dm;
        const long f = a.back() * inv % p;
        for (int i = 0; i <= dm; ++i) a[s + i] = ((a[s + i] - f * m[i]) % p + p) % p;
        trim(a);
    }
    return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, long p) {
    if (a.empty() || b.empty()) return {};
    Poly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    return poly_mod(std::move(c), m, p);
}

Poly powmod(Poly base, unsigned long e, const Poly& m, long p) {
    Poly r{1};
    base = poly_mod(base, m, p);
    while (e > 0) {
        if (e & 1) r = mulmod(r, base, m, p);
        base = mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly sub(Poly a, const Poly& b, long p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
    trim(a);
    return a;
}

unsigned long upow(unsigned long b, int e) {
    unsigned long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// Rabin's test.
bool irreducible(const Poly& f, long p) {
    const int k = static_cast<int>(f.size()) - 1;
    const Poly x{0, 1};
    if (!sub(powmod(x, upow(p, k), f, p), x, p).empty()) return false;
    for (int r = 2; r <= k; ++r) {
        if (k % r != 0) continue;
        bool prime = true;
        for (int s = 2; s * s <= r; ++s)
            if (r % s == 0) prime = false;
        if (!prime) continue;
        const Poly g = poly_gcd(f, sub(powmod(x, upow(p, k / r), f, p), x, p), p);
        if (g.size() > 1) return false;
    }
    return true;
}

}  // namespace

std::vector<long> smallest_irreducible(long p, int k) {
    if (k == 1) return {0, 1};
    const unsigned long limit = upow(p, k);
    for (unsigned long code = 0; code < limit; ++code) {
        Poly f(k + 1, 0);
        unsigned long c = code;
        for (int i = 0; i < k; ++i) {
            f[i] = static_cast<long>(c % p);
            c /= p;
        }
        f[k] = 1;
        if (f[0] != 0 && irreducible(f, p)) return f;
    }
    throw std::logic_error("smallest_irreducible: none found");
}

FiniteField::FiniteField(long p, int k) : p_(p), k_(k), q_(static_cast<std::uint32_t>(upow(p, k))) {
    if (upow(p, k) > (1u << 26)) throw BudgetExceeded("FiniteField: order too large for log tables");
    mod_ = smallest_irreducible(p, k);
    // Find a generator by trial: the element whose powers cover the group.
    log_.assign(q_, 0);
    exp_.assign(q_ - 1, 0);
    auto to_poly = [&](std::uint32_t e) {
        Poly a(k, 0);
        for (int i = 0; i < k; ++i) {
            a[i] = e % p;
            e /= p;
        }
        trim(a);
        return a;
    };
    auto to_elt = [&](const Poly& a) {
        std::uint32_t e = 0;
        for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) e = e * p + static_cast<std::uint32_t>(a[i]);
        return e;
    };
    for (std::uint32_t g = 2; g < q_ || q_ == 2; ++g) {
        const std::uint32_t gen = q_ == 2 ? 1 : g;
        std::vector<bool> seen(q_, false);
        Poly cur{1};
        const Poly gp = to_poly(gen);
        bool ok = true;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            const std::uint32_t e = to_elt(cur);
            if (seen[e]) {
                ok = false;
                break;
            }
            seen[e] = true;
            exp_[i] = e;
            log_[e] = i;
            cur = mulmod(cur, gp, mod_, p);
        }
        if (ok) return;
    }
    throw std::logic_error("FiniteField: no generator found");
}

FiniteField::Elt FiniteField::from_int(long a) const { return static_cast<Elt>(((a % p_) + p_) % p_); }

FiniteField::Elt FiniteField::add(Elt a, Elt b) const {
    if (k_ == 1) {
        const Elt s = a + b;
        return s >= q_ ? s - q_ : s;
    }
    Elt r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        const Elt da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        r += ((da + db) % p_) * scale;
        scale *= p_;
    }
    return r;
}

FiniteField::Elt FiniteField::neg(Elt a) const {
    Elt r = 0, scale = 1;
    for (int i = 0; i < k_; ++i) {
        const Elt d = a % p_;
        a /= p_;
        r += ((p_ - d) % p_) * scale;
        scale *= p_;
    }
    return r;
}

FiniteField::Elt FiniteField::pow(Elt a, unsigned long e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    return exp_[(log_[a] * (e % (q_ - 1))) % (q_ - 1)];
}

}  // namespace limifrob
