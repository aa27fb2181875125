#include "limifrob/oracle/counting.hpp"

#include <algorithm>
#include <thread>

#include "limifrob/errors.hpp"
#include "limifrob/oracle/finite_field.hpp"

namespace limifrob {

namespace {

long reduce_mod_p(const BigRational& c, long p) {
    const BigInt P(p);
    const BigInt den = mod_floor(BigInt(c.get_den()), P);
    if (den == 0) throw InvalidFamily("coefficient denominator divisible by p");
    return mod_floor(BigInt(c.get_num()) * inverse_mod(den, P), P).get_si();
}

struct Term {
    std::uint32_t clog;  // log of the coefficient
    Exponent e;
};

// Counts points with x_0 = ... = x_{lead-1} = 0, x_lead = 1, restricted to
// assignments whose coordinate lead+1 is congruent to `slice` mod `stride`.
std::uint64_t count_slice(const FiniteField& F, const std::vector<Term>& terms, int m, int lead,
                          std::uint32_t slice, std::uint32_t stride) {
    const std::uint32_t q = F.order();
    const long p = F.characteristic();
    const int k = F.degree();
    const int free = m - 1 - lead;

    std::vector<const Term*> live;
    for (const auto& t : terms) {
        bool ok = true;
        for (int j = 0; j < lead; ++j)
            if (t.e[j] > 0) ok = false;
        if (ok) live.push_back(&t);
    }
    if (live.empty()) {
        // P vanishes identically on this stratum.
        if (free == 0) return slice == 0 ? 1 : 0;
        std::uint64_t n = 0;
        for (std::uint32_t v = slice; v < q; v += stride) ++n;
        for (int j = 1; j < free; ++j) n *= q;
        return n;
    }

    std::vector<std::uint32_t> digits(static_cast<std::size_t>(q) * k);
    for (std::uint32_t x = 0; x < q; ++x) {
        std::uint32_t y = x;
        for (int t = 0; t < k; ++t) {
            digits[static_cast<std::size_t>(x) * k + t] = y % p;
            y /= p;
        }
    }

    std::vector<std::uint32_t> x(free, 0);
    if (free > 0) x[0] = slice;
    else if (slice != 0) return 0;
    std::vector<long> acc(k);
    std::uint64_t count = 0;
    while (true) {
        std::fill(acc.begin(), acc.end(), 0);
        for (const Term* t : live) {
            std::uint64_t L = t->clog;
            bool zero = false;
            for (int j = 0; j < free; ++j) {
                const int ej = t->e[lead + 1 + j];
                if (ej == 0) continue;
                if (x[j] == 0) {
                    zero = true;
                    break;
                }
                L += static_cast<std::uint64_t>(ej) * F.log(x[j]);
            }
            if (zero) continue;
            const std::uint32_t v = F.exp(L);
            for (int d = 0; d < k; ++d) acc[d] += digits[static_cast<std::size_t>(v) * k + d];
        }
        bool vanish = true;
        for (int d = 0; d < k; ++d)
            if (acc[d] % p != 0) vanish = false;
        if (vanish) ++count;

        int j = free - 1;
        for (; j >= 0; --j) {
            const std::uint32_t step = j == 0 ? stride : 1;
            x[j] += step;
            if (x[j] < q) break;
            x[j] = j == 0 ? slice : 0;
        }
        if (j < 0) break;
    }
    return count;
}

void check_budget(long p, int n, int k) {
    const BigInt work = ipow(p, static_cast<unsigned long>(k) * (n + 1));
    if (work > BigInt(1000000000)) throw BudgetExceeded("point count over F_" + std::to_string(p) + "^" +
                                                        std::to_string(k) + " exceeds the enumeration budget");
}

}  // namespace

BigInt projective_space_size(long q, int m) {
    BigInt s = 0;
    for (int i = 0; i < m; ++i) s += ipow(q, static_cast<unsigned long>(i));
    return s;
}

BigInt count_points(const MPoly& P, int n, long p, int k, int threads) {
    const int m = n + 2;
    if (P.nvars() != m && !P.is_zero()) throw DimensionMismatch("count_points: expected n + 2 variables");
    if (!P.is_homogeneous()) throw HomogeneityError("count_points: polynomial is not homogeneous");
    check_budget(p, n, k);
    const FiniteField F(p, k);

    std::vector<Term> terms;
    for (const auto& [e, c] : P.terms()) {
        const long cm = reduce_mod_p(c, p);
        if (cm != 0) terms.push_back({F.log(F.from_int(cm)), e});
    }
    threads = std::max(1, threads);
    BigInt total = 0;
    for (int lead = 0; lead < m; ++lead) {
        const int free = m - 1 - lead;
        const int parts = free == 0 ? 1 : threads;
        std::vector<std::uint64_t> partial(parts, 0);
        auto work = [&](int s) {
            partial[s] = count_slice(F, terms, m, lead, static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(parts));
        };
        if (parts == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (int s = 0; s < parts; ++s) pool.emplace_back(work, s);
            for (auto& th : pool) th.join();
        }
        for (auto c : partial) total += BigInt(static_cast<unsigned long>(c));
    }
    return total;
}

CountVector count_points_upto(const MPoly& P, int n, long p, int kmax, int threads) {
    CountVector v;
    for (int k = 1; k <= kmax; ++k) v.push_back(count_points(P, n, p, k, threads));
    return v;
}

BigInt count_hyperelliptic(const std::vector<long>& f, long p, int k) {
    if (p == 2) throw InvalidFamily("count_hyperelliptic: characteristic 2");
    std::vector<long> g = f;
    while (!g.empty() && mod_floor(BigInt(g.back()), BigInt(p)) == 0) g.pop_back();
    if (g.empty()) throw InvalidFamily("count_hyperelliptic: f vanishes mod p");
    if (ipow(p, k) > BigInt(1 << 26)) throw BudgetExceeded("count_hyperelliptic: field too large");
    const FiniteField F(p, k);
    std::vector<FiniteField::Elt> c;
    for (long a : g) c.push_back(F.from_int(a));
    long total = 0;
    for (std::uint32_t x = 0; x < F.order(); ++x) {
        FiniteField::Elt acc = 0;
        for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
        total += 1 + F.legendre(acc);
    }
    const int deg = static_cast<int>(g.size()) - 1;
    total += deg % 2 == 1 ? 1 : 1 + F.legendre(c.back());
    return BigInt(total);
}

CountVector count_hyperelliptic_upto(const std::vector<long>& f, long p, int kmax) {
    CountVector v;
    for (int k = 1; k <= kmax; ++k) v.push_back(count_hyperelliptic(f, p, k));
    return v;
}

}  // namespace limifrob
