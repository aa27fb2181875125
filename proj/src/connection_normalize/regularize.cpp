#include <optional>
#include <random>

#include "limifrob/cn/normalize.hpp"
#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

using Vec = std::vector<LaurentSeries>;

enum class Outcome { Ok, Singular, ShortPrecision };

// Column operations over Q[[s]] that turn G into a lower triangular matrix of
// Laurent polynomials whose diagonal entries are powers of s. Columns of the
// result span the same Q[[s]]-lattice as the columns of G.
Outcome column_reduce(SeriesMatrix G, LaurentMatrix& V) {
    const std::size_t r = G.rows();
    std::vector<int> k(r);
    for (std::size_t i = 0; i < r; ++i) {
        std::size_t best = r;
        for (std::size_t j = i; j < r; ++j)
            if (!G(i, j).is_zero() && (best == r || G(i, j).val() < G(i, best).val())) best = j;
        if (best == r) return Outcome::Singular;
        if (best != i)
            for (std::size_t m = 0; m < r; ++m) std::swap(G(m, i), G(m, best));
        k[i] = G(i, i).val();
        const LaurentSeries uinv = G(i, i).shift(-k[i]).inverse();
        for (std::size_t m = i + 1; m < r; ++m) G(m, i) = G(m, i) * uinv;
        G(i, i) = LaurentSeries::from(LaurentPoly::monomial(1, k[i]), LaurentSeries::kExact);
        for (std::size_t j = i + 1; j < r; ++j) {
            if (G(i, j).is_zero()) {
                G(i, j) = LaurentSeries(0L);
                continue;
            }
            const LaurentSeries c = G(i, j).shift(-k[i]);
            for (std::size_t m = i + 1; m < r; ++m) G(m, j) = G(m, j) - c * G(m, i);
            G(i, j) = LaurentSeries(0L);
        }
    }
    V = LaurentMatrix(r, r);
    for (std::size_t i = 0; i < r; ++i) V(i, i) = LaurentPoly::monomial(1, k[i]);
    for (std::size_t i = r; i-- > 0;) {
        for (std::size_t m = i + 1; m < r; ++m) {
            const LaurentSeries x = G(m, i);
            if (x.prec() < k[m]) return Outcome::ShortPrecision;
            const LaurentPoly h = x.head(k[m]);
            const LaurentSeries c = (x - LaurentSeries::from(h, LaurentSeries::kExact)).shift(-k[m]);
            if (!c.is_zero())
                for (std::size_t q = m + 1; q < r; ++q)
                    G(q, i) = G(q, i) - c * LaurentSeries::from(V(q, m), LaurentSeries::kExact);
            V(m, i) = h;
        }
    }
    return Outcome::Ok;
}

// Inverse of a lower triangular Laurent matrix with monomial diagonal.
LaurentMatrix lower_inverse(const LaurentMatrix& V) {
    const std::size_t r = V.rows();
    LaurentMatrix X(r, r);
    for (std::size_t j = 0; j < r; ++j) {
        X(j, j) = V(j, j).monomial_inverse();
        for (std::size_t i = j + 1; i < r; ++i) {
            LaurentPoly acc;
            for (std::size_t m = j; m < i; ++m)
                if (!V(i, m).is_zero() && !X(m, j).is_zero()) acc += V(i, m) * X(m, j);
            X(i, j) = -(V(i, i).monomial_inverse() * acc);
        }
    }
    return X;
}

SeriesMatrix cyclic_matrix(const SeriesMatrix& Ns, const std::vector<LaurentPoly>& omega) {
    const std::size_t r = Ns.rows();
    SeriesMatrix G(r, r);
    Vec c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = LaurentSeries::from(omega[i], LaurentSeries::kExact);
    for (std::size_t k = 0; k < r; ++k) {
        G.set_column(k, c);
        if (k + 1 == r) break;
        Vec next = Ns.apply(c);
        for (std::size_t i = 0; i < r; ++i) next[i] = (next[i] + c[i].derivative()).shift(1);
        c = std::move(next);
    }
    return G;
}

std::vector<std::vector<LaurentPoly>> candidates(std::size_t r) {
    std::vector<std::vector<LaurentPoly>> out;
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<LaurentPoly> v(r);
        v[j] = LaurentPoly(1);
        out.push_back(std::move(v));
    }
    std::mt19937_64 rng(0x5eed);
    for (int trial = 0; trial < 8; ++trial) {
        std::vector<LaurentPoly> v(r);
        for (auto& x : v) {
            const long c = std::uniform_int_distribution<long>(-7, 7)(rng);
            const int m = std::uniform_int_distribution<int>(0, trial / 2)(rng);
            x = LaurentPoly::monomial(c, m);
        }
        out.push_back(std::move(v));
    }
    return out;
}

}  // namespace

GaugeResult regularize(const LaurentConnection& N) {
    const std::size_t r = N.dim();
    if (N.pole_order() <= 1) return {laurent_identity(r), laurent_identity(r), N};
    const int a = N.pole_order();
    const int base = static_cast<int>(r) * (a + 1) + 8;
    bool reduced_somewhere = false;
    for (const auto& omega : candidates(r)) {
        for (int prec = base, round = 0; round < 3; prec *= 2, ++round) {
            LaurentMatrix V;
            const Outcome o = column_reduce(cyclic_matrix(N.expand(prec), omega), V);
            if (o == Outcome::Singular && round > 0) break;
            if (o != Outcome::Ok) continue;
            reduced_somewhere = true;
            const LaurentMatrix H = lower_inverse(V);
            LaurentConnection out = apply_gauge(N, H, V);
            if (out.pole_order() <= 1) return {H, V, std::move(out)};
        }
    }
    if (reduced_somewhere) throw NotRegular("regularize: pole order could not be lowered to one");
    throw NoCyclicVectorFound("regularize: no candidate vector is cyclic");
}

GaugeResult regularize(const Matrix<RatFunc>& N) { return regularize(LaurentConnection::from_ratfunc(N)); }

LaurentMatrix laurent_factorize(const Matrix<RatFunc>& G) {
    if (!G.is_square()) throw NonSquare("laurent_factorize: matrix not square");
    if (determinant(G).is_zero()) throw Singular("laurent_factorize: singular matrix");
    const std::size_t r = G.rows();
    const Matrix<RatFunc> Gt = G.transpose();
    int spread = 0;
    for (const auto& f : G.entries())
        if (!f.is_zero()) spread = std::max(spread, std::abs(f.valuation_at_zero()) + f.num().degree() + f.den().degree());
    for (int prec = static_cast<int>(r) * (spread + 1) + 8, round = 0; round < 6; prec *= 2, ++round) {
        const SeriesMatrix S =
            Gt.map([&](const RatFunc& f) { return LaurentSeries::quotient(LaurentPoly(f.num()), f.den(), prec); });
        LaurentMatrix V;
        if (column_reduce(S, V) != Outcome::Ok) continue;
        const LaurentMatrix H = V.transpose();
        const Matrix<RatFunc> L = G * to_ratfunc(lower_inverse(V).transpose());
        bool holomorphic = true;
        QMatrix L0(r, r);
        for (std::size_t i = 0; i < r && holomorphic; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                const RatFunc& f = L(i, j);
                if (f.is_zero()) continue;
                if (f.valuation_at_zero() < 0) {
                    holomorphic = false;
                    break;
                }
                L0(i, j) = f.eval(0);
            }
        if (holomorphic && rank(L0) == r) return H;
    }
    throw PrecisionExhausted("laurent_factorize: expansion precision schedule exhausted");
}

}  // namespace limifrob
