#include "limifrob/fd/global.hpp"

#include <algorithm>
#include <cmath>

#include "limifrob/errors.hpp"
#include "zp_poly.hpp"

namespace limifrob {

using fd::ZVec;

namespace {

// N = p^(-a0) A / Q with Q primitive in Z[t] and A with p-integral
// coefficients.
struct IntegralForm {
    ZPoly Q;
    int a = 0;  // t-adic valuation of Q
    ZPoly Qt;   // Q / t^a
    int a0 = 0;
    Matrix<QPoly> A;
};

IntegralForm integral_form(const Matrix<RatFunc>& N, long p) {
    IntegralForm f;
    QPoly l = QPoly::constant(1);
    for (std::size_t i = 0; i < N.rows(); ++i)
        for (std::size_t j = 0; j < N.cols(); ++j) {
            const QPoly& d = N(i, j).den();
            l = (l * d).exact_div(gcd_q(l, d));
        }
    f.Q = primitive_part(l);
    const QPoly Qq = to_qpoly(f.Q);
    f.A = Matrix<QPoly>(N.rows(), N.cols());
    int minv = 0;
    for (std::size_t i = 0; i < N.rows(); ++i)
        for (std::size_t j = 0; j < N.cols(); ++j) {
            if (N(i, j).is_zero()) continue;
            f.A(i, j) = (N(i, j).num() * Qq).exact_div(N(i, j).den());
            for (const auto& c : f.A(i, j).coeffs())
                if (c != 0) minv = std::min(minv, ord_p(BigInt(c.get_num()), p) - ord_p(BigInt(c.get_den()), p));
        }
    f.a0 = -minv;
    const BigRational scale(ipow(p, f.a0));
    for (std::size_t i = 0; i < N.rows(); ++i)
        for (std::size_t j = 0; j < N.cols(); ++j) f.A(i, j) = f.A(i, j) * scale;
    f.a = std::max(0, f.Q.low_degree());
    f.Qt = f.Q.shift(-f.a);
    return f;
}

BigInt to_mod(const BigRational& c, const BigInt& mod) {
    const BigInt den(c.get_den());
    return mod_floor(BigInt(c.get_num()) * inverse_mod(mod_floor(den, mod), mod), mod);
}

ZVec to_mod(const QPoly& f, const BigInt& mod) {
    ZVec v;
    for (const auto& c : f.coeffs()) v.push_back(to_mod(c, mod));
    return v;
}

ZVec to_mod(const ZPoly& f, const BigInt& mod) {
    ZVec v;
    for (const auto& c : f.coeffs()) v.push_back(mod_floor(c, mod));
    return v;
}

int ceil_log(long p, long x) {
    int k = 0;
    BigInt q = 1;
    while (q < x) {
        q *= p;
        ++k;
    }
    return k;
}

// Matrix-valued series, coefficient-major: terms[i] is the r x r coefficient
// of u^i, row-major.
using Coeffs = std::vector<std::vector<BigInt>>;

struct SparseEntry {
    std::size_t row, col;
    BigInt value;
};

// Fixed-point solution of Q Y' = -p^(-a0) A Y (left = true) or
// Q Y' = p^(-a0) Y A (left = false), Y(0) = I, around u = 0, with
// coefficients scaled by p^g and reduced mod p^L. Throws PrecisionExhausted
// when p^g Y_i stops being integral.
Coeffs solve_fixed_point(const std::vector<std::vector<SparseEntry>>& Aj, const ZVec& q, std::size_t r, int count,
                         long p, int a0, int g, int L, bool left) {
    const BigInt modL = ipow(p, L);
    Coeffs Y(count, std::vector<BigInt>(r * r, 0));
    for (std::size_t i = 0; i < r; ++i) Y[0][i * r + i] = ipow(p, g);
    const BigInt pa0 = ipow(p, a0);
    std::vector<BigInt> X(r * r);
    BigInt s, t;
    for (int i = 0; i + 1 < count; ++i) {
        for (auto& x : X) x = 0;
        for (std::size_t j = 0; j < Aj.size() && static_cast<int>(j) <= i; ++j) {
            const auto& Yp = Y[i - j];
            for (const auto& e : Aj[j]) {
                if (left) {
                    // X[row, :] -= a * Y[col, :]
                    BigInt* xr = &X[e.row * r];
                    const BigInt* yr = &Yp[e.col * r];
                    for (std::size_t c = 0; c < r; ++c) mpz_submul(xr[c].get_mpz_t(), e.value.get_mpz_t(), yr[c].get_mpz_t());
                } else {
                    // X[:, col] += Y[:, row] * a
                    for (std::size_t c = 0; c < r; ++c)
                        mpz_addmul(X[c * r + e.col].get_mpz_t(), Yp[c * r + e.row].get_mpz_t(), e.value.get_mpz_t());
                }
            }
        }
        for (std::size_t j = 1; j < q.size() && static_cast<int>(j) <= i + 1; ++j) {
            if (q[j] == 0) continue;
            s = pa0 * q[j] * (i + 1 - static_cast<long>(j));
            const auto& Yp = Y[i + 1 - j];
            for (std::size_t c = 0; c < r * r; ++c) mpz_submul(X[c].get_mpz_t(), s.get_mpz_t(), Yp[c].get_mpz_t());
        }
        const int oi = ord_p(BigInt(i + 1), p);
        const int v = a0 + oi;
        const BigInt pv = ipow(p, v);
        const BigInt unit = q[0] * ((i + 1) / ipow(p, oi));
        const BigInt inv = inverse_mod(mod_floor(unit, modL), modL);
        const BigInt big = modL * pv;
        for (std::size_t c = 0; c < r * r; ++c) {
            mpz_fdiv_r(X[c].get_mpz_t(), X[c].get_mpz_t(), big.get_mpz_t());
            if (!mpz_divisible_p(X[c].get_mpz_t(), pv.get_mpz_t()))
                throw PrecisionExhausted("fixed-point series: guard digits exhausted at term " + std::to_string(i + 1));
            mpz_divexact(t.get_mpz_t(), X[c].get_mpz_t(), pv.get_mpz_t());
            t *= inv;
            mpz_fdiv_r(Y[i + 1][c].get_mpz_t(), t.get_mpz_t(), modL.get_mpz_t());
        }
    }
    return Y;
}

// Entry-major series: out[i*r + j] is the series of entry (i, j).
std::vector<ZVec> entry_major(const Coeffs& Y, std::size_t r) {
    std::vector<ZVec> out(r * r, ZVec(Y.size()));
    for (std::size_t k = 0; k < Y.size(); ++k)
        for (std::size_t c = 0; c < r * r; ++c) out[c][k] = Y[k][c];
    return out;
}

// Matrix product of entry-major series truncated to n terms.
std::vector<ZVec> series_matmul(const std::vector<ZVec>& A, const std::vector<ZVec>& B, std::size_t r, std::size_t n,
                                const BigInt& mod) {
    std::size_t la = 1, lb = 1;
    for (const auto& x : A) la = std::max(la, x.size());
    for (const auto& x : B) lb = std::max(lb, x.size());
    if (n == 0) n = la + lb - 1;
    const fd::Kronecker K(fd::slot_bits_for(fd::bits(mod), fd::bits(mod), r * std::min(la, lb)));
    std::vector<BigInt> PA(r * r);
    for (std::size_t c = 0; c < r * r; ++c) PA[c] = K.pack(A[c]);
    std::vector<ZVec> out(r * r);
    for (std::size_t j = 0; j < r; ++j) {
        std::vector<BigInt> PB(r);
        for (std::size_t k = 0; k < r; ++k) PB[k] = K.pack(B[k * r + j]);
        for (std::size_t i = 0; i < r; ++i) {
            BigInt z = 0;
            for (std::size_t k = 0; k < r; ++k)
                if (PA[i * r + k] != 0 && PB[k] != 0) z += PA[i * r + k] * PB[k];
            out[i * r + j] = K.unpack(z, n, mod);
        }
    }
    return out;
}

struct LocalData {
    IntegralForm form;
    ZVec q;                                   // Q(1 + u) mod p^L
    std::vector<std::vector<SparseEntry>> Aj;  // A(1 + u) coefficients mod p^L
};

LocalData local_data(const Matrix<RatFunc>& N, long p, int L) {
    LocalData d;
    d.form = integral_form(N, p);
    const BigInt modL = ipow(p, L);
    if (mod_floor(d.form.Q.eval(BigInt(1)), BigInt(p)) == 0)
        throw InvalidFamily("the fiber t = 1 is singular mod p");
    if (mod_floor(d.form.Qt.coeff(0), BigInt(p)) == 0)
        throw InvalidFamily("the singular locus meets t = 0 mod p away from t = 0");
    d.q = fd::taylor_shift(to_mod(d.form.Q, modL), 1, modL);
    // q must keep its true unit constant term; reduce() left it in [0, p^L).
    const std::size_t r = N.rows();
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            if (d.form.A(i, j).is_zero()) continue;
            const ZVec a = fd::taylor_shift(to_mod(d.form.A(i, j), modL), 1, modL);
            if (d.Aj.size() < a.size()) d.Aj.resize(a.size());
            for (std::size_t k = 0; k < a.size(); ++k)
                if (a[k] != 0) d.Aj[k].push_back({i, j, a[k]});
        }
    return d;
}

}  // namespace

PrecisionPlan precision_plan(int N_target, int delta, int e, long p, int r, int deg_delta) {
    if (N_target < 1) throw std::invalid_argument("precision_plan: N_target must be positive");
    PrecisionPlan plan;
    plan.N_target = N_target;
    plan.delta = delta;
    const int goal = N_target + 2 * delta;
    // Pole orders of the approximation grow like p per digit; the series must
    // see the whole numerator.
    plan.M = (deg_delta + 2) * static_cast<int>(p) * (goal + 2) + 64;
    plan.N_work = goal + 2 * ceil_log(p, plan.M) + 2 + ceil_log(p, r);
    plan.b = static_cast<int>(p) * (1 + 2 * delta) / std::max(1, e) + 2;
    return plan;
}

std::optional<PrecisionPlan> escalate(const PrecisionPlan& plan) {
    if (plan.round + 1 >= plan.max_rounds) return std::nullopt;
    PrecisionPlan next = plan;
    ++next.round;
    const int goal = plan.N_target + 2 * plan.delta;
    next.N_work = goal + 2 * (plan.N_work - goal);
    next.M = 2 * plan.M;
    next.b = 2 * plan.b;
    return next;
}

GlobalFrobenius global_frobenius(const ConnectionData& conn, const PadicMatrix& F1, const PrecisionPlan& plan) {
    const std::size_t r = conn.N.rows();
    if (F1.rows() != r || F1.cols() != r) throw DimensionMismatch("global_frobenius: F1 size");
    long p = 0;
    for (std::size_t i = 0; i < r && p == 0; ++i) p = F1(i, i).prime();
    if (p == 0) throw std::invalid_argument("global_frobenius: F1 carries no prime");
    const int goal = plan.N_target + 2 * plan.delta;
    const int M = plan.M;

    // Guard digits grow until the fixed-point solves go through.
    int g = 1 + ceil_log(p, M);
    Coeffs C, B;
    LocalData loc;
    int L = 0;
    for (int attempt = 0;; ++attempt) {
        loc = local_data(conn.N, p, 1);
        L = plan.N_work + 2 * g + loc.form.a0;
        loc = local_data(conn.N, p, L);
        const int MB = std::min(M, M / static_cast<int>(p) + L + 2);
        try {
            C = solve_fixed_point(loc.Aj, loc.q, r, M, p, loc.form.a0, g, L, true);
            B = solve_fixed_point(loc.Aj, loc.q, r, MB, p, loc.form.a0, g, L, false);
            break;
        } catch (const PrecisionExhausted&) {
            if (attempt >= 5) throw;
            g *= 2;
        }
    }
    const BigInt modL = ipow(p, L);

    // G(u) = B((1 + u)^p - 1) = sum_j w^j S_j(u), w = (1+u)^p - 1 - u^p,
    // S_j = sum_k binom(k, j) B_k u^(p(k-j)); w^j = 0 mod p^j.
    const int KB = static_cast<int>(B.size());
    const int J = std::min(L, KB);
    std::vector<ZVec> binom(KB, ZVec(J, 0));
    for (int k = 0; k < KB; ++k) {
        binom[k][0] = 1;
        for (int j = 1; j < J && j <= k; ++j) binom[k][j] = mod_floor(binom[k - 1][j - 1] + (j <= k - 1 ? binom[k - 1][j] : BigInt(0)), modL);
    }
    ZVec w(p, 0);
    for (long k = 1; k < p; ++k) w[k] = binomial(p, k);
    std::vector<ZVec> G(r * r, ZVec(M, 0));
    for (int j = J - 1; j >= 0; --j) {
        for (auto& s : G) {
            // s <- s * w truncated to M
            for (int t = M - 1; t >= 0; --t) {
                BigInt acc = 0;
                for (long k = 1; k < p && k <= t; ++k) mpz_addmul(acc.get_mpz_t(), s[t - k].get_mpz_t(), w[k].get_mpz_t());
                s[t] = acc;
            }
        }
        for (int k = j; k < KB && static_cast<long>(k - j) * p < M; ++k) {
            const int deg = static_cast<int>((k - j) * p);
            for (std::size_t c = 0; c < r * r; ++c)
                if (B[k][c] != 0) mpz_addmul(G[c][deg].get_mpz_t(), binom[k][j].get_mpz_t(), B[k][c].get_mpz_t());
        }
        for (auto& s : G) fd::reduce(s, modL);
    }

    // H = F1 G, then F = C H (times p^(2g)).
    std::vector<ZVec> H(r * r, ZVec(M, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) {
            if (F1(i, k).is_zero() && F1(i, k).is_exact()) continue;
            const BigInt f = F1(i, k).residue(L);
            if (f == 0) continue;
            for (std::size_t j = 0; j < r; ++j)
                for (int t = 0; t < M; ++t) mpz_addmul(H[i * r + j][t].get_mpz_t(), f.get_mpz_t(), G[k * r + j][t].get_mpz_t());
        }
    for (auto& s : H) fd::reduce(s, modL);
    G.clear();
    std::vector<ZVec> F = series_matmul(entry_major(C, r), H, r, M, modL);
    C.clear();
    H.clear();

    // Find the least m with t^b Qt^m F a polynomial of degree < M - margin
    // modulo p^(2g + goal).
    const int c = 2 * g;
    const int P = c + goal;
    const BigInt modP = ipow(p, P);
    for (auto& s : F) fd::reduce(s, modP);
    const int margin = 24;
    const ZPoly& Qt = loc.form.Qt;
    const int dq = std::max(1, Qt.degree());
    const int m_cap = std::max(0, (M - margin - plan.b) / dq);
    const ZVec base = fd::taylor_shift(to_mod(Qt, modP), 1, modP);
    const ZVec tb = fd::pow(ZVec{1, 1}, static_cast<unsigned>(plan.b), modP, M);
    const fd::Kronecker K(fd::slot_bits_for(fd::bits(modP), fd::bits(modP), M));
    std::vector<BigInt> PF(r * r);
    for (std::size_t e = 0; e < r * r; ++e) PF[e] = K.pack(F[e]);
    auto multiplier = [&](int m) { return fd::mul(tb, fd::pow(base, static_cast<unsigned>(m), modP, M), modP, M); };
    auto fits = [&](int m) {
        const BigInt pq = K.pack(multiplier(m));
        for (std::size_t e = 0; e < r * r; ++e) {
            if (PF[e] == 0) continue;
            const ZVec y = K.unpack(PF[e] * pq, M, modP);
            for (int t = M - margin; t < M; ++t)
                if (y[t] != 0) return false;
        }
        return true;
    };
    if (!fits(m_cap))
        throw ReconstructionFailed("no denominator power up to " + std::to_string(m_cap) + " fits in " + std::to_string(M) +
                                   " series terms");
    int lo = -1, hi = m_cap;  // fits(hi), !fits(lo) (lo = -1 virtual)
    while (hi - lo > 1) {
        const int mid = lo + (hi - lo) / 2;
        if (fits(mid))
            hi = mid;
        else
            lo = mid;
    }
    const int m = hi;

    GlobalFrobenius out;
    out.p = p;
    out.c = c;
    out.m = m;
    out.b = plan.b;
    out.Delta = Qt;
    out.M = M;
    out.guard = g;
    out.X = Matrix<ZPoly>(r, r);
    const BigInt pq = K.pack(multiplier(m));
    int D = 0;
    for (std::size_t e = 0; e < r * r; ++e) {
        if (PF[e] == 0) continue;
        ZVec y = K.unpack(PF[e] * pq, M - margin, modP);
        while (!y.empty() && y.back() == 0) y.pop_back();
        D = std::max(D, static_cast<int>(y.size()) - 1);
        out.X(e / r, e % r) = ZPoly(fd::taylor_shift(y, -1, modP));
    }
    out.D = D;
    out.N_ach = goal;
    const int res = frobenius_residual_precision(out, conn.N);
    if (res < goal)
        throw ResidualCheckFailed("Frobenius equation holds only to p^" + std::to_string(res) + ", wanted p^" +
                                  std::to_string(goal));
    return out;
}

GlobalFrobenius global_frobenius_adaptive(const ConnectionData& conn, int n, int d, long p, PrecisionPlan plan) {
    while (true) {
        try {
            // F1 must be known past the guard digits the solve adds; ask for a
            // comfortable surplus.
            const PadicMatrix F1 = diagonal_frobenius(n, d, p, plan.N_work + 64);
            return global_frobenius(conn, F1, plan);
        } catch (const ReconstructionFailed&) {
            auto next = escalate(plan);
            if (!next) throw;
            plan = *next;
        }
    }
}

int frobenius_residual_precision(const GlobalFrobenius& G, const Matrix<RatFunc>& N) {
    const long p = G.p;
    const std::size_t r = G.dim();
    const IntegralForm f = integral_form(N, p);
    const int R = G.c + f.a0 + G.N_ach + 4;
    const BigInt mod = ipow(p, R);
    // Scalars: Q, Qs = Q(t^p), Qt, Qt'.
    const ZVec Q = to_mod(f.Q, mod);
    ZVec Qs(static_cast<std::size_t>(f.Q.degree()) * p + 1, 0);
    for (int i = 0; i <= f.Q.degree(); ++i) Qs[i * p] = Q[i];
    const ZVec Qt = to_mod(G.Delta, mod);
    const ZVec dQt = to_mod(G.Delta.derivative(), mod);
    const BigInt pa0 = ipow(p, f.a0);

    std::vector<ZVec> X(r * r), A(r * r), As(r * r);
    for (std::size_t e = 0; e < r * r; ++e) {
        X[e] = to_mod(G.X(e / r, e % r), mod);
        A[e] = to_mod(f.A(e / r, e % r), mod);
        As[e].assign(A[e].empty() ? 0 : (A[e].size() - 1) * p + 1, 0);
        for (std::size_t i = 0; i < A[e].size(); ++i) As[e][i * p] = A[e][i];
    }
    const std::vector<ZVec> AX = series_matmul(A, X, r, 0, mod);
    const std::vector<ZVec> XAs = series_matmul(X, As, r, 0, mod);

    const ZVec tQt = fd::mul(ZVec{0, 1}, Qt, mod);
    const ZVec QQs = fd::mul(Q, Qs, mod);
    const ZVec t_dQt = fd::mul(ZVec{0, 1}, dQt, mod);
    ZVec tp(static_cast<std::size_t>(p) + 1, 0);
    tp[p] = p;
    const ZVec coefAX = fd::mul(tQt, Qs, mod);
    const ZVec coefXAs = fd::mul(fd::mul(tp, Qt, mod), Q, mod);

    auto add_into = [&](ZVec& acc, const ZVec& v, const BigInt& s) {
        if (acc.size() < v.size()) acc.resize(v.size(), 0);
        for (std::size_t i = 0; i < v.size(); ++i) mpz_addmul(acc[i].get_mpz_t(), s.get_mpz_t(), v[i].get_mpz_t());
    };
    int minval = kInfiniteValuation;
    for (std::size_t e = 0; e < r * r; ++e) {
        // p^a0 Q Qs (t Qt X' - b Qt X - m t Qt' X) + t Qt Qs A X - p t^p Qt Q X As
        ZVec dX;
        for (std::size_t i = 1; i < X[e].size(); ++i) dX.push_back(X[e][i] * static_cast<long>(i));
        ZVec inner = fd::mul(tQt, dX, mod);
        add_into(inner, fd::mul(Qt, X[e], mod), BigInt(-G.b));
        add_into(inner, fd::mul(t_dQt, X[e], mod), BigInt(-G.m));
        ZVec T;
        add_into(T, fd::mul(QQs, inner, mod), pa0);
        if (!AX[e].empty()) add_into(T, fd::mul(coefAX, AX[e], mod), BigInt(1));
        if (!XAs[e].empty()) add_into(T, fd::mul(coefXAs, XAs[e], mod), BigInt(-1));
        fd::reduce(T, mod);
        for (const auto& x : T)
            if (x != 0) minval = std::min(minval, ord_p(x, p));
    }
    if (minval == kInfiniteValuation) return G.N_ach + 4;
    return std::min(G.N_ach + 4, minval - G.c - f.a0);
}

PadicMatrix GlobalFrobenius::evaluate(const PadicScalar& tau) const {
    const std::size_t r = dim();
    const int P = c + N_ach;
    const PadicScalar scale = PadicScalar::exact(p, ipow(p, c));
    PadicScalar den = PadicScalar::exact(p, 1);
    for (int i = 0; i < b; ++i) den *= tau;
    PadicScalar dv = PadicScalar::exact(p, 0);
    for (int i = Delta.degree(); i >= 0; --i) dv = dv * tau + PadicScalar::exact(p, Delta.coeff(i));
    for (int i = 0; i < m; ++i) den *= dv;
    PadicMatrix out(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            PadicScalar x = PadicScalar::zero(p, kInfiniteValuation);
            for (int k = X(i, j).degree(); k >= 0; --k) x = x * tau + PadicScalar::from_integer(p, X(i, j).coeff(k), P);
            out(i, j) = x.reduce(P) / scale / den;
        }
    return out;
}

std::vector<PadicMatrix> GlobalFrobenius::laurent_at_zero(int count) const {
    const std::size_t r = dim();
    const int P = c + N_ach;
    const BigInt mod = ipow(p, P);
    // 1 / Delta^m as a power series mod t^count.
    const ZVec Dm = fd::pow(to_mod(Delta, mod), static_cast<unsigned>(m), mod, count);
    ZVec inv(count, 0);
    const BigInt d0 = inverse_mod(Dm[0], mod);
    for (int k = 0; k < count; ++k) {
        BigInt s = k == 0 ? BigInt(1) : BigInt(0);
        for (int j = 1; j <= k && j < static_cast<int>(Dm.size()); ++j) s -= Dm[j] * inv[k - j];
        inv[k] = mod_floor(s * d0, mod);
    }
    const PadicScalar scale = PadicScalar::exact(p, ipow(p, c));
    std::vector<PadicMatrix> out(count, PadicMatrix(r, r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            ZVec x = to_mod(X(i, j), mod);
            if (static_cast<int>(x.size()) > count) x.resize(count);
            const ZVec y = fd::mul(x, inv, mod, count);
            for (int k = 0; k < count; ++k) {
                const BigInt v = k < static_cast<int>(y.size()) ? y[k] : BigInt(0);
                out[k](i, j) = PadicScalar::from_integer(p, v, P) / scale;
            }
        }
    return out;
}

}  // namespace limifrob
