#include "limifrob/gd/gauss_manin.hpp"

#include <algorithm>
#include <random>

#include "limifrob/errors.hpp"
#include "limifrob/exact/modular.hpp"

namespace limifrob {

namespace {

using Vec = std::vector<std::uint64_t>;

// One level system reduced mod l and specialized at t0: E = inverse of the
// pivot-column block, so that x_J = E b solves with free variables zero.
struct ModLevel {
    int R = 0;
    std::vector<int> pivots;   // column index for each row of E
    Vec E;                     // R x R, row-major
    std::vector<std::vector<std::pair<int, std::uint64_t>>> s1;  // S1 restricted to pivots, by pivot
    std::vector<std::pair<int, std::uint64_t>> dwork_pos;         // (pivot slot, basis index)
};

std::optional<ModLevel> prepare(const PrimeField& F, const LevelSystem& L, std::uint64_t t0) {
    const int R = L.num_rows(), C = L.num_cols();
    // [A | I] with A = S0 + t0 S1
    const int W = C + R;
    Vec M(static_cast<std::size_t>(R) * W, 0);
    std::vector<std::vector<std::pair<int, std::uint64_t>>> s1cols(C);
    for (int c = 0; c < C; ++c)
        for (const auto& e : L.cols[c]) {
            auto a0 = F.from_rational(e.c0), a1 = F.from_rational(e.c1);
            if (!a0 || !a1) return std::nullopt;
            M[static_cast<std::size_t>(e.row) * W + c] = F.add(*a0, F.mul(t0, *a1));
            if (*a1) s1cols[c].push_back({e.row, *a1});
        }
    for (int r = 0; r < R; ++r) M[static_cast<std::size_t>(r) * W + C + r] = 1;

    ModLevel ml;
    ml.R = R;
    int row = 0;
    for (int c = 0; c < C && row < R; ++c) {
        int piv = -1;
        for (int r = row; r < R; ++r)
            if (M[static_cast<std::size_t>(r) * W + c]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            std::swap_ranges(M.begin() + static_cast<std::ptrdiff_t>(piv) * W,
                             M.begin() + static_cast<std::ptrdiff_t>(piv + 1) * W,
                             M.begin() + static_cast<std::ptrdiff_t>(row) * W);
        std::uint64_t* pr = &M[static_cast<std::size_t>(row) * W];
        const std::uint64_t inv = F.inv(pr[c]);
        for (int j = c; j < W; ++j) pr[j] = F.mul(pr[j], inv);
        for (int r = 0; r < R; ++r) {
            if (r == row) continue;
            std::uint64_t* q = &M[static_cast<std::size_t>(r) * W];
            const std::uint64_t f = q[c];
            if (!f) continue;
            for (int j = c; j < W; ++j)
                if (pr[j]) q[j] = F.sub(q[j], F.mul(f, pr[j]));
        }
        ml.pivots.push_back(c);
        ++row;
    }
    if (row < R) return std::nullopt;  // not surjective at t0
    ml.E.resize(static_cast<std::size_t>(R) * R);
    for (int r = 0; r < R; ++r)
        std::copy_n(M.begin() + static_cast<std::ptrdiff_t>(r) * W + C, R, ml.E.begin() + static_cast<std::ptrdiff_t>(r) * R);
    ml.s1.resize(R);
    for (int q = 0; q < R; ++q) {
        const int c = ml.pivots[q];
        ml.s1[q] = s1cols[c];
        if (c < L.b_offset()) ml.dwork_pos.push_back({q, L.dwork[c]});
    }
    return ml;
}

Vec matvec(const PrimeField& F, const Vec& E, int R, const Vec& b) {
    Vec x(R, 0);
    for (int i = 0; i < R; ++i) {
        unsigned __int128 acc = 0;
        const std::uint64_t* e = &E[static_cast<std::size_t>(i) * R];
        int cnt = 0;
        for (int j = 0; j < R; ++j) {
            if (!b[j]) continue;
            acc += static_cast<unsigned __int128>(e[j]) * b[j];
            if (++cnt == 16) {  // keep the accumulator below 2^128
                acc %= F.modulus();
                cnt = 0;
            }
        }
        x[i] = static_cast<std::uint64_t>(acc % F.modulus());
    }
    return x;
}

// Series of N(t0 + u) modulo u^order, indexed [row][col][i].
using SeriesMatrix = std::vector<std::vector<Vec>>;

struct PrimeRun {
    bool ok = false;
    SeriesMatrix series;
};

PrimeRun series_at(const PrimeField& F, const Family& fam, const std::vector<DworkBasisElement>& basis,
                   const std::vector<LevelSystem>& levels, std::uint64_t t0, int order) {
    const int r = static_cast<int>(basis.size());
    const int top = basis.back().k + 1;
    std::vector<std::optional<ModLevel>> ml(top + 1);
    for (int k = 2; k <= top; ++k) {
        ml[k] = prepare(F, levels[k], t0);
        if (!ml[k]) return {};
    }
    PrimeRun run;
    run.series.assign(r, std::vector<Vec>(r, Vec(order, 0)));
    const MPoly D = fam.dPdt();
    for (int j = 0; j < r; ++j) {
        const int k0 = basis[j].k;
        // numerator series at the current level, as a dense vector per order
        const LevelSystem* L = &levels[k0 + 1];
        std::vector<Vec> b(order, Vec(L->num_rows(), 0));
        const MPoly top_num = BigRational(-k0) * (MPoly::monomial(basis[j].w) * D);
        for (const auto& [e, c] : top_num.terms()) {
            auto v = F.from_rational(c);
            if (!v) return {};
            b[0][L->rows.find(e)] = *v;
        }
        for (int k = k0 + 1; k >= 1; --k) {
            if (k == 1) {
                for (int b1 = 0; b1 < r; ++b1)
                    if (basis[b1].k == 1) {
                        const int row = levels[1].rows.find(basis[b1].w);
                        for (int i = 0; i < order; ++i) run.series[b1][j][i] = F.add(run.series[b1][j][i], b[i][row]);
                    }
                break;
            }
            const ModLevel& M = *ml[k];
            const LevelSystem& Lk = levels[k];
            std::vector<Vec> x(order);
            for (int i = 0; i < order; ++i) {
                Vec rhs = b[i];
                if (i > 0)
                    for (int q = 0; q < M.R; ++q) {
                        const std::uint64_t xv = x[i - 1][q];
                        if (!xv) continue;
                        for (const auto& [row, a1] : M.s1[q]) rhs[row] = F.sub(rhs[row], F.mul(a1, xv));
                    }
                x[i] = matvec(F, M.E, M.R, rhs);
            }
            for (const auto& [q, bi] : M.dwork_pos)
                for (int i = 0; i < order; ++i) run.series[bi][j][i] = F.add(run.series[bi][j][i], x[i][q]);
            // next numerator (1/(k-1)) sum_i d/dx_i B_i
            const LevelSystem& Ln = levels[k - 1];
            const std::uint64_t scale = F.inv(static_cast<std::uint64_t>(k - 1));
            std::vector<Vec> nb(order, Vec(Ln.num_rows(), 0));
            for (int q = 0; q < M.R; ++q) {
                const int c = M.pivots[q];
                if (c < Lk.b_offset()) continue;
                const int var = (c - Lk.b_offset()) / Lk.bmons.size();
                const Exponent& mu = Lk.bmons[(c - Lk.b_offset()) % Lk.bmons.size()];
                if (mu[var] == 0) continue;
                Exponent e = mu;
                --e[var];
                const int row = Ln.rows.find(e);
                const std::uint64_t f = F.mul(scale, static_cast<std::uint64_t>(mu[var]));
                for (int i = 0; i < order; ++i)
                    if (x[i][q]) nb[i][row] = F.add(nb[i][row], F.mul(f, x[i][q]));
            }
            b = std::move(nb);
        }
    }
    run.ok = true;
    return run;
}

// Rational functions A_ij(t) / Q(t) mod l with Q monic, from the series.
struct ModRational {
    ModPoly Q;
    std::vector<ModPoly> A;  // row-major r x r
};

std::optional<ModRational> recover(const PrimeField& F, const SeriesMatrix& S, std::uint64_t t0, int order,
                                   std::mt19937_64& rng) {
    const int r = static_cast<int>(S.size());
    const int margin = std::max(6, order / 8);
    const int K = order - margin;
    Vec comb(order, 0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            const std::uint64_t a = rng() % F.modulus();
            for (int e = 0; e < order; ++e) comb[e] = F.add(comb[e], F.mul(a, S[i][j][e]));
        }
    auto pd = pade(F, comb, (K - 1) / 2, (K - 1) / 2);
    if (!pd) return std::nullopt;
    const ModPoly& Qu = pd->second;
    ModRational out;
    const std::uint64_t neg_t0 = F.neg(t0);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            ModPoly prod = mod_mul(F, Qu, ModPoly(S[i][j].begin(), S[i][j].end()));
            if (prod.size() > static_cast<std::size_t>(order)) prod.resize(order);
            trim(prod);
            if (prod.size() > static_cast<std::size_t>(K)) return std::nullopt;
            out.A.push_back(mod_taylor_shift(F, prod, neg_t0));
        }
    out.Q = mod_taylor_shift(F, Qu, neg_t0);
    const std::uint64_t il = F.inv(out.Q.back());
    for (auto& c : out.Q) c = F.mul(c, il);
    for (auto& a : out.A)
        for (auto& c : a) c = F.mul(c, il);
    return out;
}

std::vector<LevelSystem> all_levels(const Family& fam, const std::vector<DworkBasisElement>& basis) {
    const int top = basis.back().k + 1;
    std::vector<LevelSystem> levels(top + 1);
    for (int k = 1; k <= top; ++k) levels[k] = build_level_system(fam, basis, k);
    return levels;
}

}  // namespace

ConnectionData gauss_manin_matrix(const Family& fam, const GaussManinOptions& opt) {
    ConnectionData cd;
    cd.basis = dwork_basis(fam.n, fam.d);
    const int r = static_cast<int>(cd.basis.size());
    if (r == 0) throw InvalidFamily("empty Dwork basis");
    const auto levels = all_levels(fam, cd.basis);
    std::mt19937_64 rng(opt.seed);

    int order = opt.initial_order;
    int dq = -1, dA = -1;
    std::vector<BigInt> acc;
    BigInt modulus = 0;
    std::optional<std::vector<BigRational>> last;
    int failures = 0;

    for (int pi = 0; pi < opt.max_primes; ++pi) {
        const PrimeField F(large_prime(pi));
        std::optional<ModRational> mr;
        while (!mr) {
            std::uint64_t t0 = 0;
            PrimeRun run;
            for (int attempt = 0; attempt < 4 && !run.ok; ++attempt) {
                t0 = 1 + rng() % (F.modulus() - 1);
                run = series_at(F, fam, cd.basis, levels, t0, order);
            }
            if (!run.ok) {
                if (++failures > 3) throw NotGeneralPosition("level systems are singular at random points");
                break;
            }
            mr = recover(F, run.series, t0, order, rng);
            if (!mr) {
                if (order >= opt.max_order)
                    throw ReconstructionFailed("Gauss-Manin entries exceed the series order cap");
                order *= 2;
            }
        }
        if (!mr) continue;

        int this_dq = static_cast<int>(mr->Q.size()) - 1, this_dA = 0;
        for (const auto& a : mr->A) this_dA = std::max(this_dA, static_cast<int>(a.size()) - 1);
        if (this_dq < dq || (this_dq == dq && this_dA < dA)) continue;  // unlucky prime
        if (this_dq > dq || this_dA > dA) {
            dq = this_dq;
            dA = this_dA;
            acc.clear();
            modulus = 0;
            last.reset();
        }
        std::vector<std::uint64_t> res;
        res.reserve(dq + 1 + static_cast<std::size_t>(r) * r * (dA + 1));
        for (int i = 0; i <= dq; ++i) res.push_back(i < static_cast<int>(mr->Q.size()) ? mr->Q[i] : 0);
        for (const auto& a : mr->A)
            for (int i = 0; i <= dA; ++i) res.push_back(i < static_cast<int>(a.size()) ? a[i] : 0);
        if (acc.empty()) acc.assign(res.size(), 0);
        BigInt m_before = modulus;
        for (std::size_t i = 0; i < res.size(); ++i) {
            BigInt m = m_before;
            crt_accumulate(acc[i], m, res[i], F.modulus());
            if (i + 1 == res.size()) modulus = m;
        }

        std::vector<BigRational> rec;
        rec.reserve(acc.size());
        bool okrec = true;
        for (const auto& a : acc) {
            auto q = rational_reconstruct(a, modulus);
            if (!q) {
                okrec = false;
                break;
            }
            rec.push_back(*q);
        }
        if (!okrec) {
            last.reset();
            continue;
        }
        if (last && *last == rec) {
            std::size_t pos = 0;
            std::vector<BigRational> qc(rec.begin(), rec.begin() + dq + 1);
            pos = dq + 1;
            const QPoly Q(qc);
            Matrix<RatFunc> N(r, r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) {
                    std::vector<BigRational> ac(rec.begin() + pos, rec.begin() + pos + dA + 1);
                    pos += dA + 1;
                    N(i, j) = RatFunc(QPoly(ac), Q);
                }
            cd.N = std::move(N);
            cd.excised = Q;
            return cd;
        }
        last = std::move(rec);
    }
    throw ReconstructionFailed("Gauss-Manin reconstruction did not stabilize");
}

ConnectionData gauss_manin_matrix_exact(const Family& fam) {
    ConnectionData cd;
    cd.basis = dwork_basis(fam.n, fam.d);
    const int r = static_cast<int>(cd.basis.size());
    cd.N = Matrix<RatFunc>(r, r);
    const MPoly D = fam.dPdt();
    QPoly excised = QPoly::constant(1);
    for (int j = 0; j < r; ++j) {
        const auto& b = cd.basis[j];
        RatMPoly A;
        const MPoly num = BigRational(-b.k) * (MPoly::monomial(b.w) * D);
        for (const auto& [e, c] : num.terms()) A[e] = RatFunc(c);
        auto col = reduce_to_basis(A, b.k + 1, fam);
        for (int i = 0; i < r; ++i) {
            cd.N(i, j) = col[i];
            if (!col[i].is_zero()) {
                const QPoly& dn = col[i].den();
                excised = excised * dn.exact_div(gcd(excised, dn));
            }
        }
    }
    cd.excised = excised.monic();
    return cd;
}

bool satisfies_transversality(const ConnectionData& cd) {
    const int r = static_cast<int>(cd.basis.size());
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (cd.basis[i].k > cd.basis[j].k + 1 && !cd.N(i, j).is_zero()) return false;
    return true;
}

}  // namespace limifrob
