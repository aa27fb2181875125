#include "limifrob/gd/reduction.hpp"

#include <numeric>

#include "limifrob/errors.hpp"

namespace limifrob {

LevelSystem build_level_system(const Family& fam, const std::vector<DworkBasisElement>& basis, int k) {
    const int m = fam.nvars(), d = fam.d;
    LevelSystem L;
    L.k = k;
    L.rows = MonomialIndex(m, k * d - m);
    L.bmons = MonomialIndex(m, k * d - m - (d - 1));
    for (int b = 0; b < static_cast<int>(basis.size()); ++b) {
        if (basis[b].k != k) continue;
        L.dwork.push_back(b);
        L.cols.push_back({{L.rows.find(basis[b].w), 1, 0}});
    }
    const MPoly D = fam.dPdt();
    for (int i = 0; i < m; ++i) {
        const MPoly d0 = fam.P0.derivative(i), d1 = D.derivative(i);
        for (int j = 0; j < L.bmons.size(); ++j) {
            std::map<int, std::pair<BigRational, BigRational>> acc;
            const MPoly mono = MPoly::monomial(L.bmons[j]);
            const MPoly m0 = mono * d0, m1 = mono * d1;
            for (const auto& [e, c] : m0.terms()) acc[L.rows.find(e)].first += c;
            for (const auto& [e, c] : m1.terms()) acc[L.rows.find(e)].second += c;
            std::vector<LevelSystem::Entry> col;
            for (auto& [r, cc] : acc)
                if (cc.first != 0 || cc.second != 0) col.push_back({r, cc.first, cc.second});
            L.cols.push_back(std::move(col));
        }
    }
    return L;
}

std::vector<RatFunc> reduce_to_basis(const RatMPoly& A_in, int k, const Family& fam,
                                     const std::optional<BigRational>& t0) {
    const auto basis = dwork_basis(fam.n, fam.d);
    const int m = fam.nvars(), d = fam.d;
    std::vector<RatFunc> out(basis.size());
    RatMPoly A;
    for (const auto& [e, c] : A_in) {
        if (static_cast<int>(e.size()) != m || std::accumulate(e.begin(), e.end(), 0) != k * d - m)
            throw DimensionMismatch("reduce_to_basis: numerator has the wrong degree");
        if (!c.is_zero()) A[e] = c;
    }
    const RatFunc T = t0 ? RatFunc(*t0) : RatFunc::t();

    for (int level = k; level >= 1 && !A.empty(); --level) {
        if (level * d - m < 0) throw DimensionMismatch("reduce_to_basis: negative numerator degree");
        if (level == 1) {
            for (int b = 0; b < static_cast<int>(basis.size()); ++b)
                if (basis[b].k == 1) {
                    auto it = A.find(basis[b].w);
                    if (it != A.end()) out[b] += it->second;
                }
            break;
        }
        LevelSystem L = build_level_system(fam, basis, level);
        Matrix<RatFunc> S(L.num_rows(), L.num_cols());
        for (int c = 0; c < L.num_cols(); ++c)
            for (const auto& e : L.cols[c]) S(e.row, c) = RatFunc(e.c0) + RatFunc(e.c1) * T;
        std::vector<RatFunc> rhs(L.num_rows());
        for (const auto& [e, c] : A) rhs[L.rows.find(e)] = c;
        auto x = solve_linear(S, rhs);
        if (!x) throw NotGeneralPosition("reduction system unsolvable at pole order " + std::to_string(level));
        for (int j = 0; j < L.b_offset(); ++j) out[L.dwork[j]] += (*x)[j];
        RatMPoly next;
        const RatFunc scale = RatFunc(BigRational(1, level - 1));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < L.bmons.size(); ++j) {
                const RatFunc& c = (*x)[L.b_column(i, j)];
                const Exponent& mu = L.bmons[j];
                if (c.is_zero() || mu[i] == 0) continue;
                Exponent e = mu;
                --e[i];
                next[e] += c * RatFunc(BigRational(mu[i])) * scale;
            }
        A.clear();
        for (auto& [e, c] : next)
            if (!c.is_zero()) A[e] = c;
    }
    return out;
}

}  // namespace limifrob
