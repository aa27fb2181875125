#include "limifrob/cli/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>

#include "limifrob/fd/specialize.hpp"
#include "limifrob/gd/gauss_manin.hpp"
#include "limifrob/oracle/counting.hpp"
#include "limifrob/oracle/zeta.hpp"
#include "limifrob/padic/special.hpp"

namespace limifrob {

namespace {

class Stopwatch {
public:
    Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
    }

private:
    std::chrono::steady_clock::time_point t0_;
};

template <class F>
auto stage(Report& rep, const RunOptions& opt, const std::string& name, F&& f) {
    if (opt.log) opt.log(name + " ...");
    Stopwatch w;
    try {
        if constexpr (std::is_void_v<decltype(f())>) {
            f();
            rep.timings.push_back({name, w.seconds()});
        } else {
            auto out = f();
            rep.timings.push_back({name, w.seconds()});
            if (opt.log) opt.log(name + " done in " + std::to_string(w.seconds()) + " s");
            return out;
        }
    } catch (const StageError&) {
        throw;
    } catch (const Error& e) {
        throw StageError(e.category(), name, e.what());
    }
    if (opt.log) opt.log(name + " done in " + std::to_string(w.seconds()) + " s");
}

int digits_for(long p, const BigInt& bound) {
    int D = 0;
    BigInt q = 1;
    while (q <= 2 * bound) {
        q *= p;
        ++D;
    }
    return D;
}

std::vector<int> twice_weights_from_dims(const std::vector<int>& dims) {
    std::vector<int> w;
    for (std::size_t i = 1; i < dims.size(); ++i)
        for (int j = dims[i - 1]; j < dims[i]; ++j) w.push_back(static_cast<int>(i) - 1);
    return w;
}

struct RoundResult {
    LimitingStructure ls;
    StructureCheck structure;
    WeilReport weil;
    GlobalFrobenius G;
};

bool same_polys(const WeilReport& a, const WeilReport& b) {
    if (!(a.full == b.full) || !(a.kernel_factor == b.kernel_factor) || a.pieces.size() != b.pieces.size()) return false;
    for (std::size_t i = 0; i < a.pieces.size(); ++i)
        if (!(a.pieces[i].poly == b.pieces[i].poly)) return false;
    return true;
}

}  // namespace

int recognition_digits(long p, const std::vector<int>& dims, int kernel_dim) {
    const std::vector<int> tw = twice_weights_from_dims(dims);
    BigInt worst = 0;
    for (const auto& b : weight_bounds(p, tw, static_cast<int>(tw.size()))) worst = std::max(worst, b);
    for (const auto& b : weight_bounds(p, tw, kernel_dim)) worst = std::max(worst, b);
    return digits_for(p, worst);
}

std::vector<long> smooth_fiber_choices(const ZPoly& Delta, const QPoly& excised, long p, int count) {
    std::vector<long> out;
    const BigInt P(p);
    const ZPoly ex = primitive_part(excised);
    auto unit_at = [&](long t) {
        return mod_floor(Delta.eval(BigInt(t)), P) != 0 && mod_floor(ex.eval(BigInt(t)), P) != 0;
    };
    // t0 = 1 is the diagonal fibre itself; use it only as a last resort.
    for (long t = 2; t < p && static_cast<int>(out.size()) < count; ++t)
        if (unit_at(t)) out.push_back(t);
    if (static_cast<int>(out.size()) < count && unit_at(1)) out.push_back(1);
    return out;
}

Report run(const FamilyInput& in, const RunOptions& opt) {
    Report rep;
    rep.input = in;
    const Family fam = in.family();
    const long p = in.p;

    ConnectionData cd = stage(rep, opt, "gauss_manin", [&] { return gauss_manin_matrix(fam); });
    NormalizedConnection norm = stage(rep, opt, "normalize", [&] { return normalize(cd.N, in.n + 1); });
    MonodromyFiltration filt = stage(rep, opt, "filtration", [&] { return monodromy_filtration(norm.N0, in.n); });
    rep.r = static_cast<int>(cd.N.rows());
    rep.e = norm.e;
    rep.N0 = norm.N0;
    rep.dims = filt.dims();

    const int kernel_dim = static_cast<int>(nullspace(norm.N0).cols());
    int N_target = std::max(in.N, recognition_digits(p, rep.dims, kernel_dim));
    const int delta = gauge_delta(norm, p);
    const int pole = pole_order_bound(norm, p);

    auto attempt = [&](int N) {
        RoundResult res;
        PrecisionPlan plan = precision_plan(N, delta, norm.e, p, rep.r, cd.excised.degree() - 1);
        plan.b = pole + 1;
        plan.max_rounds = in.escalation_cap;
        res.G = stage(rep, opt, "global_frobenius",
                      [&] { return global_frobenius_adaptive(cd, in.n, in.d, p, plan); });
        LimitingFrobenius L = stage(rep, opt, "specialize", [&] { return specialize_limit(res.G, norm); });
        res.ls = LimitingStructure{in.n, p, norm.e, norm.N0, L.Fr0, L.N_ach};
        res.structure = stage(rep, opt, "structure", [&] { return check_structure(res.ls); });
        res.weil = stage(rep, opt, "graded_analysis", [&] { return graded_analysis(res.ls, filt); });
        return res;
    };

    std::optional<RoundResult> best;
    for (int round = 0;; ++round) {
        try {
            RoundResult res = attempt(N_target);
            rep.escalation.push_back({N_target, "ok"});
            best = std::move(res);
            break;
        } catch (const StageError& e) {
            if (e.category() != ErrorCategory::Precision || round >= in.escalation_cap) throw;
            rep.escalation.push_back({N_target, e.what()});
            N_target += std::max(2, N_target / 4);
        }
    }
    rep.recognized_at.push_back(best->ls.N_ach);

    if (in.confirm) {
        // A second level two digits higher must reproduce every polynomial.
        const int N2 = N_target + 2;
        RoundResult res2 = attempt(N2);
        rep.escalation.push_back({N2, "ok"});
        rep.confirmed = same_polys(best->weil, res2.weil);
        rep.recognized_at.push_back(res2.ls.N_ach);
        if (!rep.confirmed)
            throw StageError(ErrorCategory::Verification, "confirm",
                             "recognized polynomials differ between precisions " + std::to_string(N_target) + " and " +
                                 std::to_string(N2));
        best = std::move(res2);
        N_target = N2;
    }

    rep.N_target = N_target;
    rep.Fr0 = best->ls.Fr0;
    rep.N_ach = best->ls.N_ach;
    rep.structure = best->structure;
    rep.weil = best->weil;
    rep.series_length = best->G.M;
    rep.numerator_degree = best->G.D;
    rep.denominator_power = best->G.m;
    rep.guard_digits = best->G.guard;

    if (in.verify) {
        stage(rep, opt, "smooth_fibers", [&] {
            const GlobalFrobenius& G = best->G;
            // Largest k whose enumeration stays within a modest budget.
            int k = 0;
            for (int j = 1; j <= in.kmax; ++j) {
                double cost = std::pow(static_cast<double>(p), static_cast<double>(j * (in.n + 1)));
                if (cost <= 2e8) k = j;
            }
            for (long t0 : smooth_fiber_choices(G.Delta, cd.excised, p, 2)) {
                SmoothFiberCheck sc;
                sc.t0 = t0;
                sc.kmax = k;
                PadicMatrix F = G.evaluate(teichmuller_lift(t0, p, G.c + G.N_ach + 8));
                try {
                    sc.Q = recognize_integer_poly(reverse_char_poly(F),
                                                  weight_bounds(p, std::vector<int>(rep.r, in.n), rep.r));
                    sc.recognized = true;
                } catch (const Error& e) {
                    sc.note = std::string("not recognized: ") + e.what();
                }
                if (sc.recognized && k > 0) {
                    MPoly Pt = BigRational(1 - t0) * fam.P0 + BigRational(t0) * fam.P1;
                    CountVector counts = count_points_upto(Pt, in.n, p, k, opt.threads);
                    auto cr = zeta_consistency(sc.Q, counts, in.n, p, projective_factors(in.n, p));
                    sc.pass = cr.pass;
                    sc.first_mismatch = cr.first_mismatch;
                } else if (k == 0) {
                    sc.note = "point count over budget";
                }
                rep.smooth_fibers.push_back(std::move(sc));
            }
        });
    }
    return rep;
}

}  // namespace limifrob
