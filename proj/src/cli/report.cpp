#include "limifrob/cli/report.hpp"

#include <cmath>
#include <sstream>

#include "limifrob/oracle/counting.hpp"
#include "limifrob/oracle/zeta.hpp"

namespace limifrob {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json poly_json(const ZPoly& f) {
    ordered_json a = ordered_json::array();
    for (const auto& c : f.coeffs()) a.push_back(c.get_str());
    return a;
}

ZPoly poly_from_json(const json& a) {
    std::vector<BigInt> c;
    for (const auto& x : a) c.emplace_back(x.get<std::string>());
    return ZPoly(std::move(c));
}

template <class M, class F>
ordered_json matrix_json(const M& A, F&& cell) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < A.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (std::size_t j = 0; j < A.cols(); ++j) row.push_back(cell(A(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string weight_string(int k) { return k % 2 == 0 ? std::to_string(k / 2) : std::to_string(k) + "/2"; }

[[noreturn]] void malformed(const std::string& what) { throw ParseError(1, 1, "report: " + what); }

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) malformed(std::string("missing field '") + key + "'");
    return j.at(key);
}

}  // namespace

std::string poly_string(const ZPoly& f, const char* var) {
    if (f.is_zero()) return "0";
    std::string s;
    for (int i = 0; i <= f.degree(); ++i) {
        const BigInt& c = f.coeff(i);
        if (c == 0) continue;
        BigInt a = abs(c);
        s += s.empty() ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        if (i == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str() + "*";
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

ordered_json padic_to_json(const PadicScalar& x) {
    ordered_json j;
    if (x.is_zero()) {
        j["valuation"] = x.valuation();
        j["unit"] = "0";
        j["N"] = 0;
    } else {
        j["valuation"] = x.valuation();
        j["unit"] = x.unit().get_str();
        j["N"] = x.relative_precision();
    }
    return j;
}

PadicScalar padic_from_json(long p, const json& j) {
    const int v = field(j, "valuation").get<int>();
    const BigInt u(field(j, "unit").get<std::string>());
    const int N = field(j, "N").get<int>();
    if (u == 0) return PadicScalar::zero(p, v);
    BigRational q = u;
    if (v >= 0)
        q *= BigRational(ipow(p, v));
    else
        q /= BigRational(ipow(p, -v));
    return PadicScalar::from_rational(p, q, v + N);
}

ordered_json report_to_json(const Report& rep, bool include_timings) {
    const FamilyInput& in = rep.input;
    ordered_json j;
    j["schema"] = "limifrob-report";
    j["version"] = kReportVersion;
    ordered_json fam;
    fam["n"] = in.n;
    fam["d"] = in.d;
    fam["p"] = in.p;
    fam["vars"] = in.vars;
    fam["P0"] = in.P0.str(in.vars);
    fam["P1"] = in.P1.str(in.vars);
    fam["text"] = render_family(in);
    j["family"] = fam;
    j["r"] = rep.r;
    j["e"] = rep.e;
    j["N_target"] = rep.N_target;
    j["N_ach"] = rep.N_ach;
    j["N0"] = matrix_json(rep.N0, [](const BigRational& q) { return q.get_str(); });
    j["N0_is_zero"] = rep.N0.is_zero();
    j["filtration_dims"] = rep.dims;

    ordered_json st;
    st["nilpotent"] = rep.structure.nilpotent;
    st["commutes"] = rep.structure.commutes;
    st["commutation_precision"] = rep.structure.commutation_precision;
    st["det_known"] = rep.structure.det_known;
    st["det_valuation"] = rep.structure.det_valuation;
    st["det_valuation_ok"] = rep.structure.det_valuation_ok;
    j["structure"] = st;

    ordered_json graded = ordered_json::array();
    for (const auto& g : rep.weil.pieces) {
        ordered_json x;
        x["k"] = g.k;
        x["weight"] = weight_string(g.k);
        x["dim"] = g.dim;
        x["poly"] = poly_json(g.poly);
        x["weil_pass"] = g.weil.pass;
        x["worst_relative_error"] = g.weil.worst_relative_error;
        x["frobenius_stable"] = g.frobenius_stable;
        graded.push_back(std::move(x));
    }
    j["graded"] = graded;
    j["full_char_poly"] = poly_json(rep.weil.full);
    j["kernel_factor"] = poly_json(rep.weil.kernel_factor);
    j["product_matches"] = rep.weil.product_matches;
    j["all_weights_pass"] = rep.weil.all_weights_pass;
    j["all_stable"] = rep.weil.all_stable;
    j["leading_coefficient_ok"] = rep.weil.full_is_weil_symmetric;
    j["recognized_at"] = rep.recognized_at;
    j["confirmed"] = rep.confirmed;

    j["Fr0"] = matrix_json(rep.Fr0, [](const PadicScalar& x) { return padic_to_json(x); });

    ordered_json sf = ordered_json::array();
    for (const auto& s : rep.smooth_fibers) {
        ordered_json x;
        x["t0"] = s.t0;
        x["kmax"] = s.kmax;
        x["recognized"] = s.recognized;
        x["Q"] = poly_json(s.Q);
        x["pass"] = s.pass;
        x["first_mismatch"] = s.first_mismatch;
        x["note"] = s.note;
        sf.push_back(std::move(x));
    }
    j["smooth_fibers"] = sf;

    ordered_json esc = ordered_json::array();
    for (const auto& s : rep.escalation) esc.push_back({{"N_target", s.N_target}, {"outcome", s.outcome}});
    j["escalation"] = esc;
    j["diagnostics"] = {{"series_length", rep.series_length},
                        {"numerator_degree", rep.numerator_degree},
                        {"denominator_power", rep.denominator_power},
                        {"guard_digits", rep.guard_digits}};
    if (include_timings) {
        ordered_json t = ordered_json::array();
        for (const auto& s : rep.timings) t.push_back({{"stage", s.stage}, {"seconds", s.seconds}});
        j["timings"] = t;
    }
    return j;
}

std::string render_text(const Report& rep) {
    std::ostringstream o;
    const FamilyInput& in = rep.input;
    o << "family    n = " << in.n << ", d = " << in.d << ", p = " << in.p << "\n";
    o << "P0        " << in.P0.str(in.vars) << "\n";
    o << "r = " << rep.r << ", e = " << rep.e << ", N0 " << (rep.N0.is_zero() ? "= 0" : "!= 0")
      << ", precision p^" << rep.N_ach << "\n";
    o << "filtration dims:";
    for (int d : rep.dims) o << " " << d;
    o << "\n";
    for (const auto& g : rep.weil.pieces) {
        if (g.dim == 0) continue;
        o << "  W_" << g.k << "/W_" << g.k - 1 << " (dim " << g.dim << ", weight " << weight_string(g.k)
          << (g.weil.pass ? ", Weil ok" : ", Weil FAILED") << (g.frobenius_stable ? "" : ", not stable") << "): "
          << poly_string(g.poly) << "\n";
    }
    o << "det(1 - T Fr0 | H0)     = " << poly_string(rep.weil.full) << "\n";
    o << "det(1 - T Fr0 | Ker N0) = " << poly_string(rep.weil.kernel_factor) << "\n";
    o << "checks: N0^(n+1) = 0 " << (rep.structure.nilpotent ? "ok" : "FAILED") << "; N0 Fr0 = p Fr0 N0 "
      << (rep.structure.commutes ? "ok" : "FAILED") << "; product of graded pieces "
      << (rep.weil.product_matches ? "ok" : "FAILED");
    if (rep.structure.det_known)
        o << "; ord det Fr0 = " << rep.structure.det_valuation << (rep.structure.det_valuation_ok ? " ok" : " FAILED");
    o << "\n";
    if (rep.confirmed) o << "recognition stable at precisions " << rep.recognized_at.front() << " and " << rep.recognized_at.back() << "\n";
    for (const auto& s : rep.smooth_fibers) {
        o << "smooth fibre t = " << s.t0 << ": ";
        if (!s.recognized || s.kmax == 0)
            o << "skipped (" << s.note << ")\n";
        else
            o << poly_string(s.Q) << ", point counts k <= " << s.kmax << (s.pass ? " agree" : " DISAGREE") << "\n";
    }
    return o.str();
}

std::vector<VerifyItem> verify_report(const json& report, int kmax, int threads) {
    if (field(report, "schema") != "limifrob-report") malformed("not a limifrob report");
    if (field(report, "version").get<int>() != kReportVersion) malformed("unsupported version");
    const FamilyInput in = parse_family(field(field(report, "family"), "text").get<std::string>());
    const long p = in.p;
    std::vector<VerifyItem> out;
    auto add = [&](std::string name, bool ok, std::string detail = {}) {
        out.push_back({std::move(name), ok, std::move(detail)});
    };

    const json& n0 = field(report, "N0");
    const std::size_t r = n0.size();
    QMatrix N0(r, r);
    PadicMatrix Fr0(r, r);
    const json& fr = field(report, "Fr0");
    if (fr.size() != r) malformed("Fr0 has the wrong size");
    for (std::size_t i = 0; i < r; ++i) {
        if (n0[i].size() != r || fr[i].size() != r) malformed("matrix rows have the wrong length");
        for (std::size_t k = 0; k < r; ++k) {
            N0(i, k) = BigRational(n0[i][k].get<std::string>());
            N0(i, k).canonicalize();
            Fr0(i, k) = padic_from_json(p, fr[i][k]);
        }
    }
    LimitingStructure ls{in.n, p, field(report, "e").get<int>(), N0, Fr0, field(report, "N_ach").get<int>()};

    StructureCheck sc = check_structure(ls);
    add("N0^(n+1) = 0", sc.nilpotent);
    add("N0 Fr0 = p Fr0 N0", sc.commutes, "to p^" + std::to_string(sc.commutation_precision));
    if (sc.det_known)
        add("ord_p det Fr0 = n r / 2", sc.det_valuation_ok, std::to_string(sc.det_valuation));

    MonodromyFiltration filt = monodromy_filtration(N0, in.n);
    add("filtration dims", filt.dims() == field(report, "filtration_dims").get<std::vector<int>>());

    WeilReport w = graded_analysis(ls, filt);
    add("full characteristic polynomial", w.full == poly_from_json(field(report, "full_char_poly")),
        poly_string(w.full));
    add("kernel factor", w.kernel_factor == poly_from_json(field(report, "kernel_factor")),
        poly_string(w.kernel_factor));
    const json& graded = field(report, "graded");
    bool graded_same = graded.size() == w.pieces.size();
    for (std::size_t i = 0; graded_same && i < w.pieces.size(); ++i)
        graded_same = w.pieces[i].poly == poly_from_json(field(graded[i], "poly"));
    add("graded polynomials", graded_same);
    add("product of graded pieces", w.product_matches);
    add("weights k/2 on W_k/W_(k-1)", w.all_weights_pass);
    add("Frobenius stability of W_k", w.all_stable);

    for (const auto& s : field(report, "smooth_fibers")) {
        const long t0 = field(s, "t0").get<long>();
        const std::string name = "smooth fibre t = " + std::to_string(t0);
        if (!field(s, "recognized").get<bool>()) continue;
        int k = 0;
        for (int j = 1; j <= kmax; ++j)
            if (std::pow(static_cast<double>(p), static_cast<double>(j * (in.n + 1))) <= 1e9) k = j;
        if (k == 0) {
            add(name, false, "point count over budget");
            continue;
        }
        MPoly Pt = BigRational(1 - t0) * in.P0 + BigRational(t0) * in.P1;
        CountVector counts = count_points_upto(Pt, in.n, p, k, threads);
        auto cr = zeta_consistency(poly_from_json(field(s, "Q")), counts, in.n, p, projective_factors(in.n, p));
        add(name, cr.pass,
            cr.pass ? "counts agree for k <= " + std::to_string(k)
                    : "first mismatch at k = " + std::to_string(cr.first_mismatch));
    }
    return out;
}

}  // namespace limifrob
