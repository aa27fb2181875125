#include <fstream>
#include <sstream>

#include "doctest.h"
#include "families.hpp"
#include "generators.hpp"
#include "limifrob/cli/report.hpp"
#include "limifrob/oracle/counting.hpp"
#include "limifrob/oracle/zeta.hpp"

using namespace limifrob;
using namespace limifrob::testing;

namespace {

std::string data_file(const std::string& name) {
    std::ifstream f(std::string(LIMIFROB_DATA_DIR) + "/" + name);
    REQUIRE(f);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

const Report& double_conic_report() {
    static const Report rep = [] {
        FamilyInput in = parse_family(data_file("double_conic.fam"));
        in.verify = true;
        return run(in);
    }();
    return rep;
}

ZPoly zpoly(std::initializer_list<long> c) {
    std::vector<BigInt> v;
    for (long x : c) v.emplace_back(x);
    return ZPoly(std::move(v));
}

}  // namespace

TEST_CASE("parse_family: the double conic file") {
    FamilyInput in = parse_family(data_file("double_conic.fam"));
    CHECK(in.n == 1);
    CHECK(in.d == 4);
    CHECK(in.p == 5);
    CHECK(in.vars == std::vector<std::string>{"X", "Y", "Z"});
    // The file spells out the expanded square term by term.
    CHECK(in.P0 == double_conic().P0);
    CHECK(in.P1 == Family::fermat(3, 4));
}

TEST_CASE("parse_family: rejected inputs") {
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\nP0 = X^4 + Y^4 + Z^4\n"), ParseError);
    try {
        parse_family("n = 1\nd = 4\np = 5\nq = 2\nP0 = X^4\n");
        FAIL("unknown key accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\nd = 4\np = 5\nP0 = X^4\n"), ParseError);
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\np = 5\nP0 = X^4 + Y^3\n"), HomogeneityError);
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\np = 7\nP0 = X^4 + Y^4 + Z^4\n"), DegreeDividesError);
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\np = 9\nP0 = X^4 + Y^4 + Z^4\n"), InvalidFamily);
    CHECK_THROWS_AS(parse_family("n = 1\nd = 4\np = 5\nP0 = X^4 + Y^4 + Z^4\nP1 = X^4 + Y^4 + 2*Z^4\n"),
                    InvalidFamily);
    try {
        parse_family("n = 1\nd = 4\np = 5\nP0 = X^4 + * Y^4\n");
        FAIL("bad expression accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 4);
        CHECK(e.column() > 1);
    }
}

TEST_CASE("parse_polynomial: grammar") {
    const std::vector<std::string> v{"X", "Y", "Z"};
    CHECK(parse_polynomial("(X + Y)^2", v) == parse_polynomial("X^2 + 2*X*Y + Y^2", v));
    CHECK(parse_polynomial("3XY - 1/2 Z^2", v) ==
          poly({{3, {1, 1, 0}}}) + BigRational(-1, 2) * poly({{1, {0, 0, 2}}}));
    CHECK(parse_polynomial("-(X - Y)", v) == parse_polynomial("Y - X", v));
    CHECK(parse_polynomial("X*Y*Z^3", v) == quintic_lines().P0);
    CHECK_THROWS_AS(parse_polynomial("X + Q", v), ParseError);
    CHECK_THROWS_AS(parse_polynomial("(X + Y", v), ParseError);
}

TEST_CASE("property: render_family then parse_family is the identity") {
    Gen g(41);
    for (int trial = 0; trial < 40; ++trial) {
        FamilyInput in;
        in.n = static_cast<int>(g.integer(1, 2));
        in.d = 4;
        in.p = g.coin() ? 5 : 13;
        in.vars = default_variable_names(in.n + 2);
        in.P1 = Family::fermat(in.n + 2, in.d);
        for (const auto& e : monomials_of_degree(in.n + 2, in.d))
            if (g.integer(0, 3) == 0) in.P0.add_term(e, g.rational(9));
        if (in.P0.is_zero()) in.P0 = in.P1;
        in.N = static_cast<int>(g.integer(0, 12));
        in.verify = g.coin();
        in.confirm = g.coin();
        in.kmax = static_cast<int>(g.integer(1, 4));
        const FamilyInput back = parse_family(render_family(in));
        CHECK(back.n == in.n);
        CHECK(back.p == in.p);
        CHECK(back.vars == in.vars);
        CHECK(back.P0 == in.P0);
        CHECK(back.P1 == in.P1);
        CHECK(back.N == in.N);
        CHECK(back.verify == in.verify);
        CHECK(back.confirm == in.confirm);
        CHECK(back.kmax == in.kmax);
        CHECK(render_family(back) == render_family(in));
    }
}

TEST_CASE("property: p-adic report encoding round-trips") {
    Gen g(7);
    for (int trial = 0; trial < 200; ++trial) {
        const long p = g.coin() ? 5 : 13;
        const int prec = static_cast<int>(g.integer(-3, 15));
        const PadicScalar x = g.integer(0, 9) == 0 ? PadicScalar::zero(p, prec)
                                                   : PadicScalar::from_rational(p, g.rational(5000), prec);
        const PadicScalar y = padic_from_json(p, nlohmann::json::parse(padic_to_json(x).dump()));
        CHECK(y.is_zero() == x.is_zero());
        CHECK(y.valuation() == x.valuation());
        CHECK(y.absolute_precision() == x.absolute_precision());
        if (!x.is_zero()) CHECK(y.unit() == x.unit());
    }
}

TEST_CASE("poly_string") {
    CHECK(poly_string(zpoly({1, -6, 23})) == "1 - 6*T + 23*T^2");
    CHECK(poly_string(zpoly({0, 1, 0, -1})) == "T - T^3");
    CHECK(poly_string(ZPoly{}) == "0");
}

TEST_CASE("run: the constant pencil has the diagonal structure") {
    FamilyInput in = parse_family(data_file("constant_quartic.fam"));
    const Report rep = run(in);
    CHECK(rep.e == 1);
    CHECK(rep.N0.is_zero());
    CHECK(rep.dims == std::vector<int>{0, 0, 6, 6});
    // The zeta numerator of the Fermat quartic from point counts.
    const ZPoly expected = zeta_numerator_curve(count_points_upto(Family::fermat(3, 4), 1, 5, 3), 3, 5);
    CHECK(rep.weil.full == expected);
    CHECK(rep.weil.kernel_factor == expected);
    REQUIRE(!rep.smooth_fibers.empty());
    for (const auto& s : rep.smooth_fibers) {
        CHECK(s.Q == expected);
        CHECK(s.pass);
    }
}

TEST_CASE("report_to_json: identical runs give identical documents") {
    FamilyInput in = parse_family(data_file("double_conic.fam"));
    const std::string a = report_to_json(run(in)).dump(2);
    const std::string b = report_to_json(double_conic_report()).dump(2);
    in.verify = true;
    const std::string c = report_to_json(run(in)).dump(2);
    CHECK(c == b);
    CHECK(a != b);  // smooth fibres were requested for b only
    const auto j = report_to_json(double_conic_report(), true);
    CHECK(j.contains("timings"));
    CHECK_FALSE(nlohmann::json::parse(b).contains("timings"));
}

TEST_CASE("verify_report: accepts a fresh report and catches tampering") {
    const auto doc = nlohmann::json::parse(report_to_json(double_conic_report()).dump());
    for (const auto& item : verify_report(doc, 3)) CHECK_MESSAGE(item.pass, item.name << " " << item.detail);

    auto failed = [](const nlohmann::json& j) {
        std::vector<std::string> names;
        for (const auto& item : verify_report(j, 2))
            if (!item.pass) names.push_back(item.name);
        return names;
    };
    {
        auto j = doc;
        j["full_char_poly"][1] = "-7";
        CHECK(failed(j) == std::vector<std::string>{"full characteristic polynomial"});
    }
    {
        auto j = doc;
        j["smooth_fibers"][0]["Q"][2] = "24";
        const auto names = failed(j);
        REQUIRE(names.size() == 1);
        CHECK(names[0].rfind("smooth fibre", 0) == 0);
    }
    {
        auto j = doc;
        j["filtration_dims"] = {0, 1, 5, 6};
        CHECK(failed(j) == std::vector<std::string>{"filtration dims"});
    }
    {
        auto j = doc;
        j.erase("Fr0");
        CHECK_THROWS_AS(verify_report(j, 2), ParseError);
    }
}
