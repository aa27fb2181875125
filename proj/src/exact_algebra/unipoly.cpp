#include "limifrob/exact/unipoly.hpp"

#include <sstream>

namespace limifrob {

ZPoly primitive_part(const QPoly& f) {
    if (f.is_zero()) return {};
    BigInt den = 1;
    for (const auto& c : f.coeffs())
        if (c != 0) den = lcm(den, BigInt(c.get_den()));
    std::vector<BigInt> v;
    v.reserve(f.coeffs().size());
    BigInt g = 0;
    for (const auto& c : f.coeffs()) {
        BigInt z = BigInt(c.get_num()) * (den / BigInt(c.get_den()));
        g = gcd(g, z);
        v.push_back(z);
    }
    if (f.leading() < 0) g = -g;
    for (auto& z : v) z /= g;
    return ZPoly(std::move(v));
}

QPoly to_qpoly(const ZPoly& f) {
    std::vector<BigRational> v;
    v.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) v.emplace_back(c);
    return QPoly(std::move(v));
}

namespace {

// Pseudo-remainder of a by b over Z.
ZPoly pseudo_rem(ZPoly a, const ZPoly& b) {
    const int db = b.degree();
    const BigInt lb = b.leading();
    std::vector<BigInt> r = a.coeffs();
    for (int i = a.degree(); i >= db; --i) {
        BigInt f = r[i];
        for (auto& x : r) x *= lb;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(std::max(db, 0));
    return ZPoly(std::move(r));
}

ZPoly make_primitive(const ZPoly& f) {
    if (f.is_zero()) return f;
    BigInt g = 0;
    for (const auto& c : f.coeffs()) g = gcd(g, c);
    if (f.leading() < 0) g = -g;
    std::vector<BigInt> v = f.coeffs();
    for (auto& c : v) c /= g;
    return ZPoly(std::move(v));
}

}  // namespace

QPoly gcd_q(const QPoly& a, const QPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    ZPoly x = primitive_part(a);
    ZPoly y = primitive_part(b);
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        ZPoly r = make_primitive(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return to_qpoly(x).monic();
}

namespace {

template <class C>
std::string poly_string(const UniPoly<C>& f, const std::string& var) {
    if (f.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i <= f.degree(); ++i) {
        const C c = f.coeff(i);
        if (c == 0) continue;
        std::string s = c.get_str();
        const bool neg = s[0] == '-';
        if (neg) s = s.substr(1);
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (i == 0)
            os << s;
        else {
            if (s != "1") os << s << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

}  // namespace

std::string to_string(const QPoly& f, const std::string& var) { return poly_string(f, var); }
std::string to_string(const ZPoly& f, const std::string& var) { return poly_string(f, var); }

}  // namespace limifrob
