#include "limifrob/gd/mpoly.hpp"

#include <numeric>

#include "limifrob/errors.hpp"

namespace limifrob {

MPoly MPoly::monomial(const Exponent& e, const BigRational& c) {
    MPoly r(static_cast<int>(e.size()));
    r.add_term(e, c);
    return r;
}

MPoly MPoly::variable(int nvars, int i) {
    Exponent e(nvars, 0);
    e[i] = 1;
    return monomial(e);
}

MPoly MPoly::constant(int nvars, const BigRational& c) { return monomial(Exponent(nvars, 0), c); }

BigRational MPoly::coeff(const Exponent& e) const {
    auto it = t_.find(e);
    return it == t_.end() ? BigRational(0) : it->second;
}

void MPoly::add_term(const Exponent& e, const BigRational& c) {
    if (static_cast<int>(e.size()) != nvars_) {
        if (nvars_ == 0 && t_.empty())
            nvars_ = static_cast<int>(e.size());
        else
            throw DimensionMismatch("MPoly: exponent length");
    }
    if (c == 0) return;
    auto [it, inserted] = t_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

int MPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
    return d;
}

bool MPoly::is_homogeneous() const {
    int d = -1;
    for (const auto& [e, c] : t_) {
        const int de = std::accumulate(e.begin(), e.end(), 0);
        if (d >= 0 && de != d) return false;
        d = de;
    }
    return true;
}

MPoly MPoly::derivative(int i) const {
    MPoly r(nvars_);
    for (const auto& [e, c] : t_) {
        if (e[i] == 0) continue;
        Exponent f = e;
        --f[i];
        r.add_term(f, c * e[i]);
    }
    return r;
}

MPoly MPoly::operator-() const {
    MPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

MPoly& MPoly::operator+=(const MPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.t_) add_term(e, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    if (nvars_ == 0) nvars_ = o.nvars_;
    for (const auto& [e, c] : o.t_) add_term(e, -c);
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r(std::max(a.nvars_, b.nvars_));
    for (const auto& [ea, ca] : a.t_)
        for (const auto& [eb, cb] : b.t_) {
            Exponent e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MPoly operator*(const BigRational& c, const MPoly& a) {
    MPoly r(a.nvars_);
    if (c == 0) return r;
    for (const auto& [e, x] : a.t_) r.t_.emplace(e, c * x);
    return r;
}

MPoly MPoly::pow(unsigned k) const {
    MPoly r = constant(nvars_, 1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    // highest exponent (lexicographically) first
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [e, c] = *it;
        BigRational a = abs(c);
        if (s.empty())
            s += c < 0 ? "-" : "";
        else
            s += c < 0 ? " - " : " + ";
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names.at(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty())
            s += a.get_str();
        else if (a == 1)
            s += mono;
        else
            s += a.get_str() + "*" + mono;
    }
    return s;
}

namespace {

void enumerate(int m, int deg, int i, Exponent& cur, std::vector<Exponent>& out) {
    if (i == m - 1) {
        cur[i] = deg;
        out.push_back(cur);
        return;
    }
    for (int a = deg; a >= 0; --a) {
        cur[i] = a;
        enumerate(m, deg - a, i + 1, cur, out);
    }
}

}  // namespace

std::vector<Exponent> monomials_of_degree(int m, int deg) {
    std::vector<Exponent> out;
    if (deg < 0 || m <= 0) return out;
    Exponent cur(m, 0);
    enumerate(m, deg, 0, cur, out);
    return out;
}

MonomialIndex::MonomialIndex(int m, int deg) : mons_(monomials_of_degree(m, deg)) {
    for (int i = 0; i < size(); ++i) idx_.emplace(mons_[i], i);
}

int MonomialIndex::find(const Exponent& e) const {
    auto it = idx_.find(e);
    return it == idx_.end() ? -1 : it->second;
}

}  // namespace limifrob
