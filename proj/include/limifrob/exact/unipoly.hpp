#pragma once

#include <algorithm>
#include <cassert>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "limifrob/exact/numbers.hpp"

namespace limifrob {

// Dense univariate polynomial; coefficient i multiplies x^i. The zero
// polynomial is the empty sequence, so the leading coefficient is never zero.
template <class C>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(long a) {
        if (a != 0) c_.push_back(C(a));
    }
    explicit UniPoly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }

    static UniPoly constant(const C& a) { return UniPoly(std::vector<C>{a}); }
    static UniPoly monomial(const C& a, int deg) {
        std::vector<C> v(deg + 1, C(0));
        v[deg] = a;
        return UniPoly(std::move(v));
    }
    static UniPoly x() { return monomial(C(1), 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<C>& coeffs() const { return c_; }
    C coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : C(0); }
    const C& leading() const {
        assert(!c_.empty());
        return c_.back();
    }
    // Lowest index with a nonzero coefficient (x-adic valuation); -1 for zero.
    int low_degree() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) return static_cast<int>(i);
        return -1;
    }

    C eval(const C& x) const {
        C acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    UniPoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<C> v(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * C(static_cast<long>(i));
        return UniPoly(std::move(v));
    }

    // Multiply by x^k; for k < 0 the terms of degree < -k are discarded.
    UniPoly shift(int k) const {
        if (is_zero()) return {};
        if (k >= 0) {
            std::vector<C> v(c_.size() + k, C(0));
            std::copy(c_.begin(), c_.end(), v.begin() + k);
            return UniPoly(std::move(v));
        }
        const size_t drop = std::min<size_t>(static_cast<size_t>(-k), c_.size());
        return UniPoly(std::vector<C>(c_.begin() + drop, c_.end()));
    }

    // Keep terms of degree < n.
    UniPoly truncate(int n) const {
        if (n <= 0) return {};
        if (n >= static_cast<int>(c_.size())) return *this;
        return UniPoly(std::vector<C>(c_.begin(), c_.begin() + n));
    }

    // p(x^k)
    UniPoly inflate(int k) const {
        if (is_zero() || k == 1) return *this;
        std::vector<C> v((c_.size() - 1) * k + 1, C(0));
        for (size_t i = 0; i < c_.size(); ++i) v[i * k] = c_[i];
        return UniPoly(std::move(v));
    }

    // p(g(x)) by Horner.
    UniPoly compose(const UniPoly& g) const {
        UniPoly acc;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * g + constant(*it);
        return acc;
    }

    // p(x + a) by repeated synthetic division.
    UniPoly taylor_shift(const C& a) const {
        std::vector<C> v = c_;
        const int n = static_cast<int>(v.size());
        for (int i = 0; i < n; ++i)
            for (int j = n - 2; j >= i; --j) v[j] = v[j] + a * v[j + 1];
        return UniPoly(std::move(v));
    }

    UniPoly operator-() const {
        std::vector<C> v(c_);
        for (auto& x : v) x = -x;
        return UniPoly(std::move(v));
    }

    UniPoly& operator+=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator-=(const UniPoly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }
    UniPoly& operator*=(const C& a) {
        if (a == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= a;
        trim();
        return *this;
    }

    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(UniPoly a, const C& s) { return a *= s; }
    friend UniPoly operator*(const C& s, UniPoly a) { return a *= s; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> v(a.c_.size() + b.c_.size() - 1, C(0));
        for (size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

    // Euclidean division; requires an invertible leading coefficient of b.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
        if (b.is_zero()) throw std::domain_error("UniPoly::divmod by zero");
        if (a.degree() < b.degree()) return {UniPoly(), a};
        std::vector<C> r = a.c_;
        std::vector<C> q(a.c_.size() - b.c_.size() + 1, C(0));
        const C inv_lead = C(1) / b.leading();
        const int db = b.degree();
        for (int i = a.degree(); i >= db; --i) {
            if (r[i] == 0) continue;
            C f = r[i] * inv_lead;
            q[i - db] = f;
            for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
        }
        r.resize(db);
        return {UniPoly(std::move(q)), UniPoly(std::move(r))};
    }

    // Exact division; throws if the remainder is nonzero.
    UniPoly exact_div(const UniPoly& b) const {
        auto [q, r] = divmod(*this, b);
        if (!r.is_zero()) throw std::domain_error("UniPoly::exact_div: nonzero remainder");
        return q;
    }

    UniPoly monic() const {
        if (is_zero()) return {};
        return *this * (C(1) / leading());
    }

    friend UniPoly gcd(UniPoly a, UniPoly b) {
        while (!b.is_zero()) {
            UniPoly r = divmod(a, b).second;
            a = std::move(b);
            b = std::move(r);
        }
        return a.monic();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<C> c_;
};

using QPoly = UniPoly<BigRational>;
using ZPoly = UniPoly<BigInt>;

// Primitive integer polynomial with the same roots (positive leading coefficient).
ZPoly primitive_part(const QPoly& f);
QPoly to_qpoly(const ZPoly& f);
// Exact gcd over Q computed through primitive pseudo-remainders (no coefficient blow-up
// from rational arithmetic); result monic.
QPoly gcd_q(const QPoly& a, const QPoly& b);
std::string to_string(const QPoly& f, const std::string& var = "t");
std::string to_string(const ZPoly& f, const std::string& var = "T");

}  // namespace limifrob
