#include "limifrob/padic/padic_scalar.hpp"

#include <algorithm>
#include <stdexcept>

#include "limifrob/errors.hpp"

namespace limifrob {

namespace {

constexpr int kInf = kInfiniteValuation;

BigInt ppow(long p, int e) { return ipow(p, static_cast<unsigned long>(e)); }

}  // namespace

PadicScalar::PadicScalar(long a) : p_(0), v_(a == 0 ? kInf : 0), u_(a), N_(kInf) {}

PadicScalar PadicScalar::normalize(long p, int v0, BigInt X, int rel) {
    PadicScalar r;
    r.p_ = p;
    if (rel == kInf) {
        if (X == 0) return r;  // exact zero
        auto [w, u] = split_p(X, p);
        r.v_ = v0 + w;
        r.u_ = u;
        r.N_ = kInf;
        return r;
    }
    if (rel <= 0) return zero(p, v0 + rel);
    X = mod_floor(X, ppow(p, rel));
    if (X == 0) return zero(p, v0 + rel);
    auto [w, u] = split_p(X, p);
    r.v_ = v0 + w;
    r.u_ = u;
    r.N_ = rel - w;
    return r;
}

PadicScalar PadicScalar::from_rational(long p, const BigRational& q, int abs_prec) {
    if (q == 0) return zero(p, abs_prec);
    auto [vn, un] = split_p(BigInt(q.get_num()), p);
    auto [vd, ud] = split_p(BigInt(q.get_den()), p);
    const int v = vn - vd;
    const int rel = abs_prec - v;
    if (rel <= 0) return zero(p, abs_prec);
    const BigInt m = ppow(p, rel);
    return normalize(p, v, mod_floor(un * inverse_mod(ud, m), m), rel);
}

PadicScalar PadicScalar::from_integer(long p, const BigInt& x, int abs_prec) {
    return normalize(p, 0, x, abs_prec);
}

PadicScalar PadicScalar::exact(long p, const BigInt& x) { return normalize(p, 0, x, kInf); }

PadicScalar PadicScalar::zero(long p, int abs_prec) {
    PadicScalar r;
    r.p_ = p;
    r.v_ = abs_prec;
    r.u_ = 0;
    r.N_ = abs_prec == kInf ? kInf : 0;
    return r;
}

int PadicScalar::absolute_precision() const {
    if (N_ == kInf) return kInf;
    return v_ + N_;
}

BigInt PadicScalar::residue(int abs) const {
    if (abs > absolute_precision()) throw PrecisionExhausted("residue: requested digits beyond precision");
    if (u_ == 0) return 0;
    if (v_ < 0) throw std::domain_error("residue: negative valuation");
    if (p_ == 0) return u_;
    const BigInt m = ppow(p_, abs);
    if (v_ >= abs) return 0;
    return mod_floor(u_ * ppow(p_, v_), m);
}

BigRational PadicScalar::to_rational() const {
    if (u_ == 0) return 0;
    if (p_ == 0) return BigRational(u_);
    if (v_ >= 0) return BigRational(u_ * ppow(p_, v_));
    return make_rational(u_, ppow(p_, -v_));
}

PadicScalar PadicScalar::reduce(int abs) const {
    if (abs >= absolute_precision()) return *this;
    if (u_ == 0) return zero(p_, abs);
    return normalize(p_, v_, u_, abs - v_);
}

PadicScalar PadicScalar::bind(long p) const {
    if (p_ != 0 || p == 0) return *this;
    return normalize(p, 0, u_, kInf);
}

void PadicScalar::unify(PadicScalar& a, PadicScalar& b) {
    if (a.p_ == b.p_) return;
    if (a.p_ == 0) {
        a = a.bind(b.p_);
    } else if (b.p_ == 0) {
        b = b.bind(a.p_);
    } else {
        throw std::invalid_argument("PadicScalar: mixing different primes");
    }
}

PadicScalar PadicScalar::operator-() const {
    PadicScalar r = *this;
    if (u_ == 0) return r;
    if (N_ == kInf) {
        r.u_ = -u_;
        return r;
    }
    r.u_ = ppow(p_, N_) - u_;
    return r;
}

PadicScalar& PadicScalar::operator+=(const PadicScalar& o_in) {
    PadicScalar o = o_in;
    unify(*this, o);
    if (p_ == 0) {
        u_ += o.u_;
        v_ = u_ == 0 ? kInf : 0;
        return *this;
    }
    const int A = std::min(absolute_precision(), o.absolute_precision());
    int v0 = kInf;
    if (u_ != 0) v0 = std::min(v0, v_);
    if (o.u_ != 0) v0 = std::min(v0, o.v_);
    if (v0 == kInf) return *this = zero(p_, A);
    if (A != kInf && v0 >= A) return *this = zero(p_, A);
    BigInt X = 0;
    if (u_ != 0) X += u_ * ppow(p_, v_ - v0);
    if (o.u_ != 0) X += o.u_ * ppow(p_, o.v_ - v0);
    return *this = normalize(p_, v0, X, A == kInf ? kInf : A - v0);
}

PadicScalar& PadicScalar::operator-=(const PadicScalar& o) { return *this += -o; }

PadicScalar& PadicScalar::operator*=(const PadicScalar& o_in) {
    PadicScalar o = o_in;
    unify(*this, o);
    if (p_ == 0) {
        u_ *= o.u_;
        v_ = u_ == 0 ? kInf : 0;
        return *this;
    }
    const bool ez = u_ == 0 && N_ == kInf, oez = o.u_ == 0 && o.N_ == kInf;
    if (ez || oez) return *this = zero(p_, kInf);
    if (u_ == 0 || o.u_ == 0) return *this = zero(p_, v_ + o.v_);
    return *this = normalize(p_, v_ + o.v_, u_ * o.u_, std::min(N_, o.N_));
}

PadicScalar& PadicScalar::operator/=(const PadicScalar& o_in) {
    PadicScalar o = o_in;
    unify(*this, o);
    if (o.u_ == 0) throw PrecisionExhausted("division by a p-adic zero");
    if (p_ == 0) {
        if (!mpz_divisible_p(u_.get_mpz_t(), o.u_.get_mpz_t()))
            throw std::domain_error("PadicScalar: inexact division of unbound integers");
        u_ /= o.u_;
        return *this;
    }
    if (u_ == 0) {
        if (N_ == kInf) return *this;
        return *this = zero(p_, v_ - o.v_);
    }
    const int N = std::min(N_, o.N_);
    if (N == kInf) {
        if (abs(o.u_) != 1) throw std::domain_error("PadicScalar: exact division leaves Z[1/p]");
        return *this = normalize(p_, v_ - o.v_, u_ * o.u_, kInf);
    }
    const BigInt m = ppow(p_, N);
    return *this = normalize(p_, v_ - o.v_, u_ * inverse_mod(mod_floor(o.u_, m), m), N);
}

std::string PadicScalar::str() const {
    if (p_ == 0) return u_.get_str();
    const std::string P = std::to_string(p_);
    if (u_ == 0) return N_ == kInf ? "0" : "O(" + P + "^" + std::to_string(v_) + ")";
    std::string s = u_.get_str();
    if (v_ != 0) s = P + "^" + std::to_string(v_) + "*" + s;
    if (N_ != kInf) s += " + O(" + P + "^" + std::to_string(v_ + N_) + ")";
    return s;
}

}  // namespace limifrob
