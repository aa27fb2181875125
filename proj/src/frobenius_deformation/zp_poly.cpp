#include "zp_poly.hpp"

#include <algorithm>

namespace limifrob::fd {

std::size_t bits(const BigInt& x) { return x == 0 ? 1 : mpz_sizeinbase(x.get_mpz_t(), 2); }

std::size_t slot_bits_for(std::size_t a_bits, std::size_t b_bits, std::size_t terms) {
    std::size_t t = 1;
    while ((std::size_t{1} << t) < terms + 1) ++t;
    return a_bits + b_bits + t + 1;
}

void reduce(ZVec& a, const BigInt& mod) {
    for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), mod.get_mpz_t());
}

Kronecker::Kronecker(std::size_t slot_bits) : limbs_((slot_bits + GMP_NUMB_BITS - 1) / GMP_NUMB_BITS) {}

BigInt Kronecker::pack(const ZVec& a) const {
    std::vector<mp_limb_t> buf(a.size() * limbs_, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        const mpz_srcptr z = a[i].get_mpz_t();
        const std::size_t n = mpz_size(z);
        for (std::size_t l = 0; l < n && l < limbs_; ++l) buf[i * limbs_ + l] = mpz_getlimbn(z, l);
    }
    BigInt out;
    mpz_import(out.get_mpz_t(), buf.size(), -1, sizeof(mp_limb_t), 0, 0, buf.data());
    return out;
}

ZVec Kronecker::unpack(const BigInt& z, std::size_t n, const BigInt& mod) const {
    const std::size_t have = mpz_size(z.get_mpz_t());
    std::vector<mp_limb_t> buf(std::max(have, n * limbs_), 0);
    std::size_t count = 0;
    if (have > 0) mpz_export(buf.data(), &count, -1, sizeof(mp_limb_t), 0, 0, z.get_mpz_t());
    ZVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        mpz_import(out[i].get_mpz_t(), limbs_, -1, sizeof(mp_limb_t), 0, 0, buf.data() + i * limbs_);
        mpz_fdiv_r(out[i].get_mpz_t(), out[i].get_mpz_t(), mod.get_mpz_t());
    }
    return out;
}

ZVec mul(const ZVec& a, const ZVec& b, const BigInt& mod, std::size_t n) {
    if (a.empty() || b.empty()) return {};
    const std::size_t full = a.size() + b.size() - 1;
    if (n == 0 || n > full) n = full;
    const std::size_t na = std::min(a.size(), n), nb = std::min(b.size(), n);
    if (std::min(na, nb) <= 8) {
        ZVec c(n, 0);
        for (std::size_t i = 0; i < na; ++i) {
            if (a[i] == 0) continue;
            for (std::size_t j = 0; j < nb && i + j < n; ++j) mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
        reduce(c, mod);
        return c;
    }
    ZVec at(a.begin(), a.begin() + na), bt(b.begin(), b.begin() + nb);
    // Packing needs every coefficient in [0, mod).
    for (ZVec* v : {&at, &bt})
        if (std::any_of(v->begin(), v->end(), [&](const BigInt& x) { return x < 0 || x >= mod; })) reduce(*v, mod);
    const Kronecker K(slot_bits_for(bits(mod), bits(mod), std::min(na, nb)));
    return K.unpack(K.pack(at) * K.pack(bt), n, mod);
}

ZVec pow(const ZVec& a, unsigned e, const BigInt& mod, std::size_t n) {
    ZVec r{1}, b = a;
    if (b.size() > n) b.resize(n);
    while (e > 0) {
        if (e & 1) r = mul(r, b, mod, n);
        e >>= 1;
        if (e > 0) b = mul(b, b, mod, n);
    }
    return r;
}

namespace {

// powers[j] = (x + s)^(2^j)
ZVec shift_rec(const ZVec& a, int s, const BigInt& mod, const std::vector<ZVec>& powers) {
    if (a.size() <= 32) {
        // Horner: r = r (x + s) + c
        ZVec r;
        for (auto it = a.rbegin(); it != a.rend(); ++it) {
            r.insert(r.begin(), BigInt(0));
            for (std::size_t i = 0; i + 1 < r.size(); ++i) r[i] += s * r[i + 1];
            r[0] += *it;
        }
        reduce(r, mod);
        return r;
    }
    std::size_t h = 1, j = 0;
    while (2 * h < a.size()) {
        h *= 2;
        ++j;
    }
    const ZVec lo(a.begin(), a.begin() + h), hi(a.begin() + h, a.end());
    ZVec top = mul(shift_rec(hi, s, mod, powers), powers[j], mod);
    const ZVec low = shift_rec(lo, s, mod, powers);
    if (top.size() < low.size()) top.resize(low.size(), 0);
    for (std::size_t i = 0; i < low.size(); ++i) top[i] += low[i];
    reduce(top, mod);
    return top;
}

}  // namespace

// Divide and conquer on the top half: a = lo + x^h hi gives
// a(x + s) = lo(x + s) + (x + s)^h hi(x + s).
ZVec taylor_shift(const ZVec& a, int s, const BigInt& mod) {
    std::vector<ZVec> powers{ZVec{s < 0 ? mod - 1 : BigInt(1), BigInt(1)}};
    while ((std::size_t{1} << powers.size()) < a.size()) powers.push_back(mul(powers.back(), powers.back(), mod));
    return shift_rec(a, s, mod, powers);
}

}  // namespace limifrob::fd
