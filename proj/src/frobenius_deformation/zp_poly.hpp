#pragma once

// Dense integer polynomials reduced modulo a fixed p^L, with products by
// Kronecker substitution. Coefficient vectors are kept in [0, p^L).

#include <vector>

#include "limifrob/exact/numbers.hpp"

namespace limifrob::fd {

using ZVec = std::vector<BigInt>;

void reduce(ZVec& a, const BigInt& mod);
// Product truncated to n terms (n = 0: full product), reduced mod `mod`.
// Inputs may hold any integers.
ZVec mul(const ZVec& a, const ZVec& b, const BigInt& mod, std::size_t n = 0);
// a(x + s) for s = +1 or -1, reduced mod `mod`.
ZVec taylor_shift(const ZVec& a, int s, const BigInt& mod);
// a^e truncated to n terms.
ZVec pow(const ZVec& a, unsigned e, const BigInt& mod, std::size_t n);

// Packs vectors into one integer, slot_limbs limbs per coefficient, so that
// sums of products can be formed before unpacking once. Packed coefficients
// must lie in [0, 2^slot_bits).
class Kronecker {
public:
    explicit Kronecker(std::size_t slot_bits);
    BigInt pack(const ZVec& a) const;
    ZVec unpack(const BigInt& z, std::size_t n, const BigInt& mod) const;
    std::size_t slot_bits() const { return limbs_ * GMP_NUMB_BITS; }

private:
    std::size_t limbs_;
};

// Bits needed for a slot holding `terms` products of values below 2^a and 2^b.
std::size_t slot_bits_for(std::size_t a_bits, std::size_t b_bits, std::size_t terms);
std::size_t bits(const BigInt& x);

}  // namespace limifrob::fd
