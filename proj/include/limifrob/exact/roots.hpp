#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <vector>

#include "limifrob/exact/unipoly.hpp"

namespace limifrob {

using HighFloat = boost::multiprecision::cpp_bin_float_100;
using HighComplex = boost::multiprecision::cpp_complex_100;

// All complex roots of a nonzero integer polynomial, with multiplicity, by
// Aberth-Ehrlich iteration in 100-digit arithmetic. Multiple roots converge
// slowly, so callers that need accuracy should pass a squarefree polynomial.
std::vector<HighComplex> approximate_roots(const ZPoly& f);

// Nearest integer.
BigInt round_to_bigint(const HighFloat& x);

}  // namespace limifrob
