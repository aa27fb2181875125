#pragma once

#include <cstdint>

#include "limifrob/gd/reduction.hpp"

namespace limifrob {

struct GaussManinOptions {
    std::uint64_t seed = 20240601;
    int initial_order = 32;   // series order in u = t - t0 per prime, doubled on failure
    int max_order = 4096;
    int max_primes = 400;
};

// Gauss-Manin matrix on the Dwork basis. Column j is the reduction of
// -k x^w (P1 - P0) Omega / P_t^(k+1) for basis element (w, k). Entries are
// found modulo word-size primes as power series around random points,
// turned into rational functions by Pade approximation, then lifted to Q by
// Chinese remaindering and rational reconstruction until stable.
ConnectionData gauss_manin_matrix(const Family& fam, const GaussManinOptions& opt = {});

// Same matrix by exact elimination over Q(t) (reduce_to_basis per column).
// Only practical for small bases; used to cross-check the modular route.
ConnectionData gauss_manin_matrix_exact(const Family& fam);

// N_{k,l} = 0 whenever the row pole order k exceeds the column pole order l by
// more than one.
bool satisfies_transversality(const ConnectionData& cd);

}  // namespace limifrob
