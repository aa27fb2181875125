#pragma once

#include "limifrob/padic/padic_series.hpp"

namespace limifrob {

// Fundamental solution C of dC/du + N_loc C = 0 with C(0) = I, modulo u^M.
// Coefficients come from (i+1) C_{i+1} = -sum_j N_j C_{i-j}; the division by
// i+1 costs ord_p(i+1) digits, which the scalar precision tracking records.
// N_work caps the precision of the inputs. Throws PrecisionExhausted if a
// coefficient ends up known to less than one p-adic digit.
PadicSeriesMatrix series_ode_solve(const PadicSeriesMatrix& N_loc, int M, int N_work);

}  // namespace limifrob
