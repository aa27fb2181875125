#pragma once

#include <map>
#include <optional>
#include <vector>

#include "limifrob/gd/family.hpp"

namespace limifrob {

// Homogeneous polynomial in x with coefficients in Q(t).
using RatMPoly = std::map<Exponent, RatFunc>;

// The linear system used at pole order k: unknowns are the coefficients of
// the Dwork monomials of level k followed by the multipliers B_i (all
// monomials of degree kd - n - 2 - (d-1), for each i); rows are the monomials
// of degree kd - n - 2. Column entries are affine in t: c0 + t c1.
struct LevelSystem {
    struct Entry {
        int row;
        BigRational c0, c1;
    };
    int k = 0;
    MonomialIndex rows;
    MonomialIndex bmons;
    std::vector<int> dwork;  // indices into the basis
    std::vector<std::vector<Entry>> cols;

    int num_rows() const { return rows.size(); }
    int num_cols() const { return static_cast<int>(cols.size()); }
    int b_offset() const { return static_cast<int>(dwork.size()); }
    // Column of the multiplier monomial bmons[j] for variable i.
    int b_column(int i, int j) const { return b_offset() + i * bmons.size() + j; }
};

LevelSystem build_level_system(const Family& fam, const std::vector<DworkBasisElement>& basis, int k);

// Coordinates of [A Omega / P_t^k] on the Dwork basis, by descending pole
// order with solve_linear at each level. With t0 set, P_t is specialized at
// t = t0 first. Throws NotGeneralPosition if a level system is unsolvable.
std::vector<RatFunc> reduce_to_basis(const RatMPoly& A, int k, const Family& fam,
                                     const std::optional<BigRational>& t0 = std::nullopt);

}  // namespace limifrob
