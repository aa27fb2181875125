#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "limifrob/gd/family.hpp"

namespace limifrob {

// Contents of a family file:
//
//   n = 1
//   d = 4
//   p = 5
//   N = 8                 # optional; raised to what recognition needs
//   vars = X,Y,Z          # optional; defaults to X,Y,Z,W or x0,x1,...
//   P0 = (X^2 + Y^2 + 3*Z^2 + 3*X*Y + Y*Z + 2*X*Z)^2
//   P1 = X^4 + Y^4 + Z^4  # optional; must be the diagonal polynomial
//   verify = true         # optional smooth-fibre point-count checks
//   kmax = 3
//   escalation_cap = 4
//   confirm = true        # optional second run two digits higher
//
// A line starting with whitespace continues the value on the previous line.
struct FamilyInput {
    int n = 0;
    int d = 0;
    long p = 0;
    std::vector<std::string> vars;
    MPoly P0, P1;
    int N = 0;
    bool verify = false;
    int kmax = 3;
    int escalation_cap = 4;
    bool confirm = false;

    Family family() const;
};

// Throws ParseError (with line and column), HomogeneityError,
// DegreeDividesError (d does not divide p - 1) and InvalidFamily.
FamilyInput parse_family(std::string_view text);
std::string render_family(const FamilyInput& in);

// A polynomial expression over the given variable names: sums and
// differences of products of integers, fractions a/b, variables and
// parenthesized expressions, each optionally raised to a power ^k.
MPoly parse_polynomial(std::string_view text, const std::vector<std::string>& vars);

std::vector<std::string> default_variable_names(int count);

}  // namespace limifrob
