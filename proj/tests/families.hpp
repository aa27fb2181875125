#pragma once

// The degenerations used across the test suites, built term by term.

#include <initializer_list>
#include <utility>

#include "limifrob/gd/family.hpp"

namespace limifrob::testing {

inline MPoly poly(std::initializer_list<std::pair<long, Exponent>> terms) {
    MPoly f;
    for (const auto& [c, e] : terms) f.add_term(e, c);
    return f;
}

inline Family make_family(int n, int d, long p, MPoly P0) {
    Family f;
    f.n = n;
    f.d = d;
    f.p = p;
    f.P0 = std::move(P0);
    f.P1 = Family::fermat(n + 2, d);
    return f;
}

// (X^2 + Y^2 + 3Z^2 + 3XY + YZ + 2XZ)^2, p = 5
inline Family double_conic() {
    MPoly c = poly({{1, {2, 0, 0}}, {1, {0, 2, 0}}, {3, {0, 0, 2}}, {3, {1, 1, 0}}, {1, {0, 1, 1}}, {2, {1, 0, 1}}});
    return make_family(1, 4, 5, c * c);
}

// X^2Y^2 + Y^2Z^2 + Z^2X^2 - 2XYZ(X + Y + Z), p = 13
inline Family three_cusps() {
    return make_family(1, 4, 13,
                       poly({{1, {2, 2, 0}}, {1, {0, 2, 2}}, {1, {2, 0, 2}}, {-2, {2, 1, 1}}, {-2, {1, 2, 1}}, {-2, {1, 1, 2}}}));
}

// X^6 + Y^6 + 3Y^4Z^2 + 2X^3Z^3 + (X^2 + Y^2)Z^4, p = 7
inline Family nodal_sextic() {
    return make_family(1, 6, 7,
                       poly({{1, {6, 0, 0}}, {1, {0, 6, 0}}, {3, {0, 4, 2}}, {2, {3, 0, 3}}, {1, {2, 0, 4}}, {1, {0, 2, 4}}}));
}

// XYZ^3, p = 31
inline Family quintic_lines() { return make_family(1, 5, 31, poly({{1, {1, 1, 3}}})); }

// X^2Y^2 + X^2Z^2 + Y^2Z^2 + 2XYZW, p = 13
inline Family roman_surface() {
    return make_family(2, 4, 13, poly({{1, {2, 2, 0, 0}}, {1, {2, 0, 2, 0}}, {1, {0, 2, 2, 0}}, {2, {1, 1, 1, 1}}}));
}

// P0 = P1: the constant pencil.
inline Family constant_pencil(int n, int d, long p) { return make_family(n, d, p, Family::fermat(n + 2, d)); }

}  // namespace limifrob::testing
