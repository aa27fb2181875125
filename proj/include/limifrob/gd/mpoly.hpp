#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "limifrob/exact/numbers.hpp"

namespace limifrob {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial over Q keyed by exponent vectors.
class MPoly {
public:
    MPoly() = default;
    explicit MPoly(int nvars) : nvars_(nvars) {}
    static MPoly monomial(const Exponent& e, const BigRational& c = 1);
    static MPoly variable(int nvars, int i);
    static MPoly constant(int nvars, const BigRational& c);

    int nvars() const { return nvars_; }
    const std::map<Exponent, BigRational>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    BigRational coeff(const Exponent& e) const;
    void add_term(const Exponent& e, const BigRational& c);

    // -1 for the zero polynomial.
    int total_degree() const;
    bool is_homogeneous() const;
    MPoly derivative(int i) const;

    MPoly operator-() const;
    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const BigRational& c, const MPoly& a);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.t_ == b.t_; }
    MPoly pow(unsigned k) const;

    // Render with the given variable names, e.g. "3*X^2*Y - 1/2*Z^2".
    std::string str(const std::vector<std::string>& names) const;

private:
    int nvars_ = 0;
    std::map<Exponent, BigRational> t_;
};

// All exponent vectors of total degree deg in m variables, lexicographically
// decreasing in (e_0, e_1, ...) (so x_0^deg comes first).
std::vector<Exponent> monomials_of_degree(int m, int deg);

// Dense index for exponent vectors of one graded piece.
class MonomialIndex {
public:
    MonomialIndex() = default;
    MonomialIndex(int m, int deg);
    int size() const { return static_cast<int>(mons_.size()); }
    const Exponent& operator[](int i) const { return mons_[i]; }
    // -1 if absent.
    int find(const Exponent& e) const;

private:
    std::vector<Exponent> mons_;
    std::map<Exponent, int> idx_;
};

}  // namespace limifrob
