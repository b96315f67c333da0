#pragma once

// Sparse exact-rational polynomials in the five variables x, y, z, u, v.
// Canonical form: a term map with no zero coefficients; equality is term-map
// equality.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "omact/rational.hpp"

namespace omact {

enum class Var : int { x = 0, y = 1, z = 2, u = 3, v = 4 };

inline constexpr int kNumVars = 5;

// Exponent vector indexed by Var.
using ExpVec = std::array<int, kNumVars>;

class MultiPoly {
public:
    MultiPoly() = default;  // zero polynomial
    MultiPoly(long long c) { *this = constant(Rational(c)); }  // NOLINT

    static MultiPoly constant(const Rational& c);
    static MultiPoly variable(Var v);
    static MultiPoly monomial(const ExpVec& e, const Rational& c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    Rational coefficient(const ExpVec& e) const;
    bool integer_coefficients() const;
    int degree(Var v) const;  // 0 for the zero polynomial

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
    MultiPoly pow(int e) const;  // e >= 0

    bool operator==(const MultiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Exact evaluation; all five variables must be assigned.
    Rational eval(const std::array<Rational, kNumVars>& point) const;

    // Simultaneous substitution; variables absent from the map stay themselves.
    MultiPoly substitute(const std::map<Var, MultiPoly>& repl) const;

    // Formal partial derivative, `times`-fold.
    MultiPoly derivative(Var v, int times = 1) const;

    // Terms in presentation order: descending total degree, then descending
    // exponent of z, x, u, y, v. Shared by the human and JSON renderings.
    std::vector<std::pair<ExpVec, Rational>> sorted_terms() const;

    // Human form, e.g. "x*z + z + x + y + 1".
    std::string str() const;

private:
    void add_term(const ExpVec& e, const Rational& c);

    std::map<ExpVec, Rational> terms_;
};

// First difference between two polynomials, for diagnostics; empty when equal.
std::string poly_diff_detail(const MultiPoly& a, const MultiPoly& b);

}  // namespace omact
