#pragma once

// Exact rational numbers on 64-bit numerator/denominator with overflow
// checking through 128-bit intermediates. Enough headroom for every
// desk-scale enumeration this library performs.

#include <cstdint>
#include <string>

#include "omact/errors.hpp"

namespace omact {

class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n) {}  // NOLINT: implicit on purpose
    Rational(long long n, long long d);

    long long numerator() const { return num_; }
    long long denominator() const { return den_; }
    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    bool operator==(const Rational& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const;

    Rational pow(int e) const;  // e >= 0

    // "p" when integral, "p/q" otherwise.
    std::string str() const;

private:
    static Rational from_wide(__int128 n, __int128 d);

    long long num_ = 0;
    long long den_ = 1;
};

// Parses "p" or "p/q" (optionally signed). Throws ParseError.
Rational rational_from_string(const std::string& s);

}  // namespace omact
