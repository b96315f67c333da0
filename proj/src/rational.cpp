#include "omact/rational.hpp"

#include <charconv>
#include <limits>

namespace omact {

namespace {

__int128 abs128(__int128 v) { return v < 0 ? -v : v; }

__int128 gcd128(__int128 a, __int128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        __int128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

long long narrow(__int128 v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw OverflowError("rational arithmetic overflowed 64 bits");
    return static_cast<long long>(v);
}

}  // namespace

Rational Rational::from_wide(__int128 n, __int128 d) {
    if (d == 0) throw OverflowError("division by zero in rational arithmetic");
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) return Rational();
    const __int128 g = gcd128(n, d);
    Rational r;
    r.num_ = narrow(n / g);
    r.den_ = narrow(d / g);
    return r;
}

Rational::Rational(long long n, long long d) {
    *this = from_wide(static_cast<__int128>(n), static_cast<__int128>(d));
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator-=(const Rational& o) { return *this += -o; }

Rational& Rational::operator*=(const Rational& o) {
    *this = from_wide(static_cast<__int128>(num_) * o.num_,
                      static_cast<__int128>(den_) * o.den_);
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw OverflowError("division by zero rational");
    *this = from_wide(static_cast<__int128>(num_) * o.den_,
                      static_cast<__int128>(den_) * o.num_);
    return *this;
}

bool Rational::operator<(const Rational& o) const {
    return static_cast<__int128>(num_) * o.den_ < static_cast<__int128>(o.num_) * den_;
}

Rational Rational::pow(int e) const {
    Rational out = 1;
    for (int i = 0; i < e; ++i) out *= *this;
    return out;
}

std::string Rational::str() const {
    std::string s = std::to_string(num_);
    if (den_ != 1) s += "/" + std::to_string(den_);
    return s;
}

Rational rational_from_string(const std::string& s) {
    const char* begin = s.data();
    const char* end = s.data() + s.size();
    long long num = 0;
    auto [p, ec] = std::from_chars(begin, end, num);
    if (ec != std::errc()) throw ParseError("bad rational '" + s + "'");
    long long den = 1;
    if (p != end) {
        if (*p != '/') throw ParseError("bad rational '" + s + "'");
        auto [p2, ec2] = std::from_chars(p + 1, end, den);
        if (ec2 != std::errc() || p2 != end) throw ParseError("bad rational '" + s + "'");
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
    }
    return Rational(num, den);
}

}  // namespace omact
