#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "diffsys/error.hpp"

namespace diffsys {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int num(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rational& q) { return boost::multiprecision::denominator(q); }

inline Int intGcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }
inline Int intLcm(Int a, Int b) {
    if (a == 0 || b == 0) return 0;
    return boost::multiprecision::lcm(a, b);
}

inline Int intAbs(const Int& a) { return a < 0 ? Int(-a) : a; }
inline Rational ratAbs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

/// Largest integer <= q.
inline Int ratFloor(const Rational& q) {
    Int n = num(q), d = den(q);
    Int t = n / d;
    if (n < 0 && t * d != n) --t;
    return t;
}

/// q^e for integer e; e < 0 requires q != 0.
inline Rational ratPow(const Rational& q, long e) {
    if (e == 0) return Rational(1);
    if (q == 0 && e < 0) throw Error("zero base with negative exponent");
    Rational base = e < 0 ? Rational(1) / q : q;
    unsigned long k = e < 0 ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

/// Canonical text form "p/q", or "p" when q == 1.
inline std::string renderRational(const Rational& q) {
    std::string s = num(q).str();
    if (den(q) != 1) s += "/" + den(q).str();
    return s;
}

/// Parses "p", "-p", or "p/q". Returns nullopt on malformed input.
std::optional<Rational> parseRational(const std::string& text);

inline double toDouble(const Rational& q) {
    return static_cast<double>(q);
}

} // namespace diffsys
