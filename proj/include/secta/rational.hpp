#pragma once

// Exact scalars: arbitrary-precision integers and reduced fractions.
// boost::multiprecision keeps cpp_rational in lowest terms with a positive
// denominator, which is exactly the invariant we need.

#include <boost/multiprecision/cpp_int.hpp>

#include <numeric>
#include <string>

#include "secta/error.hpp"

namespace secta {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline std::string to_string(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

inline std::string to_string(const BigInt& n) { return n.str(); }

// Accepts "p" or "p/q" with optional sign on p.
inline Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw InputError("rational '" + s + "' has zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error& e) {
        throw InputError("cannot parse rational '" + s + "'");
    }
}

inline Rational rational_pow(const Rational& base, long e) {
    if (e == 0) return Rational(1);
    if (base == 0 && e < 0) throw InvariantError("0 raised to a negative power");
    Rational b = e > 0 ? base : Rational(1) / base;
    unsigned long k = static_cast<unsigned long>(e > 0 ? e : -e);
    Rational acc(1);
    while (k) {
        if (k & 1) acc *= b;
        b *= b;
        k >>= 1;
    }
    return acc;
}

inline long lcm_long(long a, long b) {
    if (a == 0 || b == 0) return 0;
    long g = std::gcd(a, b);
    return a / g * b;
}

}  // namespace secta
