#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace monogen {

using Integer = boost::multiprecision::cpp_int;

// Exact arbitrary-precision rational, always kept canonical
// (gcd(|num|, den) = 1, den > 0) by the underlying type.
using Rational = boost::multiprecision::cpp_rational;

/// Renders a rational in the canonical "p/q" form, e.g. "-3/2", "1/1".
inline std::string rational_to_string(const Rational& r) {
    return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses "p/q" (or a bare integer "p"); normalizes to canonical form.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer num(s.substr(0, slash));
        Integer den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

/// n! as an exact integer.
inline Integer factorial(unsigned n) {
    Integer f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace monogen
