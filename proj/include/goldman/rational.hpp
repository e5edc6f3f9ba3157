#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace goldman {

// Exact coefficient ring. The projections onto the even/odd parts divide
// by 2, so plain integers are not enough.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

// Parses "p", "-p", "p/q".
Rational parse_rational(const std::string& text);

}  // namespace goldman
