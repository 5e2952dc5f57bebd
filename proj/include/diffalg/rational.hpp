#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace diffalg {

/// Exact rational coefficients, always kept in lowest terms with a positive
/// denominator. The algebra code only touches coefficients through this
/// alias and the helpers below, so another exact field could be substituted
/// behind it.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

inline std::string to_string(const Rational& r) { return r.str(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace diffalg
