#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace pivotlab {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational scalar. Always normalized: lowest terms, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
// input or a zero denominator.
Rational parse_rational(const std::string& text);

// Lowest-terms "p/q" with the denominator always spelled out ("5" -> "5/1").
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace pivotlab
