#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace torbar {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational scalar. All arithmetic in the engine happens here;
/// there is no floating point anywhere.
using Rational = boost::multiprecision::cpp_rational;

/// Renders "p" for integers and "p/q" otherwise.
std::string rational_str(const Rational& q);

/// Parses an integer or "p/q" literal. Throws std::invalid_argument on
/// malformed input or zero denominator.
Rational parse_rational(const std::string& text);

}  // namespace torbar
