#pragma once

#include <boost/rational.hpp>

#include <cstdint>
#include <string>

namespace agreekit {

// Exact vote mass and strength arithmetic. Denominators stay tiny
// (annotation sets have at most 6 labels, items have few annotators),
// so int64 never comes close to overflow; boost::rational keeps
// comparisons exact either way.
using Rational = boost::rational<std::int64_t>;

std::string to_string(const Rational& r);

// Parses "n" or "n/d". Throws ValidationError on malformed input.
Rational parse_rational(const std::string& text);

// Exact conversion of an IEEE double (finite) to a rational.
// Used so CLI-supplied thresholds compare exactly against rational means.
Rational rational_from_double(double value);

double to_double(const Rational& r);

// Nearest integer, ties away from zero.
std::int64_t round_half_away_from_zero(const Rational& r);

// Nearest integer, ties to the even neighbor.
std::int64_t round_half_even(const Rational& r);

}  // namespace agreekit
