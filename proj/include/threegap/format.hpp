#pragma once

#include <string>

#include "threegap/numeric.hpp"

namespace threegap {

// Canonical "p/q" form (always with the denominator, "0/1" included).
std::string rational_string(const Rational& r);

// Fixed-point decimal with exactly `digits` fractional places, rounded
// half-to-even.  digits == 0 yields just the integer part.
std::string decimal_string(const Rational& r, int digits);

// Fixed-point rendering of a double via the same digit count.
std::string decimal_string(double x, int digits);

}  // namespace threegap
