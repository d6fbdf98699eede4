#pragma once

#include <gmpxx.h>

#include <string>

namespace threegap {

// Arbitrary precision integers and rationals.  Everything observable is
// exact; doubles appear only in Monte Carlo summary statistics.
using Int = mpz_class;
using Rational = mpq_class;

// num/den reduced to lowest terms with den > 0.  Throws on den == 0.
Rational make_rational(const Int& num, const Int& den);

// Int from a 64-bit count; mpz_class lacks a long long constructor.
inline Int int_from(long long v) { return Int(static_cast<long>(v)); }

// floor(sqrt(n)) for n >= 0.
Int isqrt(const Int& n);

bool is_perfect_square(const Int& n);

// floor and ceiling division with sign-correct behavior for any b != 0.
Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);

// Compares sqrt(d) with the integer x (d >= 0, d not a perfect square, so
// equality cannot occur): -1 if sqrt(d) < x, +1 if sqrt(d) > x.
int cmp_sqrt(const Int& d, const Int& x);

// floor((p + sqrt(d)) / q) computed exactly; d > 0 and not a perfect
// square, q != 0.
Int floor_surd(const Int& p, const Int& d, const Int& q);

}  // namespace threegap
