#pragma once

#include <array>
#include <cstddef>
#include <string>

#include "threegap/cf.hpp"
#include "threegap/numeric.hpp"

namespace threegap {

// Quadratic surd (p + sqrt(d)) / q with integer p, q and d > 0.
// Canonical state for expansion additionally has q | d - p^2; make()
// rescales to enforce that, so the represented value never changes.
struct QuadraticSurd {
    Int p;
    Int d;
    Int q;

    static QuadraticSurd make(const Int& p, const Int& d, const Int& q);

    // -1 / 0 / +1 comparison of the surd value against r (exact; 0 only
    // possible when d is a perfect square).
    int cmp(const Rational& r) const;

    bool in_unit_interval() const;  // 0 < value < 1

    std::string to_string() const;
};

// Eventually periodic expansion of a surd in (0,1).  Throws
// NotIrrationalError when d is a perfect square, RangeError when the value
// is outside (0,1).
CFExpansion expand_surd(const QuadraticSurd& alpha);

// Splits the digit-matrix product for an eventually periodic expansion at
// index n, writing n - r = j*k + l with 0 <= l < k (r preperiod digits,
// period length k):
//
//   M(a_0..a_n) = swap * pre * T^j * partial
//
// where swap = [[0,1],[1,0]] is the a_0 factor, pre the product over the
// preperiod digits a_1..a_r, T the full period block, and partial the
// product over the first l digits of the period.
struct PeriodDecomposition {
    Mat2 pre;      // preperiod product, [[A,B],[K,F]]
    Mat2 period;   // one full period block T
    Mat2 partial;  // first l period digit matrices
    std::size_t preperiod_len = 0;  // r
    std::size_t period_len = 0;     // k
    long j = 0;
    std::size_t l = 0;
};

PeriodDecomposition period_decomposition(const CFExpansion& cf, long n);

// Element x + y*sqrt(delta) of Q(sqrt(delta)) with exact rational x, y.
class QuadFieldElem {
public:
    QuadFieldElem(Rational x, Rational y, Int delta);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    const Int& delta() const { return delta_; }

    bool is_rational() const { return y_ == 0; }

    QuadFieldElem operator+(const QuadFieldElem& o) const;
    QuadFieldElem operator-(const QuadFieldElem& o) const;
    QuadFieldElem operator*(const QuadFieldElem& o) const;
    QuadFieldElem operator-() const;

    // x^2 - y^2 delta (the product with the conjugate).
    Rational norm() const;
    QuadFieldElem conjugate() const;

    // Exact inverse; throws on zero norm.
    QuadFieldElem inverse() const;

    // Integer power, negative exponents via the exact inverse.
    QuadFieldElem pow(long e) const;

    bool operator==(const QuadFieldElem& o) const;

private:
    Rational x_, y_;
    Int delta_;
};

// Eigenvalue data of a period block T = [[a,b],[c,d]]:
//   delta   = (d - a)^2 + 4 b c  (the discriminant of T)
//   lambda1 = ((d + a) + sqrt(delta)) / 2,  lambda2 the conjugate
//   T^j     = lambda1^j P + lambda2^j Q  with P + Q = I, P Q = 0.
struct EigenSplit {
    Int delta;
    QuadFieldElem lambda1;
    QuadFieldElem lambda2;
    std::array<QuadFieldElem, 4> pmat;  // row major
    std::array<QuadFieldElem, 4> qmat;
};

EigenSplit eigen_split(const Mat2& period_block);

// q_{n-1} for an eventually periodic expansion, evaluated from the
// eigenvalue split of the period block rather than the recurrence.
// Requires n >= preperiod length; n below that depends on digits the
// decomposition does not see.
Int q_closed_form(const CFExpansion& cf, long n);

// (a_1 + ... + a_n) / q_{n-1}; tends to 0 along every eventually periodic
// expansion, and almost surely in the metric sense.
Rational digit_sum_over_q(const CFExpansion& cf, long n);

}  // namespace threegap
