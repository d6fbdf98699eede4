#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "threegap/numeric.hpp"

namespace threegap {

// Continued fraction expansions [0; a_1, a_2, ...] of values in [0,1).
// a_0 is always 0 and is implicit; digits a_i are 1-indexed and >= 1.
//
// Three tail shapes are supported:
//   - finite:           exact rational, canonical (last digit >= 2);
//   - truncated prefix: the first digits of some longer expansion, kept
//                       verbatim (a trailing 1 is allowed and meaningful);
//   - eventually periodic: preperiod + repeating block, as produced by
//                       quadratic surds.
class CFExpansion {
public:
    // Canonical finite expansion; a trailing digit 1 is folded into its
    // predecessor ([...,a,1] -> [...,a+1]).  digits may be empty (value 0).
    static CFExpansion finite(std::vector<Int> digits);

    // Finite digit string kept exactly as given (prefix of a longer
    // expansion); must be nonempty.
    static CFExpansion truncated_prefix(std::vector<Int> digits);

    // preperiod digits followed by an infinitely repeating period block;
    // period must be nonempty.
    static CFExpansion periodic(std::vector<Int> preperiod, std::vector<Int> period);

    bool is_periodic() const { return periodic_; }
    bool is_truncated() const { return truncated_; }

    // Finite/truncated: all digits.  Periodic: the preperiod only.
    const std::vector<Int>& preperiod() const { return pre_; }
    const std::vector<Int>& period() const { return period_; }
    std::size_t preperiod_length() const { return pre_.size(); }
    std::size_t period_length() const { return period_.size(); }

    bool has_digit(std::size_t i) const;  // i >= 1
    const Int& digit(std::size_t i) const;

    // Number of digits of a finite or truncated expansion.
    std::size_t digit_count() const;

    // Exact value of a finite or truncated expansion.
    Rational evaluate() const;

    // "[0]", "[0;3,2,3]", "[0;3,period(1,2)]" -- round-trips through the
    // alpha grammar.
    std::string to_string() const;

    bool operator==(const CFExpansion& o) const {
        return periodic_ == o.periodic_ && pre_ == o.pre_ && period_ == o.period_;
    }

private:
    CFExpansion() = default;

    bool periodic_ = false;
    bool truncated_ = false;
    std::vector<Int> pre_;
    std::vector<Int> period_;
};

// Convergent p_n / q_n; sub_index is set when this is the semiconvergent
// p_{n,i} / q_{n,i} = (i p_{n-1} + p_{n-2}) / (i q_{n-1} + q_{n-2}).
struct Convergent {
    long n = 0;
    Int p;
    Int q;
    std::optional<Int> sub_index;
};

// 2x2 integer matrix, row major.
struct Mat2 {
    Int m11, m12, m21, m22;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    Int det() const { return m11 * m22 - m12 * m21; }

    Mat2 operator*(const Mat2& o) const {
        return {m11 * o.m11 + m12 * o.m21, m11 * o.m12 + m12 * o.m22,
                m21 * o.m11 + m22 * o.m21, m21 * o.m12 + m22 * o.m22};
    }
    bool operator==(const Mat2& o) const {
        return m11 == o.m11 && m12 == o.m12 && m21 == o.m21 && m22 == o.m22;
    }
};

// Lazy table of convergents under the standard recurrence
//   p_n = a_n p_{n-1} + p_{n-2},  q_n = a_n q_{n-1} + q_{n-2}
// with seeds p_-2/q_-2 = 0/1, p_-1/q_-1 = 1/0 and p_0/q_0 = 0/1.
class ConvergentTable {
public:
    explicit ConvergentTable(CFExpansion cf);

    // Whether index n is available (always true for periodic expansions).
    bool has(long n) const;
    const Int& p(long n);
    const Int& q(long n);
    Convergent at(long n);

    const CFExpansion& cf() const { return cf_; }

private:
    void ensure(long n);

    CFExpansion cf_;
    std::vector<Int> p_, q_;  // index n stored at n + 2
};

// Expansion of num/den in [0,1) by the Euclidean algorithm; canonical form.
CFExpansion cf_from_rational(const Int& num, const Int& den);

// Convergents p_0/q_0 .. p_n/q_n.
std::vector<Convergent> convergents(const CFExpansion& cf, long up_to);

// Semiconvergent at (n, i) with n >= 1 and 1 <= i <= a_n; i == a_n gives
// the full convergent p_n/q_n.
Convergent semiconvergent(const CFExpansion& cf, long n, const Int& i);

// Product of digit matrices [[a_j,1],[1,0]] for j = 0..n+1, equal to
// [[p_{n+1}, p_n],[q_{n+1}, q_n]] with det = (-1)^n.  n >= -2; n == -2 is
// the empty product (identity).
Mat2 matrix_form(const CFExpansion& cf, long n);

}  // namespace threegap
