#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threegap/cf.hpp"
#include "threegap/quadratic.hpp"

namespace threegap {

// A number alpha in (0,1) described by its continued fraction, with the
// exact rational value kept alongside whenever the expansion is finite.
class AlphaSource {
public:
    static AlphaSource from_rational(const Int& num, const Int& den);
    static AlphaSource from_surd(const QuadraticSurd& s);
    static AlphaSource from_cf(CFExpansion cf);

    const CFExpansion& cf() const { return cf_; }

    bool is_exact_rational() const { return value_.has_value(); }
    const Rational& rational_value() const;

    std::string describe() const;

private:
    AlphaSource() = default;

    CFExpansion cf_ = CFExpansion::finite({});
    std::optional<Rational> value_;
    std::optional<QuadraticSurd> surd_;
};

// Rational stand-in for alpha used to compute gap structure exactly.
// For N points the convergent p_m/q_m with q_m > 4N reproduces every order
// and equality relation among the points and gaps of the true alpha (the
// provable requirement is q_m > 2N; the factor 4 is safety margin).
// is_exact marks a finite expansion that ran out of convergents, in which
// case the stand-in is alpha itself.
struct Surrogate {
    Convergent approx;
    bool is_exact = false;
};

// index_bump widens the precision by taking the convergent `bump` places
// beyond the first admissible one (used for stability checks).
Surrogate surrogate_convergent(const AlphaSource& source, long long n_points, int index_bump = 0);

// Gap structure of {<k alpha> : 0 <= k < N}: the distinct circular gap
// lengths in increasing order with their multiplicities.
struct GapReport {
    long long n_points = 0;
    Surrogate surrogate;
    std::vector<Rational> gaps;           // strictly increasing, at most 3
    std::vector<long long> multiplicities;  // same length, sums to N
};

GapReport gap_report(const AlphaSource& source, long long n_points, int index_bump = 0);

// Indices 0 <= u_j < N sorted by <u alpha>: u[0] = 0 always, u[1] and
// u[N-1] are the neighbors of 0 on the circle.
struct UPermutation {
    long long n_points = 0;
    std::vector<long long> u;
};

UPermutation u_permutation(const AlphaSource& source, long long n_points, int index_bump = 0);

}  // namespace threegap
