#include "threegap/gap_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "threegap/error.hpp"
#include "threegap/format.hpp"

namespace threegap {

AlphaSource AlphaSource::from_rational(const Int& num, const Int& den) {
    Rational v = make_rational(num, den);
    if (v <= 0 || v >= 1) throw RangeError("alpha " + rational_string(v) + " outside (0,1)");
    AlphaSource src;
    src.cf_ = cf_from_rational(v.get_num(), v.get_den());
    src.value_ = std::move(v);
    return src;
}

AlphaSource AlphaSource::from_surd(const QuadraticSurd& s) {
    AlphaSource src;
    src.cf_ = expand_surd(s);  // validates irrationality and (0,1)
    src.surd_ = s;
    return src;
}

AlphaSource AlphaSource::from_cf(CFExpansion cf) {
    AlphaSource src;
    if (!cf.is_periodic()) {
        Rational v = cf.evaluate();
        if (v <= 0 || v >= 1) {
            throw RangeError("expansion value " + rational_string(v) + " outside (0,1)");
        }
        src.value_ = std::move(v);
    }
    src.cf_ = std::move(cf);
    return src;
}

const Rational& AlphaSource::rational_value() const {
    if (!value_) throw RequiresPeriodicError("irrational source has no rational value");
    return *value_;
}

std::string AlphaSource::describe() const {
    if (surd_) return surd_->to_string();
    if (value_ && !cf_.is_truncated()) return rational_string(*value_);
    return cf_.to_string();
}

Surrogate surrogate_convergent(const AlphaSource& source, long long n_points, int index_bump) {
    if (n_points < 1) throw InvalidInputError("point count must be >= 1");
    if (index_bump < 0) throw InvalidInputError("negative surrogate index bump");

    const Int target = Int(4) * int_from(n_points);
    ConvergentTable table(source.cf());

    if (source.is_exact_rational()) {
        const Int& den = source.rational_value().get_den();
        if (int_from(n_points) >= den) {
            throw DegenerateRationalError(
                "alpha = " + rational_string(source.rational_value()) + " with N = " +
                std::to_string(n_points) + " >= denominator; points <k alpha> collide");
        }
    }

    long m = 0;
    while (true) {
        if (!table.has(m)) {
            // finite expansion exhausted: the last convergent is alpha itself
            Surrogate s{table.at(m - 1), true};
            return s;
        }
        if (table.q(m) > target) break;
        ++m;
    }
    long final_index = m + index_bump;
    while (final_index > m && !table.has(final_index)) --final_index;
    bool exact = !source.cf().is_periodic() &&
                 final_index == static_cast<long>(source.cf().digit_count());
    return Surrogate{table.at(final_index), exact};
}

namespace {

// sorted residues k * p mod q for k = 0..N-1, tagged with k
std::vector<std::pair<Int, long long>> sorted_points(const Surrogate& s, long long n_points) {
    std::vector<std::pair<Int, long long>> pts;
    pts.reserve(static_cast<std::size_t>(n_points));
    Int step = s.approx.p % s.approx.q;
    Int cur = 0;
    for (long long k = 0; k < n_points; ++k) {
        pts.emplace_back(cur, k);
        cur += step;
        if (cur >= s.approx.q) cur -= s.approx.q;
    }
    std::sort(pts.begin(), pts.end());
    return pts;
}

}  // namespace

GapReport gap_report(const AlphaSource& source, long long n_points, int index_bump) {
    Surrogate s = surrogate_convergent(source, n_points, index_bump);
    auto pts = sorted_points(s, n_points);

    // circular gaps over the common denominator q
    std::map<Int, long long> histogram;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        histogram[pts[i].first - pts[i - 1].first] += 1;
    }
    histogram[s.approx.q - pts.back().first + pts.front().first] += 1;

    if (histogram.size() > 3) {
        throw std::logic_error("more than three distinct gaps; surrogate too coarse");
    }

    GapReport report;
    report.n_points = n_points;
    report.surrogate = std::move(s);
    for (auto& [num, count] : histogram) {
        report.gaps.push_back(make_rational(num, report.surrogate.approx.q));
        report.multiplicities.push_back(count);
    }
    return report;
}

UPermutation u_permutation(const AlphaSource& source, long long n_points, int index_bump) {
    Surrogate s = surrogate_convergent(source, n_points, index_bump);
    auto pts = sorted_points(s, n_points);
    UPermutation perm;
    perm.n_points = n_points;
    perm.u.reserve(pts.size());
    for (auto& [value, k] : pts) perm.u.push_back(k);
    return perm;
}

}  // namespace threegap
