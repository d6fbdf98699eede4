#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "threegap/cf.hpp"

namespace threegap {

// Deterministic sampling plan: `count` values X/2^precision_bits with X
// drawn uniformly, each expanded to its first max_index CF digits.
// Each sample uses its own engine seeded from (seed, sample index), so
// sample i is identical regardless of count.
struct SampleSpec {
    std::uint64_t seed = 0;
    std::size_t count = 0;
    unsigned precision_bits = 128;
    unsigned max_index = 25;
};

struct SampleBatch {
    std::vector<CFExpansion> samples;  // truncated prefixes, max_index digits each
    std::size_t redraws = 0;           // draws rejected by the guards below
};

// Rejects (and redraws) any X whose expansion is shorter than max_index
// digits or whose q_max_index reaches 2^(precision_bits/2); the surviving
// prefixes are then guaranteed to be the true prefixes of expansions of
// numbers within 2^-(precision_bits) of X.  Throws
// InsufficientPrecisionError when the guard is unsatisfiable.
SampleBatch sample_alpha(const SampleSpec& spec);

// ln(q_n) / n, the finite-n Levy statistic.
double levy_statistic(const CFExpansion& cf, long n);

// pi^2 / (12 ln 2), the almost-sure limit of ln(q_n)/n.
double levy_reference();

// Mean/sd summary over a sample batch; samples whose expansion is too
// short for the statistic are counted in `skipped`.
struct MetricReport {
    std::size_t used = 0;
    std::size_t skipped = 0;
    double mean = 0.0;
    double stddev = 0.0;
    std::vector<double> values;  // one per used sample, batch order
};

// Fraction of samples with at least one digit a_n >= n^2 for n in
// [n_lo, n_hi]; values are 0/1 hits.  The tail sum 1/n^2 converges, so
// this fraction stays bounded away from 1 as the window grows.
MetricReport large_digit_census(const std::vector<CFExpansion>& samples, long n_lo, long n_hi);

// Digit-sum ratios (a_1+...+a_n)/q_{n-1} per sample, as doubles.
MetricReport digit_sum_report(const std::vector<CFExpansion>& samples, long n);

// Fraction of samples whose first digit equals k; the invariant-measure
// value is 1/(k(k+1)).
double first_digit_fraction(const std::vector<CFExpansion>& samples, const Int& k);

}  // namespace threegap
