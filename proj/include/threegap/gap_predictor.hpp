#pragma once

#include <optional>
#include <string>
#include <vector>

#include "threegap/cf.hpp"

namespace threegap {

// Where N falls relative to the denominator ladder of alpha:
//   semiconvergent_interval: q_{n,i-1} < N <= q_{n,i} for some 2 <= i <= a_n
//   first_interval:          q_{n-1}   < N <= q_{n,1}
//   first_lap:               N <= q_1 (every point lands before <alpha> wraps)
enum class Scenario { semiconvergent_interval, first_interval, first_lap };

const char* scenario_name(Scenario s);

// Neighbors of 0 in the sorted order of <k alpha>, k < N, read off the
// continued fraction: u2 is the index of the point next to 0 on one side,
// uN on the other; exactly two gap lengths occur iff N = u2 + uN (N >= 2).
struct TwoGapPrediction {
    long long n_points = 0;
    Scenario scenario = Scenario::first_lap;
    long n = 0;                 // ladder level (1 for first_lap)
    std::optional<Int> i;       // sub-index, semiconvergent_interval only
    Int u2;
    Int un;
    bool is_two_gap = false;
};

TwoGapPrediction predict_uvals(const CFExpansion& cf, long long n_points);

// All N in [2, n_max] with exactly two gap lengths; these are precisely
// {2..q_1} together with the semiconvergent denominators q_{n,i} <= n_max.
std::vector<long long> two_gap_set_up_to(const CFExpansion& cf, long long n_max);

// Running census of the two-gap N at given checkpoints.
struct FrequencyRow {
    long long n_points = 0;
    long long count = 0;
    Rational ratio;        // count / N
    Rational upper_bound;  // proven ceiling for count / N at this N
};

using FrequencyTrace = std::vector<FrequencyRow>;

// checkpoints must be positive and strictly increasing.
FrequencyTrace frequency_trace(const CFExpansion& cf, const std::vector<long long>& checkpoints);

// Scenario-dependent ceiling on (two-gap count up to N) / N:
//   first_lap:               (N-1)/N
//   first_interval:          (a_1 + ... + a_{n-1}) / N
//   semiconvergent_interval: (a_1 + ... + a_n - 1) / N
Rational frequency_upper_bound(const CFExpansion& cf, long long n_points);

}  // namespace threegap
