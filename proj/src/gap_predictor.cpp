#include "threegap/gap_predictor.hpp"

#include <algorithm>

#include "threegap/error.hpp"

namespace threegap {

const char* scenario_name(Scenario s) {
    switch (s) {
        case Scenario::semiconvergent_interval: return "semiconvergent_interval";
        case Scenario::first_interval: return "first_interval";
        case Scenario::first_lap: return "first_lap";
    }
    return "?";
}

namespace {

struct ScenarioLocation {
    Scenario scenario;
    long n;            // 1 for first_lap
    std::optional<Int> i;
};

// Finds the ladder position of N: either N <= q_1, or the minimal n >= 2
// with q_{n-1} < N <= q_n, refined by the semiconvergent split.  Walks the
// convergent table, so a finite expansion that ends below N throws.
ScenarioLocation locate(ConvergentTable& table, long long n_points) {
    if (n_points < 1) throw InvalidInputError("point count must be >= 1");
    Int N = int_from(n_points);

    if (N <= table.q(1)) return {Scenario::first_lap, 1, std::nullopt};

    long n = 2;
    while (table.q(n) < N) ++n;  // digit read throws when exhausted

    if (N <= table.q(n - 1) + table.q(n - 2)) {
        return {Scenario::first_interval, n, std::nullopt};
    }
    // q_{n,i-1} < N <= q_{n,i} with i = ceil((N - q_{n-2}) / q_{n-1})
    Int i = ceil_div(N - table.q(n - 2), table.q(n - 1));
    return {Scenario::semiconvergent_interval, n, std::move(i)};
}

}  // namespace

TwoGapPrediction predict_uvals(const CFExpansion& cf, long long n_points) {
    ConvergentTable table(cf);
    ScenarioLocation loc = locate(table, n_points);

    TwoGapPrediction out;
    out.n_points = n_points;
    out.scenario = loc.scenario;
    out.n = loc.n;
    out.i = loc.i;

    switch (loc.scenario) {
        case Scenario::first_lap:
            // points <alpha>, <2 alpha>, ... are still in their first lap
            // and appear in index order: u_j = j - 1
            out.u2 = 1;
            out.un = int_from(n_points - 1);
            break;
        case Scenario::first_interval: {
            const Int& a = table.q(loc.n - 1);
            const Int& b = table.q(loc.n - 2);
            bool odd = loc.n % 2 != 0;
            out.u2 = odd ? a : b;
            out.un = odd ? b : a;
            break;
        }
        case Scenario::semiconvergent_interval: {
            Int semi = (*loc.i - 1) * table.q(loc.n - 1) + table.q(loc.n - 2);
            bool odd = loc.n % 2 != 0;
            out.u2 = odd ? table.q(loc.n - 1) : semi;
            out.un = odd ? semi : table.q(loc.n - 1);
            break;
        }
    }
    out.is_two_gap = n_points >= 2 && out.u2 + out.un == int_from(n_points);
    return out;
}

std::vector<long long> two_gap_set_up_to(const CFExpansion& cf, long long n_max) {
    if (n_max < 2) throw InvalidInputError("two-gap census needs n_max >= 2");
    ConvergentTable table(cf);
    std::vector<long long> out;

    // first lap: every N in [2, q_1] has gaps {alpha, 1 - (N-1) alpha}
    Int q1 = table.q(1);
    for (long long v = 2; int_from(v) <= q1 && v <= n_max; ++v) out.push_back(v);

    // semiconvergent denominators q_{n,i} = i q_{n-1} + q_{n-2}, n >= 2
    for (long n = 2;; ++n) {
        Int lo = table.q(n - 1) + table.q(n - 2);  // q_{n,1}
        if (lo > int_from(n_max)) break;
        Int cap = floor_div(int_from(n_max) - table.q(n - 2), table.q(n - 1));
        const Int& an = cf.digit(static_cast<std::size_t>(n));
        Int top = std::min(an, cap);
        for (Int i = 1; i <= top; ++i) {
            Int v = i * table.q(n - 1) + table.q(n - 2);
            out.push_back(v.get_si());
        }
    }
    return out;
}

Rational frequency_upper_bound(const CFExpansion& cf, long long n_points) {
    if (n_points < 1) throw InvalidInputError("point count must be >= 1");
    if (n_points == 1) return Rational(0);
    ConvergentTable table(cf);
    ScenarioLocation loc = locate(table, n_points);

    auto digit_sum = [&](long hi) {
        Int s = 0;
        for (long t = 1; t <= hi; ++t) s += cf.digit(static_cast<std::size_t>(t));
        return s;
    };

    switch (loc.scenario) {
        case Scenario::first_lap:
            return make_rational(int_from(n_points - 1), int_from(n_points));
        case Scenario::first_interval:
            return make_rational(digit_sum(loc.n - 1), int_from(n_points));
        case Scenario::semiconvergent_interval:
        default:
            return make_rational(digit_sum(loc.n) - 1, int_from(n_points));
    }
}

FrequencyTrace frequency_trace(const CFExpansion& cf, const std::vector<long long>& checkpoints) {
    if (checkpoints.empty()) throw InvalidInputError("no checkpoints given");
    for (std::size_t i = 0; i < checkpoints.size(); ++i) {
        if (checkpoints[i] < 1) throw InvalidInputError("checkpoints must be >= 1");
        if (i > 0 && checkpoints[i] <= checkpoints[i - 1]) {
            throw InvalidInputError("checkpoints must be strictly increasing");
        }
    }

    long long n_max = checkpoints.back();
    std::vector<long long> events =
        n_max >= 2 ? two_gap_set_up_to(cf, n_max) : std::vector<long long>{};

    FrequencyTrace trace;
    trace.reserve(checkpoints.size());
    for (long long n : checkpoints) {
        auto it = std::upper_bound(events.begin(), events.end(), n);
        long long count = static_cast<long long>(it - events.begin());
        FrequencyRow row;
        row.n_points = n;
        row.count = count;
        row.ratio = make_rational(int_from(count), int_from(n));
        row.upper_bound = frequency_upper_bound(cf, n);
        trace.push_back(std::move(row));
    }
    return trace;
}

}  // namespace threegap
