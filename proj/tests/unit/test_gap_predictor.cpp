#include <doctest.h>

#include <algorithm>

#include <support/corpus.hpp>

#include "threegap/error.hpp"
#include "threegap/gap_oracle.hpp"
#include "threegap/gap_predictor.hpp"

using namespace threegap;

namespace {

const CFExpansion kGolden = CFExpansion::periodic({}, {1});
const CFExpansion kSqrt2m1 = CFExpansion::periodic({}, {2});
const CFExpansion kSqrt3m1 = CFExpansion::periodic({}, {1, 2});
const CFExpansion kSqrt5m2 = CFExpansion::periodic({}, {4});

}  // namespace

TEST_CASE("predicted neighbors match hand-worked ladder positions") {
    TwoGapPrediction g2 = predict_uvals(kGolden, 2);
    CHECK(g2.scenario == Scenario::first_interval);
    CHECK(g2.n == 2);
    CHECK(g2.u2 == 1);
    CHECK(g2.un == 1);
    CHECK(g2.is_two_gap);

    TwoGapPrediction g3 = predict_uvals(kGolden, 3);
    CHECK(g3.scenario == Scenario::first_interval);
    CHECK(g3.n == 3);
    CHECK(g3.u2 == 2);
    CHECK(g3.un == 1);
    CHECK(g3.is_two_gap);

    TwoGapPrediction g4 = predict_uvals(kGolden, 4);
    CHECK(g4.scenario == Scenario::first_interval);
    CHECK(g4.n == 4);
    CHECK_FALSE(g4.i.has_value());
    CHECK(g4.u2 == 2);
    CHECK(g4.un == 3);
    CHECK_FALSE(g4.is_two_gap);

    TwoGapPrediction s4 = predict_uvals(kSqrt2m1, 4);
    CHECK(s4.scenario == Scenario::semiconvergent_interval);
    CHECK(s4.n == 2);
    CHECK(s4.i == Int(2));
    CHECK(s4.u2 == 3);
    CHECK(s4.un == 2);
    CHECK_FALSE(s4.is_two_gap);

    TwoGapPrediction t4 = predict_uvals(kSqrt3m1, 4);
    CHECK(t4.scenario == Scenario::first_interval);
    CHECK(t4.n == 3);
    CHECK(t4.u2 == 3);
    CHECK(t4.un == 1);
    CHECK(t4.is_two_gap);

    TwoGapPrediction f3 = predict_uvals(kSqrt5m2, 3);
    CHECK(f3.scenario == Scenario::first_lap);
    CHECK(f3.u2 == 1);
    CHECK(f3.un == 2);
    CHECK(f3.is_two_gap);

    // N = 1: the single point has no neighbors; never two-gap
    TwoGapPrediction one = predict_uvals(kGolden, 1);
    CHECK(one.scenario == Scenario::first_lap);
    CHECK_FALSE(one.is_two_gap);

    CHECK_THROWS_AS(predict_uvals(kGolden, 0), InvalidInputError);
    CHECK_THROWS_AS(predict_uvals(CFExpansion::truncated_prefix({2, 2}), 6),
                    ExhaustedExpansionError);
}

TEST_CASE("two-gap sets match brute-force enumeration") {
    CHECK(two_gap_set_up_to(kGolden, 13) == std::vector<long long>{2, 3, 5, 8, 13});
    CHECK(two_gap_set_up_to(kSqrt2m1, 30) == std::vector<long long>{2, 3, 5, 7, 12, 17, 29});
    CHECK(two_gap_set_up_to(kSqrt3m1, 30) == std::vector<long long>{2, 3, 4, 7, 11, 15, 26});
    CHECK_THROWS_AS(two_gap_set_up_to(kGolden, 1), InvalidInputError);

    // membership agrees with the per-N prediction
    for (auto& entry : corpus::periodic_entries()) {
        const CFExpansion& cf = entry.source.cf();
        auto set = two_gap_set_up_to(cf, 120);
        CHECK(std::is_sorted(set.begin(), set.end()));
        for (long long n = 2; n <= 120; ++n) {
            bool in_set = std::binary_search(set.begin(), set.end(), n);
            CHECK(predict_uvals(cf, n).is_two_gap == in_set);
        }
    }
}

TEST_CASE("frequency bounds cover the observed ratios") {
    CHECK(frequency_upper_bound(kGolden, 100) == make_rational(1, 10));
    CHECK(frequency_upper_bound(kSqrt2m1, 5) == make_rational(3, 5));
    CHECK(frequency_upper_bound(kSqrt5m2, 3) == make_rational(2, 3));
    CHECK(frequency_upper_bound(kGolden, 1) == 0);

    FrequencyTrace trace = frequency_trace(kGolden, {100, 1000, 10000});
    REQUIRE(trace.size() == 3);
    CHECK(trace[0].count == 9);
    CHECK(trace[0].ratio == make_rational(9, 100));
    CHECK(trace[1].count == 14);
    CHECK(trace[2].count == 18);
    CHECK(trace[2].ratio == make_rational(18, 10000));
    for (const FrequencyRow& row : trace) CHECK(row.ratio <= row.upper_bound);

    // the sqrt 2 - 1 bound is tight at N = 5: events {2,3,5}
    FrequencyTrace tight = frequency_trace(kSqrt2m1, {5});
    CHECK(tight[0].count == 3);
    CHECK(tight[0].ratio == tight[0].upper_bound);

    CHECK_THROWS_AS(frequency_trace(kGolden, {}), InvalidInputError);
    CHECK_THROWS_AS(frequency_trace(kGolden, {10, 10}), InvalidInputError);
    CHECK_THROWS_AS(frequency_trace(kGolden, {0, 10}), InvalidInputError);
}

TEST_CASE("prediction agrees with the exact oracle on mixed entries") {
    for (auto& entry : corpus::periodic_entries()) {
        const CFExpansion& cf = entry.source.cf();
        for (long long n : {2, 3, 5, 9, 17, 33, 65}) {
            TwoGapPrediction pred = predict_uvals(cf, n);
            UPermutation perm = u_permutation(entry.source, n);
            GapReport rep = gap_report(entry.source, n);
            CHECK(pred.u2 == int_from(perm.u[1]));
            CHECK(pred.un == int_from(perm.u[static_cast<std::size_t>(n) - 1]));
            CHECK(pred.is_two_gap == (rep.gaps.size() == 2));
        }
    }
}
