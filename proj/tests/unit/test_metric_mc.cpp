#include <doctest.h>

#include <cmath>
#include <vector>

#include "threegap/error.hpp"
#include "threegap/metric_mc.hpp"

using namespace threegap;

namespace {

CFExpansion prefix(std::initializer_list<long> digits) {
    return CFExpansion::truncated_prefix(std::vector<Int>(digits.begin(), digits.end()));
}

}  // namespace

TEST_CASE("sampling is deterministic and index-stable") {
    SampleSpec spec{42, 8, 128, 25};
    SampleBatch a = sample_alpha(spec);
    SampleBatch b = sample_alpha(spec);
    REQUIRE(a.samples.size() == 8);
    CHECK(a.redraws == b.redraws);
    for (std::size_t i = 0; i < 8; ++i) CHECK(a.samples[i] == b.samples[i]);

    // sample i does not depend on how many samples follow it
    SampleSpec shorter{42, 3, 128, 25};
    SampleBatch c = sample_alpha(shorter);
    for (std::size_t i = 0; i < 3; ++i) CHECK(c.samples[i] == a.samples[i]);

    // a different seed moves every expansion with overwhelming probability
    SampleSpec other{43, 8, 128, 25};
    SampleBatch d = sample_alpha(other);
    bool any_diff = false;
    for (std::size_t i = 0; i < 8; ++i) any_diff = any_diff || !(d.samples[i] == a.samples[i]);
    CHECK(any_diff);
}

TEST_CASE("samples honor the depth and truncation guard") {
    SampleSpec spec{7, 20, 96, 18};
    SampleBatch batch = sample_alpha(spec);
    Int q_limit = Int(1) << (96 / 2);
    for (const CFExpansion& cf : batch.samples) {
        REQUIRE(cf.digit_count() == 18);
        CHECK(cf.is_truncated());
        ConvergentTable table(cf);
        CHECK(table.q(18) < q_limit);
        for (std::size_t i = 1; i <= 18; ++i) CHECK(cf.digit(i) >= 1);
    }
}

TEST_CASE("unsatisfiable truncation guards are rejected up front") {
    CHECK_THROWS_AS(sample_alpha(SampleSpec{42, 10, 10, 30}), InsufficientPrecisionError);
    CHECK_THROWS_AS(sample_alpha(SampleSpec{42, 0, 128, 25}), InvalidInputError);
    CHECK_THROWS_AS(sample_alpha(SampleSpec{42, 10, 128, 0}), InvalidInputError);
    CHECK_THROWS_AS(sample_alpha(SampleSpec{42, 10, 1, 1}), InvalidInputError);
}

TEST_CASE("levy statistic matches the Fibonacci growth rate") {
    CFExpansion golden = CFExpansion::periodic({}, {1});
    // q_200 = F_201 ~ phi^201 / sqrt 5
    double expected = (201.0 * std::log((1.0 + std::sqrt(5.0)) / 2.0) - 0.5 * std::log(5.0)) / 200.0;
    CHECK(levy_statistic(golden, 200) == doctest::Approx(expected).epsilon(1e-9));
    CHECK(levy_reference() == doctest::Approx(1.1865691104).epsilon(1e-9));
    CHECK_THROWS_AS(levy_statistic(golden, 0), InvalidInputError);

    SampleBatch batch = sample_alpha(SampleSpec{42, 60, 128, 25});
    double sum = 0.0;
    for (const CFExpansion& cf : batch.samples) sum += levy_statistic(cf, 25);
    double mean = sum / 60.0;
    CHECK(std::abs(mean - levy_reference()) / levy_reference() < 0.2);
}

TEST_CASE("large digit census flags a_n >= n^2 inside the window") {
    std::vector<CFExpansion> samples;
    samples.push_back(prefix({1, 1, 9, 1}));   // a_3 = 9 = 3^2: hit for any window with 3
    samples.push_back(prefix({5, 3, 8, 2}));   // no digit reaches its square
    samples.push_back(prefix({1, 4, 1, 1}));   // a_2 = 4 = 2^2
    samples.push_back(prefix({1, 1}));         // too short for n_hi = 4

    MetricReport rep = large_digit_census(samples, 2, 4);
    CHECK(rep.used == 3);
    CHECK(rep.skipped == 1);
    CHECK(rep.values == std::vector<double>{1.0, 0.0, 1.0});
    CHECK(rep.mean == doctest::Approx(2.0 / 3.0));

    MetricReport narrow = large_digit_census(samples, 4, 4);
    CHECK(narrow.values == std::vector<double>{0.0, 0.0, 0.0});

    CHECK_THROWS_AS(large_digit_census(samples, 0, 4), InvalidInputError);
    CHECK_THROWS_AS(large_digit_census(samples, 3, 2), InvalidInputError);
}

TEST_CASE("digit sum report divides by the previous denominator") {
    std::vector<CFExpansion> samples;
    samples.push_back(prefix({1, 1, 1, 1, 1, 1, 1, 1, 1, 1}));
    samples.push_back(prefix({2, 2, 2}));

    MetricReport rep = digit_sum_report(samples, 10);
    CHECK(rep.used == 1);
    CHECK(rep.skipped == 1);
    CHECK(rep.values[0] == doctest::Approx(10.0 / 55.0));  // q_9 = 55 for all-ones

    MetricReport shallow = digit_sum_report(samples, 3);
    CHECK(shallow.used == 2);
    CHECK(shallow.values[1] == doctest::Approx(6.0 / 5.0));  // (2+2+2)/q_2, q_2 = 5

    CHECK_THROWS_AS(digit_sum_report(samples, 0), InvalidInputError);
}

TEST_CASE("first digit fraction counts exact matches") {
    std::vector<CFExpansion> samples;
    samples.push_back(prefix({1, 5}));
    samples.push_back(prefix({2, 7}));
    samples.push_back(prefix({1, 9}));

    CHECK(first_digit_fraction(samples, 1) == doctest::Approx(2.0 / 3.0));
    CHECK(first_digit_fraction(samples, 2) == doctest::Approx(1.0 / 3.0));
    CHECK(first_digit_fraction(samples, 9) == 0.0);
    CHECK_THROWS_AS(first_digit_fraction({}, 1), InvalidInputError);
    CHECK_THROWS_AS(first_digit_fraction(samples, 0), InvalidInputError);
}
