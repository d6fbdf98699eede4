#include <doctest.h>

#include <support/corpus.hpp>

#include "threegap/error.hpp"
#include "threegap/gap_oracle.hpp"

using namespace threegap;

TEST_CASE("alpha sources validate and describe their value") {
    AlphaSource r = AlphaSource::from_rational(7, 24);
    CHECK(r.is_exact_rational());
    CHECK(r.rational_value() == make_rational(7, 24));
    CHECK(r.cf() == CFExpansion::finite({3, 2, 3}));
    CHECK(r.describe() == "7/24");
    CHECK(AlphaSource::from_rational(14, 48).rational_value() == make_rational(7, 24));

    CHECK_THROWS_AS(AlphaSource::from_rational(0, 1), RangeError);
    CHECK_THROWS_AS(AlphaSource::from_rational(5, 3), RangeError);
    CHECK_THROWS_AS(AlphaSource::from_rational(-1, 2), RangeError);
    CHECK_THROWS_AS(AlphaSource::from_rational(1, 0), InvalidInputError);

    AlphaSource s = AlphaSource::from_surd(corpus::golden());
    CHECK_FALSE(s.is_exact_rational());
    CHECK(s.describe() == "(-1+sqrt 5)/2");
    CHECK(s.cf() == CFExpansion::periodic({}, {1}));
    CHECK_THROWS_AS(s.rational_value(), RequiresPeriodicError);

    AlphaSource t = AlphaSource::from_cf(CFExpansion::truncated_prefix({3, 2, 3}));
    CHECK(t.is_exact_rational());  // exhausting the prefix pins the value
    CHECK(t.describe() == "[0;3,2,3]");
}

TEST_CASE("surrogate takes the first convergent past 4N") {
    AlphaSource golden = AlphaSource::from_surd(corpus::golden());
    Surrogate s = surrogate_convergent(golden, 10);
    CHECK(s.approx.n == 9);
    CHECK(s.approx.q == 55);
    CHECK_FALSE(s.is_exact);

    Surrogate bumped = surrogate_convergent(golden, 10, 2);
    CHECK(bumped.approx.q == 144);

    // finite expansion exhausted: the surrogate is alpha itself
    AlphaSource r = AlphaSource::from_rational(7, 24);
    Surrogate e = surrogate_convergent(r, 3);
    CHECK(e.approx.q == 24);
    CHECK(e.is_exact);
    Surrogate e2 = surrogate_convergent(r, 5, 7);  // bump past the end is clamped
    CHECK(e2.approx.q == 24);
    CHECK(e2.is_exact);

    CHECK_THROWS_AS(surrogate_convergent(r, 24), DegenerateRationalError);
    CHECK_THROWS_AS(surrogate_convergent(r, 100), DegenerateRationalError);
    CHECK_THROWS_AS(surrogate_convergent(golden, 0), InvalidInputError);
    CHECK_THROWS_AS(surrogate_convergent(golden, 5, -1), InvalidInputError);
}

TEST_CASE("gap report matches hand-tabulated small cases") {
    AlphaSource golden = AlphaSource::from_surd(corpus::golden());

    GapReport g5 = gap_report(golden, 5);
    CHECK(g5.gaps == std::vector<Rational>{make_rational(1, 7), make_rational(5, 21)});
    CHECK(g5.multiplicities == std::vector<long long>{2, 3});

    GapReport g4 = gap_report(golden, 4);
    CHECK(g4.gaps.size() == 3);
    CHECK(g4.multiplicities == std::vector<long long>{1, 2, 1});
    CHECK(g4.gaps[2] == g4.gaps[0] + g4.gaps[1]);  // widest gap splits into the other two

    GapReport g1 = gap_report(golden, 1);
    CHECK(g1.gaps == std::vector<Rational>{Rational(1)});
    CHECK(g1.multiplicities == std::vector<long long>{1});

    // exact rational: gaps over the true denominator
    GapReport r3 = gap_report(AlphaSource::from_rational(7, 24), 3);
    CHECK(r3.gaps == std::vector<Rational>{make_rational(7, 24), make_rational(5, 12)});
    CHECK(r3.multiplicities == std::vector<long long>{2, 1});
}

TEST_CASE("gap lengths are increasing, count N, and tile the circle") {
    for (auto& entry : corpus::periodic_entries()) {
        for (long long n : {1, 2, 3, 7, 19, 46, 120}) {
            GapReport rep = gap_report(entry.source, n);
            CHECK(rep.gaps.size() >= 1);
            CHECK(rep.gaps.size() <= 3);
            Rational total = 0;
            long long pieces = 0;
            for (std::size_t i = 0; i < rep.gaps.size(); ++i) {
                CHECK(rep.gaps[i] > 0);
                if (i) CHECK(rep.gaps[i] > rep.gaps[i - 1]);
                total += rep.gaps[i] * Rational(int_from(rep.multiplicities[i]));
                pieces += rep.multiplicities[i];
            }
            CHECK(total == 1);
            CHECK(pieces == n);
        }
    }
}

TEST_CASE("u permutation starts at 0 and lists neighbor indices") {
    AlphaSource golden = AlphaSource::from_surd(corpus::golden());
    UPermutation p5 = u_permutation(golden, 5);
    CHECK(p5.u == std::vector<long long>{0, 2, 4, 1, 3});

    UPermutation s5 = u_permutation(AlphaSource::from_surd(corpus::sqrt2m1()), 5);
    CHECK(s5.u == std::vector<long long>{0, 3, 1, 4, 2});

    UPermutation p1 = u_permutation(golden, 1);
    CHECK(p1.u == std::vector<long long>{0});

    // every index appears exactly once
    UPermutation big = u_permutation(golden, 200);
    std::vector<long long> seen(200, 0);
    for (long long k : big.u) seen[static_cast<std::size_t>(k)] += 1;
    for (long long c : seen) CHECK(c == 1);
    CHECK(big.u.front() == 0);
}
