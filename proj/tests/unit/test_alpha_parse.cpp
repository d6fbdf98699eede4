#include <doctest.h>

#include "threegap/alpha_parse.hpp"
#include "threegap/error.hpp"

using namespace threegap;

TEST_CASE("rational, surd, and expansion forms all parse") {
    AlphaSource r = parse_alpha("7/24");
    CHECK(r.rational_value() == make_rational(7, 24));

    AlphaSource s = parse_alpha("(-1+sqrt 5)/2");
    CHECK(s.cf() == CFExpansion::periodic({}, {1}));
    CHECK(s.describe() == "(-1+sqrt 5)/2");

    AlphaSource cf = parse_alpha("[0;3,2,3]");
    CHECK(cf.rational_value() == make_rational(7, 24));

    AlphaSource per = parse_alpha("[0;3,period(1,2)]");
    CHECK(per.cf() == CFExpansion::periodic({3}, {1, 2}));
    CHECK(per.describe() == "[0;3,period(1,2)]");

    AlphaSource pure = parse_alpha("[0;period(4)]");
    CHECK(pure.cf() == CFExpansion::periodic({}, {4}));
}

TEST_CASE("surd sums accept reordered terms, unicode, and missing parens") {
    CHECK(parse_alpha("(0+sqrt 5 -1)/2").describe() == "(-1+sqrt 5)/2");
    CHECK(parse_alpha("(\xe2\x88\x92" "1+\xe2\x88\x9a" "5)/2").describe() == "(-1+sqrt 5)/2");
    CHECK(parse_alpha("sqrt 2 - 1").describe() == "(-1+sqrt 2)/1");
    CHECK(parse_alpha("\xe2\x88\x9a" "2-1").describe() == "(-1+sqrt 2)/1");
    // negated denominator and negated radical normalize to the same value
    CHECK(parse_alpha("(1-sqrt 2)/-1").describe() == "(-1+sqrt 2)/1");
    CHECK(parse_alpha(" ( -1 + sqrt 5 ) / 2 ").describe() == "(-1+sqrt 5)/2");
}

TEST_CASE("parse round-trips through describe") {
    for (const char* text : {"7/24", "156/179", "(-1+sqrt 5)/2", "(-1+sqrt 3)/1",
                             "[0;3,period(1,2)]", "[0;2,period(3,1,4)]"}) {
        AlphaSource first = parse_alpha(text);
        AlphaSource second = parse_alpha(first.describe());
        CHECK(second.cf() == first.cf());
    }
}

TEST_CASE("grammar failures raise invalid input") {
    CHECK_THROWS_AS(parse_alpha(""), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("   "), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("abc"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("7"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("7/24 extra"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("7/0"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("[1;2]"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("[0;2,]"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("[0;2"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("[0;period()]"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("(1+sqrt 2+sqrt 3)/5"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("(1+2)/3 sqrt"), InvalidInputError);
    CHECK_THROWS_AS(parse_alpha("(sqrt 2)/0"), InvalidInputError);
}

TEST_CASE("well-formed text can still fail the domain checks") {
    CHECK_THROWS_AS(parse_alpha("5/3"), RangeError);
    CHECK_THROWS_AS(parse_alpha("0/5"), RangeError);
    CHECK_THROWS_AS(parse_alpha("(0+sqrt 4)/2"), NotIrrationalError);
    CHECK_THROWS_AS(parse_alpha("(1+sqrt 2)/1"), RangeError);
    CHECK_THROWS_AS(parse_alpha("[0;1]"), RangeError);
}
