#include <doctest.h>

#include "root_enclose/numeric.hpp"
#include "support/generators.hpp"

using namespace root_enclose;
using root_enclose::testing::random_positive;
using root_enclose::testing::Rng;

TEST_CASE("pow_int") {
    CHECK(pow_int(Rational(3, 2), 3) == Rational(27, 8));
    CHECK(pow_int(7, 0) == 1);
    CHECK(pow_int(Rational(2, 3), 2) == Rational(4, 9));
    CHECK(pow_int(0, 0) == 1);
    CHECK(pow_int(Rational(-1, 2), 3) == Rational(-1, 8));
}

TEST_CASE("geom_sum") {
    CHECK(geom_sum(1, 2, 3) == 7);
    CHECK(geom_sum(3, 3, 4) == 108);
    CHECK(geom_sum(1, 1, 5) == 5);
    CHECK(geom_sum(5, 9, 1) == 1);
    CHECK_THROWS_AS(geom_sum(1, 2, 0), std::invalid_argument);
}

TEST_CASE("width") {
    CHECK(width(Interval(1, 2)) == 1);
    CHECK(width(Interval(Rational(3, 2), Rational(3, 2))) == 0);
    CHECK(width(Interval(Rational(24, 17), Rational(17, 12))) == Rational(1, 204));
}

TEST_CASE("interval invariant") {
    CHECK_THROWS_AS(Interval(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(Interval(Rational(-1, 2), 1), std::invalid_argument);
    CHECK(Interval(1, 4).contains(Interval(2, 3)));
    CHECK_FALSE(Interval(2, 3).contains(Interval(1, 3)));
}

TEST_CASE("text form") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("-4/6").to_string() == "-2/3");
    CHECK(Rational::parse("12").to_string() == "12");
    CHECK(Rational::parse("8/4").to_string() == "2");
    CHECK(Rational::parse("-0").to_string() == "0");

    for (const char* bad : {"", "1/0", "a", "1/", "/2", " 1", "1 /2", "+1", "1.5", "1/-2", "--1"}) {
        CAPTURE(bad);
        CHECK_THROWS_AS(Rational::parse(bad), std::invalid_argument);
    }
}

TEST_CASE("decimal shorthand is exact") {
    CHECK(Rational::parse_decimal("1e-12") == Rational(1, 1000000000000L));
    CHECK(Rational::parse_decimal("1e-3") == Rational(1, 1000));
    CHECK(Rational::parse_decimal("0.001") == Rational(1, 1000));
    CHECK(Rational::parse_decimal("2.5E3") == 2500);
    CHECK(Rational::parse_decimal("-1.25") == Rational(-5, 4));
    CHECK(Rational::parse_decimal(".5") == Rational(1, 2));
    CHECK(Rational::parse_decimal("27/8") == Rational(27, 8));
    CHECK_THROWS_AS(Rational::parse_decimal("1e"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("e5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse_decimal("1.2.3"), std::invalid_argument);
}

TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("property: arithmetic identities over random rationals") {
    Rng rng(20240611);
    for (int trial = 0; trial < 500; ++trial) {
        Rational a = random_positive(rng, 1000);
        Rational b = random_positive(rng, 1000);
        if (trial % 3 == 0) b = -b;
        const int n = 1 + trial % 7;
        const auto un = static_cast<unsigned>(n);
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(n);

        // Telescoping: (a - b) * sum a^{n-1-i} b^i = a^n - b^n
        CHECK(geom_sum(a, b, n) * (a - b) == pow_int(a, un) - pow_int(b, un));
        CHECK(geom_sum(a, b, n) == geom_sum(b, a, n));

        const unsigned m = static_cast<unsigned>(trial % 5);
        CHECK(pow_int(a, m + un) == pow_int(a, m) * pow_int(a, un));

        // Every result is stored reduced; the text form round-trips.
        for (const Rational& r : {a + b, a - b, a * b, a / b, geom_sum(a, b, n), pow_int(b, un)}) {
            CHECK(r.is_reduced());
            CHECK(Rational::parse(r.to_string()) == r);
        }
    }
}
