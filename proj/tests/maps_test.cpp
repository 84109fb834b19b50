#include <doctest.h>

#include "root_enclose/map_io.hpp"
#include "root_enclose/maps.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace root_enclose;
using namespace root_enclose::testing;

namespace {

std::vector<Rational> rationals(std::initializer_list<Rational> v) { return v; }

}  // namespace

TEST_CASE("secant_newton coefficients") {
    const MapCoefficients two = secant_newton(2);
    CHECK(two.p() == rationals({-1, 0, 0, 1, 1}));
    CHECK(two.q() == rationals({-1, 0, 0, 2, 0}));

    const MapCoefficients three = secant_newton(3);
    CHECK(three.p() == rationals({-1, 0, 0, 0, 1, 1, 1}));
    CHECK(three.q() == rationals({-1, 0, 0, 0, 3, 0, 0}));

    const MapCoefficients five = secant_newton(5);
    CHECK(five.q()[6] == 5);
    for (std::size_t i = 7; i <= 10; ++i) CHECK(five.q()[i] == 0);

    CHECK_THROWS_AS(secant_newton(1), std::invalid_argument);
}

TEST_CASE("MapCoefficients validates shape") {
    CHECK_THROWS_AS(MapCoefficients(1, rationals({0, 0, 0}), rationals({0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(MapCoefficients(2, rationals({0, 0, 0, 0}), rationals({0, 0, 0, 0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(MapCoefficients(2, rationals({0, 0, 0, 0, 0}), rationals({0, 0, 0, 0, 0, 0})),
                    std::invalid_argument);
}

TEST_CASE("check_canonical") {
    CHECK(check_canonical(secant_newton(3)).is_canonical);
    CHECK(check_canonical(cubic_equality_example()).is_canonical);

    const MapCoefficients bad(2, rationals({0, 0, 0, 1, 1}), rationals({-1, 0, 0, 2, 0}));
    const CanonicalReport report = check_canonical(bad);
    CHECK_FALSE(report.is_canonical);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].name == "p0");
    CHECK(report.violations[0].required == -1);
    CHECK(report.violations[0].actual == 0);

    const CanonicalReport original = check_canonical(cubic_equality_example(true));
    REQUIRE(original.violations.size() == 1);
    CHECK(original.violations[0].name == "q0");
    CHECK(original.violations[0].actual == 1);
}

TEST_CASE("canonicalize") {
    CHECK(canonicalize(secant_newton(4)) == secant_newton(4));

    const MapCoefficients messy(2, rationals({5, 1, 0, 1, 1}), rationals({-1, 0, 0, 2, 0}));
    CHECK(canonicalize(messy).p() == rationals({-1, 0, 0, 1, 1}));

    CHECK(canonicalize(cubic_equality_example(true)).q() == rationals({-1, 0, 0, 0, 3, 0, 0}));
    CHECK(canonicalize(cubic_equality_example(true)) == cubic_equality_example());

    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        const MapCoefficients m = non_canonical_map(2 + i % 4, rng);
        const MapCoefficients once = canonicalize(m);
        CHECK(check_canonical(once).is_canonical);
        CHECK(canonicalize(once) == once);
        // Denominator coefficients untouched.
        for (auto k = static_cast<std::size_t>(m.degree()) + 1; k < m.p().size(); ++k) {
            CHECK(once.p()[k] == m.p()[k]);
            CHECK(once.q()[k] == m.q()[k]);
        }
    }
}

TEST_CASE("apply examples") {
    const Rational x(27, 8);
    const RefinedPair sn = apply(secant_newton(3), Interval(1, 2), x);
    CHECK(sn.lo == Rational(75, 56));
    CHECK(sn.hi == Rational(155, 96));

    const RefinedPair example = apply(cubic_equality_example(), Interval(1, 2), x);
    CHECK(example == sn);

    // x = L^n fixes the lower endpoint of any canonical map.
    Rng rng(11);
    for (int i = 0; i < 20; ++i) {
        const int n = 2 + i % 5;
        const MapCoefficients m = random_canonical_map(n, rng);
        const Rational lo = random_positive(rng, 50);
        const Rational hi = lo + random_positive(rng, 50);
        CHECK(apply(m, Interval(lo, hi), pow_int(lo, static_cast<unsigned>(n))).lo == lo);
        CHECK(apply(m, Interval(lo, hi), pow_int(hi, static_cast<unsigned>(n))).hi == hi);
    }
}

TEST_CASE("apply reports raw non-interval output and zero denominators") {
    // Far outside the root: the map overshoots and the pair is inverted.
    const MapCoefficients shrunk(2, rationals({-1, 0, 0, Rational(1, 10), Rational(1, 10)}),
                                 rationals({-1, 0, 0, Rational(1, 10), 0}));
    const RefinedPair pair = apply(shrunk, Interval(1, 2), 2);
    CHECK(pair.lo == Rational(13, 3));
    CHECK(pair.hi == -8);
    CHECK_FALSE(pair.is_interval());
    CHECK_THROWS_AS((void)pair.to_interval(), std::invalid_argument);

    const MapCoefficients zero_p(2, rationals({-1, 0, 0, 1, -1}), rationals({-1, 0, 0, 2, 0}));
    try {
        (void)apply(zero_p, Interval(3, 3), 9);
        FAIL("expected DenominatorZero");
    } catch (const DenominatorZero& e) {
        CHECK(e.side() == Endpoint::Lower);
    }
    const MapCoefficients zero_q(2, rationals({-1, 0, 0, 1, 1}), rationals({-1, 0, 0, 0, 0}));
    try {
        (void)apply(zero_q, Interval(1, 2), 2);
        FAIL("expected DenominatorZero");
    } catch (const DenominatorZero& e) {
        CHECK(e.side() == Endpoint::Upper);
    }
    CHECK_THROWS_AS((void)apply(secant_newton(2), Interval(1, 2), 0), std::invalid_argument);
}

TEST_CASE("property: Secant-Newton matches the closed-form oracle") {
    Rng rng(99);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 2 + trial % 6;
        Rational lo = random_positive(rng, 1000);
        Rational hi = random_positive(rng, 1000);
        if (hi < lo) std::swap(lo, hi);
        const Rational root = lo + (hi - lo) * Rational(trial % 11, 10);
        const Rational x = pow_int(root, static_cast<unsigned>(n));
        const auto [lo_ref, hi_ref] = secant_newton_oracle(lo, hi, x, n);
        const RefinedPair got = apply(secant_newton(n), Interval(lo, hi), x);
        CHECK(got.lo == lo_ref);
        CHECK(got.hi == hi_ref);
        CHECK(apply_canonical(secant_newton(n), Interval(lo, hi), x) == got);
    }
}

TEST_CASE("property: general and reduced forms agree on canonical maps") {
    Rng rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 5;
        const MapCoefficients m = trial % 2 ? random_canonical_map(n, rng) : certified_contracting_map(n, rng, false);
        Rational lo = random_positive(rng, 200);
        Rational hi = random_positive(rng, 200);
        if (hi < lo) std::swap(lo, hi);
        const Rational x = random_positive(rng, 500);
        CHECK(apply(m, Interval(lo, hi), x) == apply_canonical(m, Interval(lo, hi), x));
    }
    CHECK_THROWS_AS((void)apply_canonical(cubic_equality_example(true), Interval(1, 2), 2), std::invalid_argument);
}

TEST_CASE("property: scaling equivariance") {
    Rng rng(1234);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + trial % 6;
        const MapCoefficients m = trial % 3 == 0 ? random_canonical_map(n, rng) : certified_contracting_map(n, rng, true);
        Rational lo = random_positive(rng, 100);
        Rational hi = random_positive(rng, 100);
        if (hi < lo) std::swap(lo, hi);
        const Rational x = pow_int(lo + (hi - lo) * Rational(trial % 7, 6), static_cast<unsigned>(n));
        const Rational s = random_positive(rng, 100);

        const RefinedPair base = apply(m, Interval(lo, hi), x);
        const RefinedPair scaled = apply(m, Interval(lo, hi).scaled(s), pow_int(s, static_cast<unsigned>(n)) * x);
        CHECK(scaled.lo == s * base.lo);
        CHECK(scaled.hi == s * base.hi);
    }
}

TEST_CASE("map spec JSON") {
    const MapCoefficients m = parse_map_text(
        R"({"n":3,"p":["-1","0","0","0","2","1/2","1"],"q":["-1","0","0","0","3","0","0"]})");
    CHECK(m == cubic_equality_example());
    CHECK(map_from_json(map_to_json(m)) == m);

    CHECK_THROWS_AS(parse_map_text(R"({"n":3,"p":["-1"],"q":["-1","0","0","0","3","0","0"]})"), SpecError);
    try {
        parse_map_text(R"({"n":2,"p":["-1","0","0","1"],"q":["-1","0","0","2","0"]})");
        FAIL("expected SpecError");
    } catch (const SpecError& e) {
        CHECK(std::string(e.what()).find("5 entries") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_map_text(R"({"n":2,"p":["-1","0","0","1","1"],"q":["-1","0","0","2","0"],"extra":1})"),
                    SpecError);
    CHECK_THROWS_AS(parse_map_text(R"({"n":2,"p":[-1,0,0,1,1],"q":["-1","0","0","2","0"]})"), SpecError);
    CHECK_THROWS_AS(parse_map_text(R"({"n":1,"p":["-1","0","0"],"q":["-1","0","0"]})"), SpecError);
    CHECK_THROWS_AS(parse_map_text(R"({"n":2,"p":["-1","0","0","1/0","1"],"q":["-1","0","0","2","0"]})"), SpecError);
    CHECK_THROWS_AS(parse_map_text("not json"), SpecError);
    CHECK_THROWS_AS(load_map_file("/nonexistent/map.json"), SpecError);
}
