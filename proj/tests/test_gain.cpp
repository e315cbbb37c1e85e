#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "gaingraph/errors.hpp"
#include "gaingraph/gain.hpp"

using namespace gaingraph;

TEST_CASE("quarter turns have exact values") {
    CHECK(Gain().value() == Complex(1, 0));
    CHECK(Gain::rational(1, 4).value() == Complex(0, 1));
    CHECK(Gain::half_turn().value() == Complex(-1, 0));
    CHECK(Gain::rational(3, 4).value() == Complex(0, -1));
    CHECK(Gain::parse_turns("0.25").value() == Complex(0, 1));
}

TEST_CASE("rationals reduce and wrap") {
    CHECK(Gain::rational(2, 4) == Gain::half_turn());
    CHECK(Gain::rational(-1, 4) == Gain::rational(3, 4));
    CHECK(Gain::rational(7, 3) == Gain::rational(1, 3));
    CHECK(Gain::rational(2, 6).exact() == Rational{1, 3});
    CHECK_THROWS_AS(Gain::rational(1, 0), GraphError);
}

TEST_CASE("exact thirds multiply to neutral") {
    Gain third = Gain::rational(1, 3);
    Gain prod = third * third * third;
    CHECK(prod.is_exact());
    CHECK(prod.is_neutral(0.0));
    CHECK(prod.to_string() == "0");
}

TEST_CASE("group laws hold bit for bit on fixed-point gains") {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 1000; ++t) {
        Gain a = Gain::from_fixed(rng()), b = Gain::from_fixed(rng()), c = Gain::from_fixed(rng());
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * a.inverse() == Gain());
        CHECK(a.inverse().inverse() == a);
    }
}

TEST_CASE("parse_turns accepts decimals, fractions and signs") {
    CHECK(Gain::parse_turns("1/2") == Gain::half_turn());
    CHECK(Gain::parse_turns("0.5") == Gain::half_turn());
    CHECK(Gain::parse_turns("-0.25") == Gain::rational(3, 4));
    CHECK(Gain::parse_turns("1.25") == Gain::rational(1, 4));
    CHECK(Gain::parse_turns("2.5e-1") == Gain::rational(1, 4));
    CHECK_THROWS_AS(Gain::parse_turns("abc"), ParseError);
    CHECK_THROWS_AS(Gain::parse_turns(""), ParseError);
    CHECK_THROWS_AS(Gain::parse_turns("1/0"), ParseError);
}

TEST_CASE("parse_angle units") {
    CHECK(Gain::parse_angle("0.5turns") == Gain::half_turn());
    CHECK(Gain::parse_angle("1/4") == Gain::rational(1, 4));
    CHECK(Gain::parse_angle("0.75") == Gain::rational(3, 4));
    Gain r = Gain::parse_angle("1rad");
    CHECK(r.radians() == doctest::Approx(1.0).epsilon(1e-15));
    Gain pi = Gain::parse_angle("3.141592653589793rad");
    CHECK(pi.approx_equal(Gain::half_turn(), 1e-15));
}

TEST_CASE("to_string round-trips") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 2000; ++t) {
        Gain g = Gain::from_fixed(rng());
        CHECK(Gain::parse_turns(g.to_string()) == g);
    }
    CHECK(Gain::parse_turns("0.1").to_string() == "0.1");
    CHECK(Gain::rational(5, 12).to_string() == "5/12");
    CHECK(Gain::parse_turns(Gain::rational(5, 12).to_string()) == Gain::rational(5, 12));
}

TEST_CASE("value matches the exponential") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 200; ++t) {
        Gain g = Gain::from_fixed(rng());
        Complex z = std::polar(1.0, 2.0 * std::numbers::pi * g.turns());
        CHECK(std::abs(g.value() - z) < 1e-14);
        CHECK(std::abs(std::abs(g.value()) - 1.0) < 1e-15);
        CHECK(std::abs(g.inverse().value() - std::conj(g.value())) < 1e-15);
    }
}

TEST_CASE("distances and tolerances") {
    Gain near = Gain::from_turns(1e-12);
    CHECK(near.is_neutral());
    CHECK_FALSE(near.is_neutral(0.0));
    CHECK(Gain::from_turns(0.9999999999999).is_neutral());
    CHECK(Gain::half_turn().distance_to_neutral() == 0.5);
    CHECK(Gain::rational(1, 4).distance(Gain::rational(3, 4)) == 0.5);
    CHECK(Gain::half_turn().is_self_inverse());
    CHECK_FALSE(Gain::rational(1, 4).is_self_inverse());
    CHECK(Gain::half_turn().negated() == Gain());
}

TEST_CASE("mixing exact and inexact drops exactness") {
    Gain a = Gain::rational(1, 3) * Gain::from_turns(0.1);
    CHECK_FALSE(a.is_exact());
    CHECK(a.turns() == doctest::Approx(1.0 / 3.0 + 0.1).epsilon(1e-15));
}
