#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "vckm/rational.hpp"

using vckm::Rational;

TEST_CASE("construction normalizes") {
    CHECK(Rational(514, 988) == Rational(257, 494));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
    CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(3, 7) == Rational(-3, 7));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);
}

TEST_CASE("comparisons are exact") {
    CHECK(Rational(736, 735) > Rational(10013, 10000));
    CHECK(Rational(1, 3) < Rational(34, 100));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
}

TEST_CASE("floor and ceil") {
    CHECK(Rational(7, 2).floor() == 3);
    CHECK(Rational(7, 2).ceil() == 4);
    CHECK(Rational(-7, 2).floor() == -4);
    CHECK(Rational(-7, 2).ceil() == -3);
    CHECK(Rational(5).floor() == 5);
    CHECK(Rational(5).ceil() == 5);
}

TEST_CASE("parse") {
    CHECK(Rational::parse("21.7") == Rational(217, 10));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK(Rational::parse(" 2.5 ") == Rational(5, 2));
    CHECK(Rational::parse(".5") == Rational(1, 2));
    CHECK(Rational::parse("7.") == Rational(7));
    CHECK(Rational::parse("0.0001") == Rational(1, 10000));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("to_string") {
    CHECK(Rational(3).to_string() == "3");
    CHECK(Rational(-1, 2).to_string() == "-1/2");
    CHECK(Rational(514, 988).to_string() == "257/494");
}

TEST_CASE("overflow is an error, not a wrong answer") {
    Rational big(INT64_MAX, 1);
    CHECK_THROWS_AS(big + big, std::overflow_error);
    CHECK_THROWS_AS(big * Rational(2), std::overflow_error);
}

TEST_CASE("field identities on random fractions") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        Rational a((std::int64_t)(rng() % 2001) - 1000, (std::int64_t)(rng() % 50) + 1);
        Rational b((std::int64_t)(rng() % 2001) - 1000, (std::int64_t)(rng() % 50) + 1);
        CHECK((a + b) - b == a);
        CHECK(a + b == b + a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK((a - b) + (b - a) == Rational(0));
    }
}
