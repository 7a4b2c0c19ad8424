#include "helly/rational.hpp"

#include "doctest.h"
#include "support.hpp"

using helly::BigInt;
using helly::Rational;

TEST_CASE("rational normalization invariants") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, -7) == Rational(0));
    CHECK(Rational(0, 5).den() == 1);
    CHECK(Rational(5, -10).num() == -1);
    CHECK(Rational(5, -10).den() == 2);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational field operations") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(-a == Rational(-1, 3));
    CHECK_THROWS_AS(a / Rational(0), std::domain_error);

    Rational x(7, 5);
    x += Rational(3, 5);
    CHECK(x == Rational(2));
    x *= Rational(-1, 4);
    CHECK(x == Rational(-1, 2));
}

TEST_CASE("ordering agrees with the sign of the difference") {
    testsupport::Rng rng(11);
    for (int i = 0; i < 300; ++i) {
        Rational a = rng.rationalIn(-9, 9, 7);
        Rational b = rng.rationalIn(-9, 9, 7);
        int d = (a - b).sign();
        if (d < 0) CHECK(a < b);
        if (d == 0) CHECK(a == b);
        if (d > 0) CHECK(a > b);
    }
}

TEST_CASE("floor and ceil match integer division on a grid") {
    for (long long n = -24; n <= 24; ++n) {
        for (long long d = 1; d <= 7; ++d) {
            Rational r(n, d);
            CHECK(r.floor() == helly::floorDiv(BigInt(n), BigInt(d)));
            CHECK(r.ceil() == helly::ceilDiv(BigInt(n), BigInt(d)));
            // definitional sandwich
            CHECK(Rational(r.floor()) <= r);
            CHECK(r < Rational(r.floor() + 1));
            CHECK(r <= Rational(r.ceil()));
            CHECK(Rational(r.ceil() - 1) < r);
        }
    }
}

TEST_CASE("integral power") {
    CHECK(Rational(3, 2).pow(0) == Rational(1));
    CHECK(Rational(3, 2).pow(3) == Rational(27, 8));
    CHECK(Rational(-1, 2).pow(5) == Rational(-1, 32));
    CHECK(Rational(0).pow(4) == Rational(0));
}

TEST_CASE("string form round-trips") {
    CHECK(Rational(22, 4).str() == "11/2");
    CHECK(Rational(-8, 2).str() == "-4");
    CHECK(Rational::parse("11/2") == Rational(11, 2));
    CHECK(Rational::parse("-4") == Rational(-4));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("7/1") == Rational(7));

    testsupport::Rng rng(12);
    for (int i = 0; i < 200; ++i) {
        Rational r = rng.rationalIn(-50, 50, 12);
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("parse rejects non-canonical input") {
    CHECK_THROWS_AS(Rational::parse("2/4"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("4/-2"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("0/3"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse(""), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("-"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("1.5"), std::domain_error);
    CHECK_THROWS_AS(Rational::parse("3/ 4"), std::domain_error);
}
