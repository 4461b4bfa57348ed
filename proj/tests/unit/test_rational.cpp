#include <doctest.h>

#include <random>

#include "affcert/rational.hpp"

using affcert::DivisionByZero;
using affcert::Rational;

namespace {

std::mt19937 rng(20240817);

Rational random_rational() {
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 30);
    return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("textbook fraction arithmetic") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(-7, 5) * Rational(5, 2) == Rational(-7, 2));
    CHECK_THROWS_AS(Rational(0).inv(), DivisionByZero);
    CHECK_THROWS_AS(Rational(1) / Rational(0), DivisionByZero);
}

TEST_CASE("normalization invariants") {
    Rational r(6, -4);
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(Rational(0, 7).num() == 0);
    CHECK(Rational(0, 7).den() == 1);
    // normalizing a normalized value is the identity
    Rational again(r.num(), r.den());
    CHECK(again == r);
}

TEST_CASE("field axioms on random samples") {
    for (int i = 0; i < 200; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * a.inv() == Rational(1));
    }
}

TEST_CASE("parse/render round-trip") {
    for (int i = 0; i < 200; ++i) {
        Rational r = random_rational();
        CHECK(Rational::parse(r.str()) == r);
    }
    CHECK(Rational::parse("-7/2") == Rational(-7, 2));
    CHECK(Rational::parse("+3") == Rational(3));
    CHECK(Rational::parse("4/15").str() == "4/15");
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS(Rational::parse("a/2"));
    CHECK_THROWS(Rational::parse("1/2x"));
}

TEST_CASE("comparisons") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-5, 2) < Rational(0));
    CHECK(Rational(7, 2) >= Rational(7, 2));
}
