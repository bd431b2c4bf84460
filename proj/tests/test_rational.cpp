#include "ivs/errors.hpp"
#include "ivs/rational.hpp"

#include <doctest.h>

#include <random>
#include <sstream>

using ivs::Rational;

TEST_SUITE("rational") {

TEST_CASE("fraction text parses exactly") {
    CHECK(Rational::parse("2/3") == Rational(2, 3));
    CHECK(Rational::parse("0/7") == Rational(0));
    CHECK(Rational::parse("-5/10") == Rational(-1, 2));
    CHECK(Rational::parse("10/2") == Rational(5));
}

TEST_CASE("integer text parses exactly") {
    CHECK(Rational::parse("0") == Rational(0));
    CHECK(Rational::parse("14") == Rational(14));
    CHECK(Rational::parse("-3") == Rational(-3));
}

TEST_CASE("decimal text parses exactly") {
    CHECK(Rational::parse("0.25") == Rational(1, 4));
    CHECK(Rational::parse("0.1") == Rational(1, 10));
    CHECK(Rational::parse("-2.5") == Rational(-5, 2));
    CHECK(Rational::parse("3.000") == Rational(3));
    CHECK(Rational::parse("0.0") == Rational(0));
}

TEST_CASE("malformed literals are rejected") {
    const char* bad[] = {"",    " 1",  "1 ",   "1e5", "1/",  "/2",  "-",   "--2",
                         "1//", "a",   "1.2.3", ".5",  "2.",  "1/-2", "0x10", "1 /2"};
    for (const char* text : bad) {
        CHECK_THROWS_AS(Rational::parse(text), ivs::parse_error);
    }
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational::parse("1/0"), ivs::parse_error);
    CHECK_THROWS_AS(Rational(1, 0), ivs::domain_error);
}

TEST_CASE("text form is lowest terms") {
    CHECK(Rational(4, 6).str() == "2/3");
    CHECK(Rational(-4, 6).str() == "-2/3");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(0, 5).str() == "0");
    CHECK(Rational(1).str() == "1");
    CHECK(Rational::parse("4/6").str() == "2/3");
}

TEST_CASE("arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3) - Rational(1, 3) == Rational(1, 3));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 2) / Rational(1, 4) == Rational(2));
    CHECK(-Rational(1, 2) == Rational(-1, 2));
    CHECK(Rational(1) - Rational(1, 3) == Rational(2, 3));
}

TEST_CASE("division by zero is rejected") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), ivs::domain_error);
}

TEST_CASE("comparisons follow the number line") {
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(0));
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(2, 3) != Rational(3, 4));
    CHECK(Rational(1) >= Rational(1));
    CHECK(Rational(1, 7) <= Rational(2, 7));
    CHECK(Rational(5, 3) > Rational(1));
}

TEST_CASE("sign, abs, and integrality") {
    CHECK(Rational(-2, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
    CHECK(Rational(7, 5).sign() == 1);
    CHECK(abs(Rational(-2, 3)) == Rational(2, 3));
    CHECK(abs(Rational(2, 3)) == Rational(2, 3));
    CHECK(Rational(4, 2).is_integer());
    CHECK_FALSE(Rational(1, 2).is_integer());
}

TEST_CASE("streaming matches str") {
    std::ostringstream out;
    out << Rational(-3, 9);
    CHECK(out.str() == "-1/3");
}

TEST_CASE("text round trip is the identity on random values") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> num(-100000, 100000);
    std::uniform_int_distribution<long> den(1, 100000);
    for (int i = 0; i < 500; ++i) {
        const Rational r(num(rng), den(rng));
        CHECK(Rational::parse(r.str()) == r);
    }
}

TEST_CASE("field laws hold on random values") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> num(-60, 60);
    std::uniform_int_distribution<long> den(1, 24);
    for (int i = 0; i < 500; ++i) {
        const Rational a(num(rng), den(rng));
        const Rational b(num(rng), den(rng));
        const Rational c(num(rng), den(rng));
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b - b == a);
        if (b != Rational(0)) {
            CHECK(a / b * b == a);
        }
    }
}

} // TEST_SUITE
