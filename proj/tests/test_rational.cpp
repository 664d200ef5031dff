#include <catch2/catch.hpp>

#include <random>

#include "mvop/pi_rational.hpp"
#include "mvop/rational.hpp"

using namespace mvop;

TEST_CASE("rationals are always in lowest terms", "[rational]") {
    CHECK(Rational(2, 4).str() == "1/2");
    CHECK(Rational(-2, 4).str() == "-1/2");
    CHECK(Rational(2, -4).str() == "-1/2");
    CHECK(Rational(0, 7).str() == "0");
    CHECK(Rational(6, 3).str() == "2");
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(1, 2).denominator() == 2);
    CHECK(Rational(3, -7).numerator() == -3);
    CHECK(Rational(3, -7).denominator() == 7);
}

TEST_CASE("rational arithmetic and comparisons", "[rational]") {
    Rational a(1, 3), b(1, 6);
    CHECK(a + b == Rational(1, 2));
    CHECK(a - b == Rational(1, 6));
    CHECK(a * b == Rational(1, 18));
    CHECK(a / b == Rational(2));
    CHECK(a > b);
    CHECK(-a < b);
    CHECK(abs(Rational(-5, 2)) == Rational(5, 2));
    CHECK_THROWS_AS(a / Rational(0), DomainError);
    CHECK_THROWS_AS(Rational(1, 0), DomainError);
}

TEST_CASE("parse and str round trip", "[rational]") {
    for (const char* s : {"0", "1", "-1", "22/7", "-355/113", "1000000007"}) {
        CHECK(Rational::parse(s).str() == s);
    }
    CHECK(Rational::parse("4/6").str() == "2/3");  // canonicalized on entry
    CHECK_THROWS_AS(Rational::parse(""), DomainError);
    CHECK_THROWS_AS(Rational::parse("x"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
}

TEST_CASE("canonical form is idempotent under arithmetic", "[rational]") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000, 1000);
    std::uniform_int_distribution<long> den(1, 1000);
    for (int i = 0; i < 200; ++i) {
        Rational a(num(rng), den(rng)), b(num(rng), den(rng));
        Rational c = a * b + a - b;
        CHECK(Rational::parse(c.str()) == c);
        CHECK(gcd(mpz_class(c.numerator()), mpz_class(c.denominator())) == 1);
        CHECK(c.denominator() > 0);
    }
}

TEST_CASE("factorial helpers", "[rational]") {
    CHECK(factorial(0) == Rational(1));
    CHECK(factorial(5) == Rational(120));
    CHECK(double_factorial(-1) == Rational(1));
    CHECK(double_factorial(0) == Rational(1));
    CHECK(double_factorial(5) == Rational(15));
    CHECK(double_factorial(6) == Rational(48));
    CHECK(binomial(5, 2) == Rational(10));
    CHECK(binomial(4, 7) == Rational(0));
}

TEST_CASE("pi-graded scalars refuse cross-grade addition", "[pirational]") {
    PiRational a(Rational(1, 2), 1);
    PiRational b(Rational(1, 3), 0);
    CHECK_THROWS_AS(a + b, PiGradeMismatch);
    CHECK((a + PiRational()).pi_power() == 1);  // zero joins any grade
    CHECK((PiRational() + b) == b);
    CHECK((a - a).is_zero());
    CHECK((a - a).pi_power() == 0);  // canonical zero
}

TEST_CASE("pi-graded products add grades", "[pirational]") {
    PiRational a(Rational(3), -1);  // 3/pi
    PiRational m(Rational(1, 6), 1);
    CHECK((a * m).pi_power() == 0);
    CHECK((a * m).coeff() == Rational(1, 2));
    CHECK(a.str() == "3*pi^-1");
    CHECK(m.str() == "1/6*pi");
    CHECK(PiRational(Rational(2)).str() == "2");
    CHECK(a.to_double() == Approx(3 / M_PI).epsilon(1e-14));
}
