#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "conebranch/surd.hpp"

using namespace conebranch;

TEST_CASE("rational round trip")
{
    CHECK(rational_str(parse_rational("-3/6")) == "-1/2");
    CHECK(parse_rational("7") == Rational(7));
}

TEST_CASE("sqrt of rational reduces the square part")
{
    Surd s = Surd::sqrt_of(Rational(8)); // 2 sqrt(2)
    CHECK(s == Surd(2, Rational(2)));
    CHECK(Surd::sqrt_of(Rational(9)) == Surd(3));
    CHECK(Surd::sqrt_of(Rational(1, 2)) == Surd(2, Rational(1, 2)));
}

TEST_CASE("field operations")
{
    Surd a = Surd(1) + Surd::sqrt_of(Rational(2)); // 1 + sqrt 2
    Surd b = Surd::sqrt_of(Rational(3));

    CHECK(a * a == Surd(3) + Surd(2, Rational(2)));
    CHECK((a - a).is_zero());
    CHECK(b * b == Surd(3));

    // inverse of 1 + sqrt2 is sqrt2 - 1
    CHECK(a.inverse() == Surd::sqrt_of(Rational(2)) - Surd(1));

    // inverse in the degree-4 field Q(sqrt2, sqrt3)
    Surd c = a + b + Surd::sqrt_of(Rational(6));
    CHECK(c * c.inverse() == Surd(1));

    CHECK(std::abs(c.to_double() - (1 + std::sqrt(2.0) + std::sqrt(3.0) + std::sqrt(6.0))) < 1e-14);
}

TEST_CASE("mixed radicand products")
{
    Surd s2 = Surd::sqrt_of(Rational(2)), s6 = Surd::sqrt_of(Rational(6));
    CHECK(s2 * s6 == Surd(3, Rational(2))); // sqrt 12 = 2 sqrt 3
    CHECK((s2 * s2).rational_value() == Rational(2));
}

TEST_CASE("irrational values refuse rational_value")
{
    CHECK_THROWS(Surd::sqrt_of(Rational(2)).rational_value());
    CHECK_THROWS(Surd::sqrt_of(Rational(-1)));
}
