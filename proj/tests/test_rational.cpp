#include <doctest.h>

#include <stdexcept>

#include "gjms/binomial.hpp"
#include "gjms/rational.hpp"

using namespace gjms;

TEST_CASE("construction reduces to canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(2, 4).numerator() == 1);
  CHECK(Rational(2, 4).denominator() == 2);

  // sign lives in the numerator, denominator stays positive
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3, -6).numerator() == -1);
  CHECK(Rational(3, -6).denominator() == 2);

  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(0, 7).denominator() == 1);

  CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(Rational(0, 0), std::invalid_argument);
}

TEST_CASE("arithmetic is exact") {
  CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
  CHECK(Rational(1, 2) - Rational(1, 3) == Rational(1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 7) / Rational(2, 7) == Rational(1, 2));
  CHECK(-Rational(3, 5) == Rational(-3, 5));
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::invalid_argument);

  // no silent overflow: values leave the machine range
  Rational big(1);
  for (int i = 1; i <= 40; ++i) big *= Rational(i);
  Rational back = big;
  for (int i = 1; i <= 40; ++i) back = back / Rational(i);
  CHECK(back == Rational(1));
  CHECK(big.numerator() == Integer("815915283247897734345611269596115894272000000000"));
}

TEST_CASE("ordering") {
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(7, 3) > Rational(2));
  CHECK(Rational(1, 2) <= Rational(2, 4));
  CHECK(Rational(1, 2).sign() == 1);
  CHECK(Rational(-5).sign() == -1);
  CHECK(Rational(0).sign() == 0);
}

TEST_CASE("string forms") {
  CHECK(Rational(5).str() == "5");
  CHECK(Rational(-3, 7).str() == "-3/7");
  CHECK(Rational(5).fraction_str() == "5/1");
  CHECK(Rational(-3, 7).fraction_str() == "-3/7");
  CHECK(Rational(1, 2).str() == "1/2");

  CHECK(Rational::parse("5") == Rational(5));
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse(" 7/3 ") == Rational(7, 3));
  CHECK(Rational::parse("0") == Rational(0));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("pow") {
  CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow(Rational(7), 0) == Rational(1));
  CHECK(pow(Rational(0), 0) == Rational(1));
  CHECK_THROWS_AS(pow(Rational(2), -1), std::invalid_argument);
}

TEST_CASE("binomial coefficients via Pascal recurrence") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 10) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 1) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));

  // Pascal identity on a grid
  for (int n = 1; n <= 12; ++n) {
    for (int k = 1; k < n; ++k) {
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
  }
}
