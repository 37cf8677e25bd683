#include <doctest.h>

#include "ii/random.hpp"
#include "ii/rational.hpp"
#include "ii/scalar.hpp"

using namespace ii;

TEST_CASE("normalization and basic arithmetic") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-2, 4) == Rational(1, -2));
  CHECK(Rational(0, 7) == Rational(0));
  CHECK(Rational(3, 4) + Rational(1, 4) == Rational(1));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  CHECK(Rational(2, 3) * Rational(9, 4) == Rational(3, 2));
  CHECK(Rational(1, 3) / Rational(2, 5) == Rational(5, 6));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(abs(Rational(-5, 3)) == Rational(5, 3));
  CHECK_THROWS_AS(Rational(1, 0), error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), error);
}

TEST_CASE("power and halving helpers") {
  CHECK(pow_int(Rational(2, 3), 3) == Rational(8, 27));
  CHECK(pow_int(Rational(2), -2) == Rational(1, 4));
  CHECK(div_pow2(Rational(3), 2) == Rational(3, 4));
  CHECK(div_pow2(Rational(4), 2) == Rational(1));
  CHECK(div_pow2(Rational(0), 10) == Rational(0));
}

TEST_CASE("string round trips") {
  CHECK(to_string(Rational(-7, 3)) == "-7/3");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-7/3") == Rational(-7, 3));
  CHECK(parse_rational("12") == Rational(12));
  CHECK(parse_rational("6/-4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("x/2"), error);
  CHECK_THROWS_AS(parse_rational(""), error);
}

TEST_CASE("double conversion accuracy") {
  CHECK(Rational(1, 2).to_double() == 0.5);
  CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3).epsilon(1e-15));
  Rational big = pow_int(Rational(10), 30) + Rational(1);
  CHECK(big.to_double() == doctest::Approx(1e30).epsilon(1e-12));
}

TEST_CASE("overflow is detected, not wrapped") {
  Rational huge = pow_int(Rational(10), 37);
  CHECK_THROWS_AS(huge * huge, error);
}

TEST_CASE("field laws on random values") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a - a == Rational(0));
    if (!b.is_zero()) CHECK(a / b * b == a);
  }
}

TEST_CASE("complex scalar arithmetic") {
  Scalar i(Rational(0), Rational(1));
  CHECK(i * i == Scalar(-1));
  Scalar z(Rational(3), Rational(4));
  CHECK(z.abs2() == Rational(25));
  CHECK(z.abs_double() == doctest::Approx(5.0));
  CHECK(z.conj() == Scalar(Rational(3), Rational(-4)));
  CHECK((z * z.conj()) == Scalar(25));
  CHECK(!z.abs_rational().has_value());
  CHECK(Scalar(Rational(0), Rational(-2)).abs_rational() == Rational(2));
}
