#include <catch2/catch_amalgamated.hpp>

#include "hlab/field.hpp"

using namespace hlab;

TEST_CASE("rationals stay in lowest terms") {
  Rational a(2, 6);
  CHECK(a == Rational(1, 3));
  CHECK(a.str() == "1/3");
  Rational b(-4, -8);
  CHECK(b.str() == "1/2");
  Rational c(3, -9);
  CHECK(c.str() == "-1/3");  // denominator kept positive
  CHECK((a + c).is_zero());
  CHECK((Rational(7, 3) * Rational(3, 7)) == Rational(1));
  CHECK(Rational(5, 4).inverse() == Rational(4, 5));
  CHECK_THROWS_AS(Rational(1, 2) / Rational(), Error);
}

TEST_CASE("rational parsing") {
  CHECK(Rational::parse("-3/6") == Rational(-1, 2));
  CHECK(Rational::parse("12") == Rational(12));
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
}

TEST_CASE("prime field arithmetic") {
  PrimeField F(5);
  auto a = F.from_long(3), b = F.from_long(4);
  CHECK((a + b).value() == 2);
  CHECK((a * b).value() == 2);
  CHECK((a - b).value() == 4);
  CHECK((-b).value() == 1);
  CHECK((a / b) * b == a);
  CHECK(F.from_long(-1).value() == 4);
  CHECK(F.from_rational(Rational(1, 2)).value() == 3);  // 2*3 = 1 mod 5
  CHECK_THROWS_AS(PrimeField(6), Error);
  CHECK_THROWS_AS(F.from_rational(Rational(1, 5)), Error);
}

TEST_CASE("mixing prime-field moduli is an error") {
  PrimeField F5(5), F7(7);
  auto a = F5.from_long(2), b = F7.from_long(2);
  CHECK_THROWS_AS(a + b, FieldMismatchError);
  CHECK_THROWS_AS(a * b, FieldMismatchError);
  // unattached zero combines with anything
  CHECK((FpScalar() + a) == a);
  CHECK((a * FpScalar()).is_zero());
}

TEST_CASE("roots of unity in prime fields") {
  PrimeField F5(5);
  auto z = F5.primitive_root_of_unity(2);
  CHECK(z.value() == 4);
  PrimeField F7(7);
  auto w = F7.primitive_root_of_unity(3);
  CHECK(PrimeField::pow(w, 3).value() == 1);
  CHECK(w.value() != 1);
  CHECK(PrimeField::pow(w, 2).value() != 1);
  CHECK_THROWS_AS(F5.primitive_root_of_unity(3), Error);
  PrimeField big(1000003);
  auto u = big.primitive_root_of_unity(2);
  CHECK(u.value() == 1000002);
}
