#include "doctest.h"
#include "sympinv/scalar.hpp"

using namespace sympinv;

TEST_CASE("prime field arithmetic") {
  Field f3 = Field::prime(3);
  CHECK(Scalar(f3, 2).inv() == Scalar(f3, 2));
  CHECK((-Scalar::zero(f3)).is_zero());
  CHECK(Scalar(f3, -1) == Scalar(f3, 2));
  CHECK_THROWS_AS(Scalar::zero(f3).inv(), DivisionByZero);
  CHECK_THROWS_AS(Scalar(f3, 1) + Scalar(Field::prime(5), 1), FieldMismatch);
}

TEST_CASE("rational arithmetic") {
  Field q = Field::rational();
  Scalar a = Scalar::parse(q, "1/2"), b = Scalar::parse(q, "1/3");
  CHECK((a + b).to_string() == "5/6");
  CHECK((-Scalar::zero(q)).is_zero());
  CHECK(Scalar::parse(q, "4/-6").to_string() == "-2/3");
  CHECK_THROWS_AS(Scalar::parse(q, "x"), ParseError);
}

TEST_CASE("field descriptor rejects characteristic 2 and composites") {
  CHECK_THROWS_AS(Field::prime(2), DomainError);
  CHECK_THROWS_AS(Field::prime(9), DomainError);
  CHECK(Field::prime(7).minus_one_nonsquare());
  CHECK_FALSE(Field::prime(13).minus_one_nonsquare());
}

TEST_CASE("inverse property") {
  for (std::int64_t p : {3, 5, 7, 11, 13}) {
    Field f = Field::prime(p);
    for (auto& a : field_elements(f))
      if (!a.is_zero()) CHECK((a * a.inv()).is_one());
  }
}

TEST_CASE("squares") {
  CHECK_FALSE(is_square(Scalar(Field::prime(3), -1)));
  CHECK(is_square(Scalar(Field::prime(5), -1)));
  CHECK(is_square(Scalar::parse(Field::rational(), "4/9")));
  CHECK_FALSE(is_square(Scalar::parse(Field::rational(), "2/9")));
  CHECK_THROWS_AS(is_square(Scalar::zero(Field::prime(3))), DomainError);
}

TEST_CASE("Euler criterion matches exhaustive search for p <= 31") {
  for (std::int64_t p = 3; p <= 31; ++p) {
    if (!is_prime_number(p)) continue;
    Field f = Field::prime(p);
    auto elems = field_elements(f);
    for (auto& a : elems) {
      if (a.is_zero()) continue;
      bool found = false;
      for (auto& b : elems) found = found || (b * b == a);
      CHECK(is_square(a) == found);
      auto r = sqrt(a);
      CHECK(r.has_value() == found);
      if (r) CHECK(*r * *r == a);
    }
    CHECK(is_square(Scalar(f, -1)) == (p % 4 == 1));
  }
}

TEST_CASE("square classes") {
  Field f7 = Field::prime(7);
  CHECK(square_class(Scalar(f7, 2)) == Scalar(f7, 1));
  CHECK(square_class(Scalar(f7, 6)) == Scalar(f7, 3));
  Field q = Field::rational();
  CHECK(square_class(Scalar::parse(q, "-12/5")).to_string() == "-15");
}
