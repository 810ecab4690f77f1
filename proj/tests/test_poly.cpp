#include "doctest.h"
#include "sympinv/poly.hpp"

using namespace sympinv;

namespace {

// All monic polynomials of the given degree over GF(p).
std::vector<Poly> monics(Field f, int degree) {
  std::vector<Poly> out;
  std::int64_t p = f.p(), total = 1;
  for (int i = 0; i < degree; ++i) total *= p;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<Scalar> c;
    std::int64_t k = code;
    for (int i = 0; i < degree; ++i) {
      c.emplace_back(f, k % p);
      k /= p;
    }
    c.push_back(Scalar::one(f));
    out.emplace_back(f, c);
  }
  return out;
}

// Irreducible iff no monic divisor of degree 1..deg/2.
bool irreducible_by_trial_division(const Poly& g) {
  for (int d = 1; 2 * d <= g.degree(); ++d)
    for (auto& h : monics(g.field(), d))
      if ((g % h).is_zero()) return false;
  return g.degree() >= 1;
}

Poly random_poly(Field f, int degree, Rng& rng) {
  std::vector<Scalar> c;
  for (int i = 0; i < degree; ++i) c.push_back(random_scalar(f, rng));
  Scalar lead = random_scalar(f, rng);
  if (lead.is_zero()) lead = Scalar::one(f);
  c.push_back(lead);
  return Poly(f, c);
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  Field q = Field::rational();
  Poly x2m1(q, {-1, 0, 1}), xm1(q, {-1, 1});
  CHECK(gcd(x2m1, xm1) == xm1);
  Field f3 = Field::prime(3);
  auto [quo, rem] = divmod(Poly(f3, {0, 0, 0, 1}), Poly(f3, {0, 0, 1}));
  CHECK(quo == Poly::x(f3));
  CHECK(rem.is_zero());
  CHECK(Poly(f3, {1, 1}) * Poly(f3, {2, 1}) == Poly(f3, {2, 0, 1}));
  CHECK_THROWS_AS(divmod(Poly(f3, {1}), Poly(f3)), DivisionByZero);
}

TEST_CASE("reciprocal") {
  Field f3 = Field::prime(3), f7 = Field::prime(7);
  CHECK(reciprocal(Poly(f7, {-3, 1})) == Poly::linear(Scalar(f7, 3).inv()));
  CHECK(reciprocal(Poly(f3, {1, 0, 1})) == Poly(f3, {1, 0, 1}));
  // x^2 + x + 2 -> 2^{-1} (2x^2 + x + 1) = x^2 + 2x + 2
  CHECK(reciprocal(Poly(f3, {2, 1, 1})) == Poly(f3, {2, 2, 1}));
  CHECK_THROWS_AS(reciprocal(Poly(f3, {0, 1})), DomainError);
  Rng rng(11);
  for (int i = 0; i < 100; ++i) {
    Poly g = random_poly(f7, 1 + i % 6, rng).monic();
    if (g.coeff(0).is_zero()) continue;
    CHECK(reciprocal(reciprocal(g)) == g);
  }
}

TEST_CASE("Dickson transform") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  Scalar one = Scalar::one(f5);
  Scalar d(f5, 2);
  CHECK(dickson_transform(Poly::linear(d), one) == Poly(f5, {1, -2, 1}));
  CHECK(dickson_transform(Poly::x(f5), one) == Poly(f5, {1, 0, 1}));
  CHECK(dickson_transform(Poly(f3, {0, 0, 1}), Scalar::one(f3)) == Poly(f3, {1, 0, 2, 0, 1}));
  // (x - 2)^D = (x - 1)^2 and (x + 2)^D = (x + 1)^2; x -+ 1 map to x^2 -+ x + 1.
  CHECK(dickson_transform(Poly(f5, {-2, 1}), one) == Poly(f5, {-1, 1}).pow(2));
  CHECK(dickson_transform(Poly(f5, {2, 1}), one) == Poly(f5, {1, 1}).pow(2));
  CHECK(dickson_transform(Poly(f5, {-1, 1}), one) == Poly(f5, {1, -1, 1}));
  CHECK_THROWS_AS(dickson_transform(Poly(f5, {1, 2}), one), DomainError);

  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    Scalar lambda = random_scalar(f5, rng);
    if (lambda.is_zero()) lambda = one;
    Poly a = random_poly(f5, 1 + i % 4, rng).monic(), b = random_poly(f5, 1 + i % 3, rng).monic();
    Poly da = dickson_transform(a, lambda);
    CHECK(da.degree() == 2 * a.degree());
    CHECK(dickson_transform(a * b, lambda) == da * dickson_transform(b, lambda));
    auto back = inverse_dickson(da, lambda);
    REQUIRE(back.has_value());
    CHECK(*back == a);
  }
  CHECK_FALSE(inverse_dickson(Poly(f5, {0, 1, 0, 0, 1}), one).has_value());
}

TEST_CASE("factorization examples") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  auto a = factorize(Poly(f3, {1, 0, 1}));
  REQUIRE(a.factors.size() == 1);
  CHECK(a.factors[0].exponent == 1);
  auto b = factorize(Poly(f5, {1, 0, 1}));
  REQUIRE(b.factors.size() == 2);
  CHECK(b.factors[0].base == Poly(f5, {2, 1}));
  CHECK(b.factors[1].base == Poly(f5, {3, 1}));

  Poly x4m1(f3, {-1, 0, 0, 0, 1});
  auto c = factorize(x4m1);
  REQUIRE(c.factors.size() == 3);
  CHECK(c.product() == x4m1);
  for (auto& fac : c.factors) {
    CHECK(fac.exponent == 1);
    CHECK(irreducible_by_trial_division(fac.base));
  }
  std::vector<Poly> bases;
  for (auto& fac : c.factors) bases.push_back(fac.base);
  CHECK(std::find(bases.begin(), bases.end(), Poly(f3, {-1, 1})) != bases.end());
  CHECK(std::find(bases.begin(), bases.end(), Poly(f3, {1, 1})) != bases.end());
  CHECK(std::find(bases.begin(), bases.end(), Poly(f3, {1, 0, 1})) != bases.end());
  CHECK_THROWS_AS(factorize(Poly(Field::rational(), {1, 0, 1})), UnsupportedField);
}

TEST_CASE("radical") {
  Field f3 = Field::prime(3);
  CHECK(radical(Poly(f3, {-1, 1}).pow(4)) == Poly(f3, {-1, 1}));
  CHECK(radical(Poly(f3, {1, 0, 1})) == Poly(f3, {1, 0, 1}));
  Poly g = Poly(f3, {1, 0, 1}).pow(2) * Poly(f3, {-1, 1});
  CHECK(radical(g) == Poly(f3, {1, 0, 1}) * Poly(f3, {-1, 1}));
}

TEST_CASE("random factorizations reconstruct and factors are irreducible") {
  Rng rng(2024);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 60; ++i) {
      Poly g = random_poly(f, 1 + i % 8, rng);
      if (i % 5 == 0) g = g * g;
      auto fac = factorize(g, rng);
      CHECK(fac.product() == g);
      for (std::size_t k = 0; k < fac.factors.size(); ++k) {
        CHECK(fac.factors[k].base.is_monic());
        CHECK(is_irreducible(fac.factors[k].base));
        if (fac.factors[k].base.degree() <= 4) CHECK(irreducible_by_trial_division(fac.factors[k].base));
        for (std::size_t l = k + 1; l < fac.factors.size(); ++l) CHECK(fac.factors[k].base != fac.factors[l].base);
      }
    }
  }
}

TEST_CASE("Rabin test agrees with trial division on all small monics") {
  for (std::int64_t p : {3, 5}) {
    Field f = Field::prime(p);
    for (int d = 1; d <= 4; ++d)
      for (auto& g : monics(f, d)) CHECK(is_irreducible(g) == irreducible_by_trial_division(g));
  }
}
