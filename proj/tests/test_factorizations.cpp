#include "doctest.h"

#include "sympinv/symplectic.hpp"

using namespace sympinv;

namespace {

Mat conjugate_random(const Mat& m, std::size_t n, Rng& rng) {
  const Field& f = m.field();
  Mat c = random_symplectic(Mat::standard_symplectic(f, n), rng);
  return inverse(c) * m * c;
}

Mat random_involution(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> d;
  std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < n; ++i) d.push_back(i < k ? Scalar::one(f) : -Scalar::one(f));
  std::vector<Scalar> dd = d;
  dd.insert(dd.end(), d.begin(), d.end());
  return conjugate_random(Mat::diag(dd), n, rng);
}

Mat random_skew_involution(const Field& f, std::size_t n, Rng& rng) {
  return conjugate_random(Mat::standard_symplectic(f, n), n, rng);
}

}  // namespace

TEST_CASE("two skew involutions on a hyperbolic block") {
  Rng rng(43);
  Field f = Field::prime(7);
  for (int k = 0; k < 10; ++k) {
    Mat q = random_invertible(f, 3, rng);
    auto [e1, e2] = sp_two_skew_hyperbolic(q);
    Mat id = Mat::identity(f, 6);
    CHECK(e1 * e1 == -id);
    CHECK(e2 * e2 == -id);
    CHECK(e1 * e2 == direct_sum(q, inverse(q).transpose()));
    CHECK(is_symplectic(e1, Mat::standard_symplectic(f, 3)));
  }
}

TEST_CASE("involution times skew involution on a hyperbolic block") {
  Rng rng(47);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    int found = 0;
    for (int k = 0; k < 20; ++k) {
      std::size_t n = 2 + 2 * (k % 2);
      // A = S H with S an involution and H a skew involution in GL(n).
      std::vector<Scalar> d;
      for (std::size_t i = 0; i < n; ++i) d.push_back(rng() % 2 ? Scalar::one(f) : -Scalar::one(f));
      Mat r1 = random_invertible(f, n, rng), r2 = random_invertible(f, n, rng);
      Mat s = inverse(r1) * Mat::diag(d) * r1;
      Mat h = inverse(r2) * Mat::standard_symplectic(f, n / 2) * r2;
      Mat a = k % 4 == 3 ? Mat(random_invertible(f, n, rng)) : Mat(s * h);
      auto r = sp_inv_skew_hyperbolic(a);
      bool odd_minus_one = false;
      for (auto [t, m] : linear_elementary_divisors(a * a, -Scalar::one(f))) odd_minus_one |= t % 2 == 1;
      if (k % 4 != 3 && !odd_minus_one) REQUIRE(r);
      if (!r) continue;
      ++found;
      Mat id = Mat::identity(f, 2 * n);
      CHECK(r->first * r->first == id);
      CHECK(r->second * r->second == -id);
      CHECK(r->first * r->second == direct_sum(a, inverse(a).transpose()));
      CHECK(is_symplectic(r->first, Mat::standard_symplectic(f, n)));
      CHECK(is_symplectic(r->second, Mat::standard_symplectic(f, n)));
    }
    CHECK(found >= 5);
  }
}

TEST_CASE("bireflection witnesses for products of two involutions") {
  Rng rng(53);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {2, 3, 4}) {
      for (int k = 0; k < 6; ++k) {
        auto phi = SymplecticElement::standard(random_involution(f, n, rng) * random_involution(f, n, rng));
        auto w = bireflection_witness(phi, rng, 200000);
        REQUIRE(w);
        CHECK(w->first * w->second == phi.matrix());
      }
    }
  }
}

TEST_CASE("skew reversers for products of two skew involutions") {
  Rng rng(59);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {2, 3, 4}) {
      for (int k = 0; k < 6; ++k) {
        Mat a = random_skew_involution(f, n, rng) * random_skew_involution(f, n, rng);
        auto phi = SymplecticElement::standard(a);
        auto eta = skew_reverser(phi, rng, 200000);
        REQUIRE(eta);
        CHECK(*eta * *eta == -Mat::identity(f, 2 * n));
        CHECK(inverse(*eta) * a * *eta == inverse(a));
      }
    }
  }
}

TEST_CASE("negating involutions for involution times skew involution") {
  Rng rng(61);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {1, 2, 3, 4}) {
      for (int k = 0; k < 6; ++k) {
        Mat a = random_involution(f, n, rng) * random_skew_involution(f, n, rng);
        auto phi = SymplecticElement::standard(a);
        auto sigma = negating_conjugator(phi, true, rng, 200000);
        REQUIRE(sigma);
        CHECK(*sigma * *sigma == Mat::identity(f, 2 * n));
        CHECK(*sigma * a * *sigma == -inverse(a));
        CHECK(is_symplectic(*sigma * a, phi.gram()));
      }
    }
  }
}

namespace {

SymplecticElement sum(const SymplecticElement& a, const SymplecticElement& b) {
  return SymplecticElement(direct_sum(a.matrix(), b.matrix()), direct_sum(a.gram(), b.gram()));
}

void check_skew_reverser(const SymplecticElement& phi, const Mat& eta) {
  CHECK(eta * eta == -Mat::identity(phi.field(), phi.dim()));
  CHECK(is_symplectic(eta, phi.gram()));
  CHECK(inverse(eta) * phi.matrix() * eta == inverse(phi.matrix()));
}

}  // namespace

TEST_CASE("skew reversers on pairs of unipotent Jordan blocks") {
  Rng rng(67);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    Scalar one = Scalar::one(f);
    Poly x1 = Poly(f, {-1, 1});
    for (int e : {2, 4}) {
      auto u1 = symplectic_realization(x1.pow(e), rng, one);
      auto u2 = symplectic_realization(x1.pow(e), rng, square_class(-one));
      REQUIRE(u1);
      REQUIRE(u2);
      CHECK(wall_form(*u1).theta_class != wall_form(*u2).theta_class);
      for (const auto& phi : {sum(*u1, *u1), sum(*u1, *u2), sum(*u2, *u2), sum(u1->negate(), u2->negate())}) {
        auto eta = skew_reverser(phi, rng, 200000);
        REQUIRE(eta);
        check_skew_reverser(phi, *eta);
      }
      CHECK_FALSE(skew_reverser(*u1, rng, 200000));
    }
  }
}

TEST_CASE("negating conjugators on (x^2 + 1)^2 blocks") {
  Rng rng(71);
  Field f = Field::prime(3);
  Poly h = Poly(f, {1, 0, 1}).pow(2);
  auto psi = symplectic_realization(h, rng);
  REQUIRE(psi);
  const Mat& a = psi->matrix();
  auto alpha = negating_conjugator(*psi, false, rng, 200000);
  REQUIRE(alpha);
  CHECK(is_symplectic(*alpha, psi->gram()));
  CHECK(inverse(*alpha) * a * *alpha == -inverse(a));
  CHECK_FALSE(negating_conjugator(*psi, true, rng, 200000));

  auto two = sum(*psi, *psi);
  auto sigma = negating_conjugator(two, true, rng, 200000);
  REQUIRE(sigma);
  CHECK(*sigma * *sigma == Mat::identity(f, 8));
  CHECK(*sigma * two.matrix() * *sigma == -inverse(two.matrix()));
}
