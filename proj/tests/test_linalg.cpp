#include "doctest.h"
#include "sympinv/linalg.hpp"

using namespace sympinv;

namespace {

Mat jordan_block(const Scalar& c, std::size_t n) {
  Mat j = Mat::scalar(c, n);
  for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = Scalar::one(c.field());
  return j;
}

// Invariant factors read off a rational canonical form with transform.
std::vector<Poly> factors_via_cyclic(const Mat& a, Rng& rng) {
  auto cd = cyclic_decomposition(a, rng);
  std::vector<Mat> blocks;
  for (auto& h : cd.factors) blocks.push_back(Mat::companion(h));
  if (!blocks.empty()) {
    CHECK(cd.basis * a == direct_sum(blocks) * cd.basis);
    CHECK(is_invertible(cd.basis));
  }
  std::vector<Poly> out(cd.factors.rbegin(), cd.factors.rend());
  return out;
}

Mat dickson_block(const Mat& d, const Scalar& lambda) {
  const std::size_t m = d.rows();
  Field f = d.field();
  return block2x2(Mat::zero(f, m, m), Mat::identity(f, m), -Mat::scalar(lambda, m), d);
}

}  // namespace

TEST_CASE("path, fix and negative spaces") {
  Field f3 = Field::prime(3);
  Mat id = Mat::identity(f3, 2);
  CHECK(spaces(id, SpaceKind::fix).dim() == 2);
  CHECK(spaces(id, SpaceKind::bahn).dim() == 0);
  Mat t(f3, {{1, 1}, {0, 1}});
  CHECK(spaces(t, SpaceKind::bahn).dim() == 1);
  CHECK(spaces(t, SpaceKind::fix).dim() == 1);
  CHECK(spaces(t, SpaceKind::fix, kStable).dim() == 2);
  CHECK(spaces(-id, SpaceKind::neg).dim() == 2);
}

TEST_CASE("invariant factor examples") {
  Field f3 = Field::prime(3);
  auto inv = invariant_factors(Mat::identity(f3, 2));
  REQUIRE(inv.invariant_factors.size() == 2);
  CHECK(inv.invariant_factors[0] == Poly(f3, {-1, 1}));
  CHECK(inv.invariant_factors[1] == Poly(f3, {-1, 1}));
  Poly g(f3, {1, 2, 0, 1, 1});
  auto c = invariant_factors(Mat::companion(g));
  REQUIRE(c.invariant_factors.size() == 1);
  CHECK(c.invariant_factors[0] == g);
  for (std::int64_t d = 0; d < 3; ++d) {
    auto r = invariant_factors(Mat(f3, {{0, 1}, {-1, d}}));
    REQUIRE(r.invariant_factors.size() == 1);
    CHECK(r.invariant_factors[0] == dickson_transform(Poly(f3, {-d, 1}), Scalar::one(f3)));
  }
}

TEST_CASE("Smith form and cyclic decomposition agree and are similarity invariants") {
  Rng rng(99);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + i % 7;
      Mat a = random_matrix(f, n, n, rng);
      if (i % 3 == 0) a = direct_sum(a.block(0, 0, (n + 1) / 2, (n + 1) / 2), a.block(0, 0, n / 2, n / 2));
      if (i % 4 == 1) a = direct_sum(jordan_block(Scalar(f, 1), n), Mat::identity(f, 1));
      auto sm = invariant_factors(a).invariant_factors;
      CHECK(sm == factors_via_cyclic(a, rng));
      Mat r = random_invertible(f, a.rows(), rng);
      CHECK(invariant_factors(inverse(r) * a * r).invariant_factors == sm);
      CHECK(eval(sm.back(), a).is_zero());
      CHECK(minimal_polynomial(a) == sm.back());
    }
  }
  Field q = Field::rational();
  for (int i = 0; i < 20; ++i) {
    std::size_t n = 1 + i % 5;
    Mat a = random_matrix(q, n, n, rng);
    if (i % 2) a = direct_sum(a, a);
    CHECK(invariant_factors(a).invariant_factors == factors_via_cyclic(a, rng));
  }
}

TEST_CASE("linear elementary divisors") {
  Field f3 = Field::prime(3);
  Scalar one = Scalar::one(f3);
  CHECK(linear_elementary_divisors(Mat::identity(f3, 4), one) == std::vector<std::pair<int, int>>{{1, 4}});
  CHECK(linear_elementary_divisors(jordan_block(Scalar(f3, 2), 2), Scalar(f3, 2)) ==
        std::vector<std::pair<int, int>>{{2, 1}});
  Mat j2 = jordan_block(one, 2);
  CHECK(linear_elementary_divisors(direct_sum(j2, j2), one) == std::vector<std::pair<int, int>>{{2, 2}});

  Rng rng(4);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 30; ++i) {
      std::size_t n = 2 + i % 6;
      Mat a = i % 2 ? random_matrix(f, n, n, rng)
                    : direct_sum(jordan_block(Scalar(f, i % p), 1 + i % 3), jordan_block(Scalar(f, i % p), 1 + i % 2));
      Scalar c(f, i % p);
      std::vector<std::pair<int, int>> expect;
      auto inv = invariant_factors(a);
      for (auto& ed : *inv.elementary_divisors)
        if (ed.base == Poly::linear(c)) expect.emplace_back(ed.exponent, ed.multiplicity);
      CHECK(linear_elementary_divisors(a, c) == expect);
    }
  }
}

TEST_CASE("similarity") {
  Field f3 = Field::prime(3), f7 = Field::prime(7);
  Mat t(f3, {{1, 1}, {0, 1}});
  CHECK(is_similar(t, t));
  CHECK(is_similar(t, inverse(t)));
  CHECK_FALSE(is_similar(Mat(f7, {{2, 0}, {0, 1}}), Mat(f7, {{4, 0}, {0, 1}})));
}

TEST_CASE("Wonenburger involutions and reversal conjugators") {
  Field f3 = Field::prime(3), f7 = Field::prime(7);
  auto idw = wonenburger_involutions(Mat::identity(f3, 3));
  REQUIRE(idw);
  CHECK(idw->s.is_identity());
  CHECK(idw->t.is_identity());
  Mat rot(f3, {{0, 1}, {-1, 0}});
  auto w = wonenburger_involutions(rot);
  REQUIRE(w);
  CHECK((w->s * w->s).is_identity());
  CHECK((w->t * w->t).is_identity());
  CHECK(w->s * w->t == rot);
  auto r = gl_reversal_conjugator(rot);
  REQUIRE(r);
  CHECK(inverse(*r) * rot * *r == inverse(rot));
  CHECK_FALSE(gl_reversal_conjugator(Mat(f7, {{2, 0}, {0, 1}})).has_value());

  Rng rng(12);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 40; ++i) {
      std::size_t n = 1 + i % 6;
      Mat a = random_invertible(f, n, rng);
      if (i % 2) a = direct_sum(a, inverse(a));
      auto res = wonenburger_involutions(a);
      CHECK(res.has_value() == is_similar(a, inverse(a)));
      if (res) {
        CHECK((res->s * res->s).is_identity());
        CHECK((res->t * res->t).is_identity());
        CHECK(res->s * res->t == a);
      }
    }
  }
}

TEST_CASE("symmetric pair factorization") {
  Rng rng(3);
  Field f7 = Field::prime(7), f3 = Field::prime(3);
  std::vector<Mat> inputs{Mat(f3, {{0, 1}, {-1, 0}}), Mat::companion(Poly(f7, {1, 1, 1})), Mat(f7, {{2, 3}, {3, 2}})};
  for (int i = 0; i < 40; ++i) inputs.push_back(random_invertible(i % 2 ? f3 : f7, 1 + i % 6, rng));
  inputs.push_back(direct_sum(Mat::identity(f3, 2), Mat(f3, {{1, 1}, {0, 1}})));
  for (auto& q : inputs) {
    auto [s, t] = symmetric_pair_factorization(q);
    CHECK(s.is_symmetric());
    CHECK(t.is_symmetric());
    CHECK(is_invertible(s));
    CHECK(s * t == q);
  }
  Mat sym(f7, {{2, 3}, {3, 2}});
  CHECK(symmetric_pair_factorization(sym).first == sym);
}

TEST_CASE("Dickson normal form") {
  Field f3 = Field::prime(3), f5 = Field::prime(5);
  Scalar one3 = Scalar::one(f3);
  CHECK(skew_cyclic_normal_form(Mat(f3, {{0, 1}, {-1, 0}}), one3) == Mat::zero(f3, 1, 1));
  for (std::int64_t d = 0; d < 5; ++d) {
    Mat a = Mat::companion(dickson_transform(Poly(f5, {-d, 1}), Scalar::one(f5)));
    CHECK(skew_cyclic_normal_form(a, Scalar::one(f5)) == Mat(f5, {{d}}));
  }
  // char (x^2+1)^2: g(x + 1/x) x^2 = (x^2+1)^2 forces g = x^2.
  Mat a = Mat::companion(Poly(f3, {1, 0, 1}).pow(2));
  Mat d = skew_cyclic_normal_form(a, one3);
  CHECK(is_similar(dickson_block(d, one3), a));
  CHECK(d == Mat::companion(Poly(f3, {0, 0, 1})));
  CHECK_THROWS_AS(skew_cyclic_normal_form(Mat::identity(f3, 2), one3), DomainError);
}

TEST_CASE("Dickson property of the block matrix") {
  Rng rng(17);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 40; ++i) {
      Mat d = random_matrix(f, 1 + i % 6, 1 + i % 6, rng);
      std::vector<Poly> expect;
      for (auto& g : invariant_factors(d).invariant_factors) expect.push_back(dickson_transform(g, Scalar::one(f)));
      CHECK(invariant_factors(dickson_block(d, Scalar::one(f))).invariant_factors == expect);
    }
  }
}

TEST_CASE("Jordan-Chevalley semisimple part") {
  Field f3 = Field::prime(3);
  Mat diag = Mat::diag({Scalar(f3, 1), Scalar(f3, 2)});
  CHECK(jordan_chevalley(diag).semisimple == diag);
  CHECK(jordan_chevalley(Mat(f3, {{1, 1}, {0, 1}})).semisimple.is_identity());
  Mat a = Mat::companion(Poly(f3, {1, 0, 1}).pow(2));
  auto jc = jordan_chevalley(a);
  CHECK(jc.semisimple * jc.semisimple == -Mat::identity(f3, 4));
  CHECK(jc.semisimple * a == a * jc.semisimple);
  CHECK(eval(jc.poly, a) == jc.semisimple);
  Mat unip = a * inverse(jc.semisimple) - Mat::identity(f3, 4);
  CHECK(unip.pow(4).is_zero());

  Rng rng(8);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 20; ++i) {
      Mat m = random_matrix(f, 2 + i % 3, 2 + i % 3, rng);
      m = direct_sum(m, m);
      auto r = jordan_chevalley(m);
      CHECK(r.semisimple * m == m * r.semisimple);
      Poly rad = radical(minimal_polynomial(m));
      CHECK(eval(rad, r.semisimple).is_zero());
      CHECK((m - r.semisimple).pow(static_cast<std::int64_t>(m.rows())).is_zero());
    }
  }
}

TEST_CASE("involution times skew-involution in GL") {
  Field f3 = Field::prime(3), f7 = Field::prime(7);
  Mat h0(f3, {{0, 1}, {-1, 0}});
  auto a = gl_inv_skew_factorization(h0);
  REQUIRE(a);
  CHECK(a->first.is_identity());
  Mat swap(f3, {{0, 1}, {1, 0}});
  auto b = gl_inv_skew_factorization(swap);
  REQUIRE(b);
  CHECK((b->first * b->first).is_identity());
  CHECK(b->second * b->second == -Mat::identity(f3, 2));
  CHECK(b->first * b->second == swap);
  CHECK_FALSE(gl_inv_skew_factorization(Mat(f7, {{2, 0}, {0, 1}})).has_value());

  Rng rng(21);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 30; ++i) {
      std::size_t m = 1 + i % 3;
      Mat d = random_matrix(f, m, m, rng);
      Mat nf = block2x2(Mat::zero(f, m, m), Mat::identity(f, m), Mat::identity(f, m), d);
      Mat r = random_invertible(f, 2 * m, rng);
      Mat pm = inverse(r) * nf * r;
      auto res = gl_inv_skew_factorization(pm);
      REQUIRE(res);
      auto [s, h] = *res;
      CHECK((s * s).is_identity());
      CHECK(h * h == -Mat::identity(f, 2 * m));
      CHECK(s * h == pm);
      CHECK(inverse(s) * pm * s == -inverse(pm));
    }
  }
}

TEST_CASE("skew reverser on cyclic blocks") {
  Field f3 = Field::prime(3), f7 = Field::prime(7);
  Rng rng(1);
  std::vector<Mat> inputs{Mat(f3, {{0, 1}, {-1, 0}}), Mat::companion(Poly(f3, {1, 0, 1}).pow(2)),
                          Mat::companion(Poly(f7, {1, 0, 1}).pow(3)),
                          Mat::companion(Poly(f7, {1, 3, 1})), Mat::companion(Poly(f3, {1, 1, 1, 1, 1}))};
  for (auto& a : inputs) {
    REQUIRE(is_irreducible(factorize(minimal_polynomial(a)).factors[0].base));
    auto eta = skew_reverser_cyclic(a, rng);
    REQUIRE(eta);
    Mat id = Mat::identity(a.field(), a.rows());
    CHECK(*eta * *eta == -id);
    CHECK(*eta * a * inverse(*eta) == inverse(a));
    Mat e1 = a * *eta;
    CHECK(e1 * e1 == -id);
  }
  CHECK_THROWS_AS(skew_reverser_cyclic(Mat::companion(Poly(f3, {1, 2, 0, 1})), rng), DomainError);
}

TEST_CASE("antisymmetric times symmetric when A ~ -A") {
  Rng rng(8);
  for (std::int64_t p : {3, 7, 11}) {
    Field f = Field::prime(p);
    std::vector<Mat> blocks{Mat::companion(Poly(f, {2, 0, 1})), Mat::companion(Poly(f, {1, 0, 3, 0, 1})),
                            Mat::companion(Poly(f, {2, 0, 1})), Mat::companion(Poly(f, {-1, 0, 1}).pow(2))};
    Mat a0 = direct_sum(blocks);
    Mat r = random_invertible(f, a0.rows(), rng);
    Mat a = inverse(r) * a0 * r;
    auto res = antisymmetric_symmetric_factorization(a);
    REQUIRE(res);
    auto [h, s] = *res;
    CHECK(h.is_antisymmetric());
    CHECK(s.is_symmetric());
    CHECK(is_invertible(h));
    CHECK(is_invertible(s));
    CHECK(h * s == a);
  }
  Field f3 = Field::prime(3);
  CHECK_FALSE(antisymmetric_symmetric_factorization(Mat::companion(Poly(f3, {1, 1, 1}))));
}
