#include "doctest.h"
#include "sympinv/matrix.hpp"

using namespace sympinv;

TEST_CASE("core matrix operations") {
  Field f3 = Field::prime(3);
  Mat a(f3, {{1, 1}, {0, 1}});
  CHECK(inverse(a) == Mat(f3, {{1, -1}, {0, 1}}));
  CHECK(rank(Mat::zero(f3, 3, 2)) == 0);
  CHECK(det(Mat(Field::rational(), {{0, 1}, {-1, 0}})).is_one());
  CHECK_THROWS_AS(inverse(Mat(f3, {{1, 1}, {1, 1}})), DomainError);
  CHECK(Mat::identity(f3, 0).rows() == 0);
  CHECK(inverse(Mat::identity(f3, 0)).rows() == 0);
  CHECK(det(Mat::identity(f3, 0)).is_one());
}

TEST_CASE("kernel, solve and subspaces") {
  Field q = Field::rational();
  Mat a(q, {{1, 2}, {2, 4}, {0, 1}});
  Mat k = left_kernel(a);
  REQUIRE(k.rows() == 1);
  CHECK((k * a).is_zero());
  auto x = solve_right(a, Mat(q, {{3}, {6}, {1}}));
  REQUIRE(x.has_value());
  CHECK(a * *x == Mat(q, {{3}, {6}, {1}}));
  CHECK_FALSE(solve_right(a, Mat(q, {{3}, {7}, {1}})).has_value());

  Subspace s = Subspace::span(Mat(q, {{1, 0, 0}, {0, 1, 0}}));
  Subspace t = Subspace::span(Mat(q, {{0, 1, 0}, {0, 0, 1}}));
  CHECK(s.intersect(t).dim() == 1);
  CHECK((s + t).dim() == 3);
  CHECK(s.intersect(t).contains(Mat(q, {{0, 5, 0}})));
}

TEST_CASE("random inverses and determinants") {
  Rng rng(7);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    for (int i = 0; i < 50; ++i) {
      std::size_t n = 1 + i % 6;
      Mat a = random_invertible(f, n, rng), b = random_matrix(f, n, n, rng);
      CHECK((a * inverse(a)).is_identity());
      CHECK(det(a * b) == det(a) * det(b));
      CHECK(rank(b) == n - left_kernel(b).rows());
    }
  }
}

TEST_CASE("companion matrix has the polynomial as characteristic polynomial") {
  Field f5 = Field::prime(5);
  Poly g(f5, {2, 3, 0, 1});
  Mat c = Mat::companion(g);
  CHECK(eval(g, c).is_zero());
}
