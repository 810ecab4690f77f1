#include "doctest.h"

#include "sympinv/symplectic.hpp"

using namespace sympinv;

namespace {

SymplecticElement random_element(const Field& f, std::size_t n, Rng& rng) {
  return SymplecticElement::standard(random_symplectic(Mat::standard_symplectic(f, n), rng));
}

Mat random_involution(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> d;
  std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < n; ++i) d.push_back(i < k ? Scalar::one(f) : -Scalar::one(f));
  std::vector<Scalar> dd = d;
  dd.insert(dd.end(), d.begin(), d.end());
  Mat g = Mat::standard_symplectic(f, n);
  Mat a = random_symplectic(g, rng);
  return inverse(a) * Mat::diag(dd) * a;
}

void check_lagrangians(const SymplecticElement& phi, const Mat& l1, const Mat& l2) {
  const std::size_t n = phi.dim() / 2;
  CHECK(l1.rows() == n);
  CHECK(l2.rows() == n);
  CHECK((l1 * phi.gram() * l1.transpose()).is_zero());
  CHECK((l2 * phi.gram() * l2.transpose()).is_zero());
  CHECK(rank(vstack(l1, l2)) == phi.dim());
  CHECK(Subspace::span(l1).contains(Subspace::span(l1 * phi.matrix())));
  CHECK(Subspace::span(l2).contains(Subspace::span(l2 * phi.matrix())));
}

}  // namespace

TEST_CASE("orthogonal decomposition pieces") {
  Rng rng(29);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {1, 2, 3}) {
      for (int k = 0; k < 12; ++k) {
        auto phi = k % 3 == 0 ? SymplecticElement::standard(random_involution(f, n, rng) * random_involution(f, n, rng))
                              : random_element(f, n, rng);
        auto dec = orthogonal_decomposition(phi, rng);
        std::size_t total = 0;
        Mat all(f, 0, phi.dim());
        for (std::size_t i = 0; i < dec.pieces.size(); ++i) {
          const Mat& b = dec.pieces[i].basis;
          total += b.rows();
          all = vstack(all, b);
          CHECK(Subspace::span(b).contains(Subspace::span(b * phi.matrix())));
          CHECK(is_invertible(b * phi.gram() * b.transpose()));
          for (std::size_t j = i + 1; j < dec.pieces.size(); ++j)
            CHECK((b * phi.gram() * dec.pieces[j].basis.transpose()).is_zero());
          const int e = dec.pieces[i].exponent, d = dec.pieces[i].base.degree();
          switch (dec.pieces[i].type) {
            case PieceType::type2: CHECK(b.rows() == static_cast<std::size_t>(e * d)); break;
            case PieceType::type1: CHECK(e % 2 == 1); CHECK(b.rows() == static_cast<std::size_t>(2 * e)); break;
            case PieceType::plane: CHECK(e == 1); CHECK(b.rows() == 2); break;
            case PieceType::type3: CHECK(b.rows() == static_cast<std::size_t>(2 * e * d)); break;
          }
        }
        CHECK(total == phi.dim());
        CHECK(rank(all) == phi.dim());
      }
    }
  }
}

TEST_CASE("hyperbolicity criterion agrees with exhaustive search") {
  Rng rng(31);
  int yes = 0, no = 0;
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {1, 2}) {
      for (int k = 0; k < (n == 1 ? 40 : 60); ++k) {
        auto phi = k % 2 == 0 ? SymplecticElement::standard(random_involution(f, n, rng) * random_involution(f, n, rng))
                              : random_element(f, n, rng);
        auto ex = is_hyperbolic_exhaustive(phi, 10'000'000);
        REQUIRE(ex.verdict != Verdict::unknown);
        CHECK(hyperbolic_criterion(phi) == (ex.verdict == Verdict::yes));
        auto h = is_hyperbolic(phi, rng);
        CHECK(h.verdict == ex.verdict);
        if (h.verdict == Verdict::yes) {
          ++yes;
          REQUIRE(h.lagrangians);
          check_lagrangians(phi, h.lagrangians->first, h.lagrangians->second);
        } else {
          ++no;
        }
      }
    }
  }
  CHECK(yes > 20);
  CHECK(no > 20);
}

TEST_CASE("hyperbolic witnesses in dimension six and eight") {
  Rng rng(37);
  for (std::int64_t p : {3, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {3, 4}) {
      for (int k = 0; k < 8; ++k) {
        // [[A, 0], [0, A^+]] is hyperbolic by construction.
        Mat a = random_invertible(f, n, rng);
        if (k % 2 == 0) {
          Mat r = random_invertible(f, n, rng);
          Mat j = Mat::identity(f, n);
          for (std::size_t i = 0; i + 1 < n; ++i) j(i, i + 1) = Scalar::one(f);
          a = inverse(r) * j * r;
        }
        Mat m = direct_sum(a, inverse(a).transpose());
        Mat c = random_symplectic(Mat::standard_symplectic(f, n), rng);
        auto phi = SymplecticElement::standard(inverse(c) * m * c);
        CHECK(hyperbolic_criterion(phi));
        auto h = is_hyperbolic(phi, rng);
        REQUIRE(h.verdict == Verdict::yes);
        check_lagrangians(phi, h.lagrangians->first, h.lagrangians->second);
      }
    }
  }
}

TEST_CASE("sympinv decomposition into isotropic cyclic pairs") {
  Rng rng(41);
  for (std::int64_t p : {3, 5, 7}) {
    Field f = Field::prime(p);
    for (std::size_t n : {1, 2, 3}) {
      for (int k = 0; k < 10; ++k) {
        Mat s = random_involution(f, n, rng), t = random_involution(f, n, rng);
        auto phi = SymplecticElement::standard(s * t);
        auto pairs = sympinv_decomposition(phi, s, rng);
        Mat all(f, 0, phi.dim());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          for (const Mat* b : {&pairs[i].u, &pairs[i].w}) {
            CHECK((*b * phi.gram() * b->transpose()).is_zero());
            CHECK(Subspace::span(*b).contains(Subspace::span(*b * phi.matrix())));
            CHECK(Subspace::span(*b).contains(Subspace::span(*b * s)));
            CHECK(rank(*b) == b->rows());
          }
          CHECK(pairs[i].u.rows() == pairs[i].w.rows());
          Mat both = vstack(pairs[i].u, pairs[i].w);
          for (std::size_t j = i + 1; j < pairs.size(); ++j)
            CHECK((both * phi.gram() * vstack(pairs[j].u, pairs[j].w).transpose()).is_zero());
          all = vstack(all, both);
        }
        CHECK(rank(all) == phi.dim());
      }
    }
  }
  Field f3 = Field::prime(3);
  auto phi = SymplecticElement::standard(Mat(f3, {{1, 1}, {0, 1}}));
  CHECK_THROWS_AS(sympinv_decomposition(phi, Mat::identity(f3, 2), rng), DomainError);
}
