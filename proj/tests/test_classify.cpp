#include "doctest.h"

#include "sympinv/classify.hpp"
#include "sympinv/smallgroups.hpp"

using namespace sympinv;

namespace {

SymplecticElement sum(const SymplecticElement& a, const SymplecticElement& b) {
  return SymplecticElement(direct_sum(a.matrix(), b.matrix()), direct_sum(a.gram(), b.gram()));
}

SymplecticElement plane(const Mat& m) { return SymplecticElement::standard(m); }

void check_decision(const SymplecticElement& phi, const Decision& d, Verdict expected) {
  CHECK(d.verdict == expected);
  if (d.witness) CHECK(verify_witness(phi, *d.witness));
}

// Transvection e_1 -> e_1 + e_{n+1} in standard coordinates.
Mat transvection(const Field& f, std::size_t n) {
  Mat t = Mat::identity(f, 2 * n);
  t(0, n) = Scalar::one(f);
  return t;
}

// The 8-dimensional example: cyclic (x^2 + 1)^2 on four dimensions, a
// transvection J, and -J^{-1}.
SymplecticElement eight_dim_example(Rng& rng) {
  Field f = Field::prime(3);
  auto psi = symplectic_realization(Poly(f, {1, 0, 1}).pow(2), rng);
  REQUIRE(psi);
  Mat j = transvection(f, 1);
  return sum(sum(*psi, plane(j)), plane(-inverse(j)));
}

}  // namespace

TEST_CASE("bireflectional examples") {
  Field f = Field::prime(3);
  auto id = SymplecticElement::standard(Mat::identity(f, 4));
  auto d = is_bireflectional(id);
  check_decision(id, d, Verdict::yes);
  REQUIRE(d.witness);
  CHECK(d.witness->kind == WitnessKind::two_involutions);

  Mat j2(f, {{1, 1}, {0, 1}});
  auto hyp = SymplecticElement::standard(direct_sum(j2, inverse(j2).transpose()));
  check_decision(hyp, is_bireflectional(hyp), Verdict::yes);
  CHECK(is_bireflectional(hyp).witness);

  auto tv = SymplecticElement::standard(transvection(f, 2));
  check_decision(tv, is_bireflectional(tv), Verdict::no);
}

TEST_CASE("two skew-involution examples") {
  Field f = Field::prime(3);
  auto minus = SymplecticElement::standard(-Mat::identity(f, 4));
  auto d = is_two_skew_product(minus);
  check_decision(minus, d, Verdict::yes);
  REQUIRE(d.witness);
  CHECK(d.witness->kind == WitnessKind::two_skew_involutions);

  auto tv = SymplecticElement::standard(transvection(f, 1));
  check_decision(tv, is_two_skew_product(tv), Verdict::no);
  CHECK(is_two_skew_product(tv).method == Method::criterion);

  Mat j2(f, {{1, 1}, {0, 1}});
  auto hyp = SymplecticElement::standard(direct_sum(j2, inverse(j2).transpose()));
  check_decision(hyp, is_two_skew_product(hyp), Verdict::yes);
}

TEST_CASE("reversibility examples") {
  Field f = Field::prime(3);
  auto id = SymplecticElement::standard(Mat::identity(f, 2));
  check_decision(id, is_reversible_sp(id), Verdict::yes);
  auto tv = SymplecticElement::standard(transvection(f, 1));
  check_decision(tv, is_reversible_sp(tv), Verdict::no);

  // Over GF(5) the transvection is reversible; only the oracle decides.
  Field f5 = Field::prime(5);
  auto tv5 = SymplecticElement::standard(transvection(f5, 1));
  GroupTable g(1, 5);
  ClassifyOptions opt;
  CHECK(is_reversible_sp(tv5, opt).verdict != Verdict::no);
  opt.oracle = &g;
  auto d = is_reversible_sp(tv5, opt);
  check_decision(tv5, d, Verdict::yes);
  CHECK(d.method != Method::criterion);
}

TEST_CASE("involution times skew-involution examples") {
  Rng rng(73);
  Field f = Field::prime(3);
  auto eta = SymplecticElement::standard(Mat::standard_symplectic(f, 2));
  check_decision(eta, is_inv_skew_product(eta), Verdict::yes);
  auto id = SymplecticElement::standard(Mat::identity(f, 4));
  check_decision(id, is_inv_skew_product(id), Verdict::no);
  for (int n : {1, 3}) {
    auto psi = symplectic_realization(Poly(f, {1, 0, 1}).pow(n), rng);
    REQUIRE(psi);
    auto d = is_inv_skew_product(*psi);
    check_decision(*psi, d, Verdict::yes);
    REQUIRE(d.witness);
    CHECK(d.witness->kind == WitnessKind::involution_skew);
  }
  // Even power with odd multiplicity: conjugate to -phi^{-1}, not a product.
  auto psi = symplectic_realization(Poly(f, {1, 0, 1}).pow(2), rng);
  REQUIRE(psi);
  check_decision(*psi, is_negating_sp(*psi), Verdict::yes);
  check_decision(*psi, is_inv_skew_product(*psi), Verdict::no);
  check_decision(sum(*psi, *psi), is_inv_skew_product(sum(*psi, *psi)), Verdict::yes);
}

TEST_CASE("reversible in PSp but not bireflectional") {
  Rng rng(79);
  Field f = Field::prime(3);
  auto id = SymplecticElement::standard(Mat::identity(f, 8));
  CHECK(psp_reversible_not_bireflectional(id).verdict == Verdict::no);
  auto small = SymplecticElement::standard(transvection(f, 2));
  CHECK(psp_reversible_not_bireflectional(small).verdict == Verdict::no);

  auto phi = eight_dim_example(rng);
  auto r = classify(phi);
  CHECK(r.psp_reversible_not_bireflectional.verdict == Verdict::yes);
  REQUIRE(r.psp_reversible_not_bireflectional.witness);
  CHECK(r.psp_reversible_not_bireflectional.witness->negated);
  CHECK(verify_witness(phi, *r.psp_reversible_not_bireflectional.witness));
  CHECK(r.bireflectional.verdict == Verdict::no);
  CHECK(r.reversible_sp.verdict == Verdict::no);
  CHECK(r.negating_sp.verdict == Verdict::yes);
  CHECK(r.inv_skew.verdict == Verdict::no);
}

TEST_CASE("primary multiplicities agree with elementary divisors") {
  Rng rng(83);
  Field f = Field::prime(3);
  for (int k = 0; k < 40; ++k) {
    Mat a = random_symplectic(Mat::standard_symplectic(f, 3), rng);
    auto inv = invariant_factors(a);
    for (const auto& ed : *inv.elementary_divisors) {
      bool found = false;
      for (auto [t, m] : primary_multiplicities(a, ed.base))
        if (t == ed.exponent) {
          CHECK(m == ed.multiplicity);
          found = true;
        }
      CHECK(found);
    }
  }
}

TEST_CASE("verdicts are class functions and witnesses transfer to other forms") {
  Rng rng(89);
  Field f = Field::prime(3);
  GroupTable g(2, 3);
  for (std::size_t c = 0; c < g.class_count(); c += 3) {
    Mat rep = g.unpack(g.elements()[g.class_representative(c)]);
    auto phi = SymplecticElement::standard(rep);
    auto base = classify(phi);
    for (int k = 0; k < 3; ++k) {
      Mat x = random_symplectic(Mat::standard_symplectic(f, 2), rng);
      auto conj = SymplecticElement::standard(inverse(x) * rep * x);
      auto r = classify(conj);
      CHECK(r.bireflectional.verdict == base.bireflectional.verdict);
      CHECK(r.two_skew.verdict == base.two_skew.verdict);
      CHECK(r.inv_skew.verdict == base.inv_skew.verdict);
      CHECK(r.reversible_sp.verdict == base.reversible_sp.verdict);
    }
    // Same element written against a non-standard Gram matrix.
    Mat b = random_invertible(f, 4, rng);
    SymplecticElement moved(b * rep * inverse(b), b * Mat::standard_symplectic(f, 2) * b.transpose());
    ClassifyOptions opt;
    opt.oracle = &g;
    for (const Decision& d : {is_bireflectional(moved, opt), is_inv_skew_product(moved, opt)}) {
      CHECK(d.verdict != Verdict::unknown);
      if (d.witness) CHECK(verify_witness(moved, *d.witness));
    }
  }
}
