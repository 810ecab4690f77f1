#include <algorithm>

#include "suites.hpp"

namespace sympinv::detail {

namespace {

std::uint64_t mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  return seed * 0x9e3779b97f4a7c15ULL + a * 0xbf58476d1ce4e5b9ULL + b * 0x94d049bb133111ebULL;
}

bool is_unipotent(const Mat& a) {
  Mat id = Mat::identity(a.field(), a.rows());
  return (a - id).pow(static_cast<std::int64_t>(a.rows())).is_zero();
}

Mat gl_involution(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> d;
  for (std::size_t i = 0; i < n; ++i) d.push_back(rng() % 2 ? Scalar::one(f) : -Scalar::one(f));
  Mat r = random_invertible(f, n, rng);
  return inverse(r) * Mat::diag(d) * r;
}

Mat sp_conjugate(const Mat& a, std::size_t n, Rng& rng) {
  Mat c = random_symplectic(Mat::standard_symplectic(a.field(), n), rng);
  return inverse(c) * a * c;
}

Mat sp_involution(const Field& f, std::size_t n, Rng& rng) {
  std::vector<Scalar> d;
  const std::size_t k = rng() % (n + 1);
  for (std::size_t i = 0; i < n; ++i) d.push_back(i < k ? Scalar::one(f) : -Scalar::one(f));
  std::vector<Scalar> dd = d;
  dd.insert(dd.end(), d.begin(), d.end());
  return sp_conjugate(Mat::diag(dd), n, rng);
}

Mat sp_skew_involution(const Field& f, std::size_t n, Rng& rng) {
  return sp_conjugate(Mat::standard_symplectic(f, n), n, rng);
}

void theta_identity(Outcome& o, const SymplecticElement& phi, const std::string& where) {
  if (phi.dim() < 4) return;
  Scalar theta = wall_form(phi).theta_class;
  Scalar hat = wall_form(quotient_on_bahn_mod_fix(phi)).theta;
  o.check(theta == square_class(-hat), where + ": Theta(phi) != -Theta(phi_hat)");
}

}  // namespace

Outcome suite_wall(const SuiteOptions& opt) {
  Outcome o;
  const std::int64_t q = opt.q > 0 ? opt.q : 3;
  Field f = Field::prime(q);
  const std::size_t trials = opt.trials > 0 ? opt.trials : 100;
  Poly x1(f, {-1, 1});
  Scalar nonsquare = square_class(-Scalar::one(f));
  if (nonsquare.is_one())
    for (const auto& s : field_elements(f))
      if (!s.is_zero() && !is_square(s)) nonsquare = square_class(s);

  // Normal form conditions and invariance under symplectic conjugation.
  for (std::size_t n : {2, 3}) {
    o.merge(parallel_outcomes(trials, opt.jobs, [&](std::size_t k) {
      Outcome r;
      Rng rng(mix(opt.seed, n, k));
      const std::string where = "antitriangular Sp(" + std::to_string(2 * n) + "," + std::to_string(q) + ") trial " +
                                std::to_string(k);
      auto phi = symplectic_realization(x1.pow(static_cast<int>(2 * n)), rng,
                                        k % 2 == 0 ? Scalar::one(f) : nonsquare, opt.budget);
      r.check(phi.has_value(), where + ": no realization");
      if (!phi) return r;
      auto psi = SymplecticElement::standard(sp_conjugate(phi->matrix(), n, rng));
      AntitriangularForm a = wall_antitriangular(*phi), b = wall_antitriangular(psi);
      r.check(antitriangular_conditions_hold(a.a, a.theta), where + ": conditions fail");
      r.check(antitriangular_conditions_hold(b.a, b.theta), where + ": conditions fail after conjugation");
      r.check(a.a == b.a && a.theta == b.theta, where + ": normal form changes under conjugation");
      theta_identity(r, psi, where);
      return r;
    }));
  }

  // Theta class decides symplectic conjugacy of cyclic unipotent elements.
  for (auto [n, gq] : groups_for(opt, {{1, 3}, {2, 3}})) {
    const GroupTable& g = group(n, gq);
    std::vector<std::size_t> classes;
    for (std::size_t c = 0; c < g.class_count(); ++c) {
      Mat a = class_rep(g, c);
      if (is_unipotent(a) && is_cyclic(a)) classes.push_back(c);
    }
    o.info.push_back("Sp(" + std::to_string(2 * n) + "," + std::to_string(gq) + "): " + std::to_string(classes.size()) +
                     " cyclic unipotent classes");
    Rng rng(mix(opt.seed, 77, static_cast<std::uint64_t>(n)));
    for (std::size_t i : classes) {
      Mat ai = class_rep(g, i);
      auto phi = SymplecticElement::standard(ai);
      Scalar ti = wall_form(phi).theta_class;
      theta_identity(o, phi, label(g, i));
      for (int k = 0; k < 3; ++k) {
        Mat x = g.unpack(g.elements()[rng() % g.order()]);
        auto member = SymplecticElement::standard(inverse(x) * ai * x);
        o.check(wall_form(member).theta_class == ti, label(g, i) + ": Theta not constant on the class");
        auto alpha = sp_conjugate_unipotent_cyclic(phi, member);
        o.check(alpha && is_symplectic(*alpha, phi.gram()) && inverse(*alpha) * ai * *alpha == member.matrix(),
                label(g, i) + ": no valid conjugator to a class member");
      }
      for (std::size_t j : classes) {
        Mat aj = class_rep(g, j);
        auto psi = SymplecticElement::standard(aj);
        const bool same_theta = wall_form(psi).theta_class == ti;
        const bool conj = g.conjugate(ai, aj).has_value();
        o.check(same_theta == conj, label(g, i) + " vs class " + std::to_string(j) + ": Theta equality " +
                                        (same_theta ? "true" : "false") + ", oracle conjugacy " +
                                        (conj ? "true" : "false"));
        o.check(sp_conjugate_unipotent_cyclic(phi, psi).has_value() == conj,
                label(g, i) + " vs class " + std::to_string(j) + ": constructive conjugacy disagrees with oracle");
      }
    }
  }
  return o;
}

Outcome suite_dickson(const SuiteOptions& opt) {
  Outcome o;
  std::vector<std::int64_t> fields = opt.q > 0 ? std::vector<std::int64_t>{opt.q} : std::vector<std::int64_t>{3, 5, 7};
  const std::size_t trials = opt.trials > 0 ? opt.trials : 500;
  for (std::int64_t q : fields) {
    Field f = Field::prime(q);
    o.merge(parallel_outcomes(trials, opt.jobs, [&](std::size_t k) {
      Outcome r;
      Rng rng(mix(opt.seed, static_cast<std::uint64_t>(q), k));
      const std::size_t n = 1 + k % 6;
      Mat d = random_matrix(f, n, n, rng);
      Mat m = block2x2(Mat::zero(f, n, n), Mat::identity(f, n), -Mat::identity(f, n), d);
      std::vector<Poly> expected;
      for (const auto& p : invariant_factors(d).invariant_factors)
        expected.push_back(dickson_transform(p, Scalar::one(f)));
      r.check(invariant_factors(m).invariant_factors == expected,
              "GF(" + std::to_string(q) + ") trial " + std::to_string(k) + ": D = [" + serialize_compact(d) + "]");
      return r;
    }));
  }
  return o;
}

Outcome suite_witnesses(const SuiteOptions& opt) {
  Outcome o;
  const std::size_t trials = opt.trials > 0 ? opt.trials : 1000;
  std::vector<std::int64_t> fields = opt.q > 0 ? std::vector<std::int64_t>{opt.q} : std::vector<std::int64_t>{3, 7};
  const std::vector<std::string> kinds{"two_involutions", "two_skew_involutions", "involution_skew", "reverser"};
  for (std::size_t kind = 0; kind < kinds.size(); ++kind) {
    o.merge(parallel_outcomes(trials, opt.jobs, [&](std::size_t k) {
      Outcome r;
      Rng rng(mix(opt.seed, kind + 1, k));
      Field f = Field::prime(fields[k % fields.size()]);
      const std::size_t n = opt.n > 0 ? static_cast<std::size_t>(opt.n) : 2 + (k / fields.size()) % 3;
      const std::string where = kinds[kind] + " trial " + std::to_string(k) + " GF(" + std::to_string(f.p()) +
                                ") dim " + std::to_string(2 * n);
      std::optional<Witness> w;
      std::optional<SymplecticElement> phi;
      switch (kind) {
        case 0: {
          phi = SymplecticElement::standard(sp_involution(f, n, rng) * sp_involution(f, n, rng));
          if (auto st = bireflection_witness(*phi, rng, opt.budget))
            w = Witness{WitnessKind::two_involutions, {st->first, st->second}, std::nullopt, false};
          break;
        }
        case 1: {
          phi = SymplecticElement::standard(sp_skew_involution(f, n, rng) * sp_skew_involution(f, n, rng));
          if (!f.minus_one_nonsquare()) break;
          if (auto eta = skew_reverser(*phi, rng, opt.budget))
            w = Witness{WitnessKind::two_skew_involutions, {phi->matrix() * *eta, -*eta}, std::nullopt, false};
          break;
        }
        case 2: {
          phi = SymplecticElement::standard(sp_involution(f, n, rng) * sp_skew_involution(f, n, rng));
          if (auto s = negating_conjugator(*phi, true, rng, opt.budget))
            w = Witness{WitnessKind::involution_skew, {*s, *s * phi->matrix()}, std::nullopt, false};
          break;
        }
        default: {
          // diag(A, A^+) with A a product of two involutions in GL(n).
          Mat a = gl_involution(f, n, rng) * gl_involution(f, n, rng);
          phi = SymplecticElement::standard(sp_conjugate(direct_sum(a, inverse(a).transpose()), n, rng));
          if (auto eta = skew_reverser(*phi, rng, opt.budget))
            w = Witness{WitnessKind::reverser, {}, *eta, false};
          break;
        }
      }
      r.check(w.has_value(), where + ": no witness constructed");
      if (w) r.check(verify_witness(*phi, *w), where + ": witness fails verification");
      return r;
    }));
  }
  return o;
}

Outcome suite_big_transvection(const SuiteOptions& opt) {
  Outcome o;
  const GroupTable& g = group(2, 3);
  Field f = g.field();
  Mat id = Mat::identity(f, 4);
  std::size_t quartic = 0, quadratic = 0;
  std::vector<bool> seen(g.class_count(), false);
  for (std::size_t i = 0; i < g.order(); ++i) {
    Mat a = g.unpack(g.elements()[i]);
    Mat s = a * a;
    Mat t = s + id;
    if (t.is_zero()) {
      ++quadratic;
      auto sq = SymplecticElement::standard(s);
      o.check(hyperbolic_criterion(sq), "element " + std::to_string(i) + ": phi^2 = -I not hyperbolic");
      continue;
    }
    if (!(t * t).is_zero()) continue;
    ++quartic;
    const std::string where = "element " + std::to_string(i) + " [" + serialize_compact(a) + "]";
    auto b = SymplecticElement::standard(-s);
    o.check(is_big_transvection(b), where + ": -phi^2 is not a big transvection");
    WallFormData w = wall_form(b);
    o.check(w.gram_omega.rows() == 2 && w.theta_class.is_one(), where + ": Wall form of -phi^2 not congruent to I_2");
    o.check(!hyperbolic_criterion(SymplecticElement::standard(s)), where + ": phi^2 satisfies the hyperbolicity criterion");
    const std::size_t c = g.class_of(i);
    if (!seen[c]) {
      seen[c] = true;
      auto ex = is_hyperbolic_exhaustive(SymplecticElement::standard(s), opt.budget);
      o.check(ex.verdict == Verdict::no, where + ": exhaustive search gives hyperbolic=" + to_string(ex.verdict));
    }
  }
  o.check(quartic > 0 && quadratic > 0, "no elements with the required minimal polynomials");
  o.info.push_back("Sp(4,3): " + std::to_string(quartic) + " elements with mu = (x^2+1)^2, " +
                   std::to_string(quadratic) + " with mu = x^2+1");
  // phi^2 = -I with phi cyclic of minimal polynomial x^2 + 1 in Sp(2, 3).
  {
    const GroupTable& g2 = group(1, 3);
    for (std::size_t c = 0; c < g2.class_count(); ++c) {
      Mat a = class_rep(g2, c);
      if (!(a * a + Mat::identity(f, 2)).is_zero()) continue;
      auto ex = is_hyperbolic_exhaustive(SymplecticElement::standard(a * a), opt.budget);
      o.check(ex.verdict == Verdict::yes, label(g2, c) + ": phi^2 = -I is not hyperbolic");
    }
  }
  // Cyclic (x^2 + 1)^n: phi^2 hyperbolic exactly for odd n.
  Rng rng(mix(opt.seed, 8));
  for (std::int64_t q : {3, 7}) {
    Field fq = Field::prime(q);
    for (int n = 1; n <= 3; ++n) {
      auto phi = symplectic_realization(Poly(fq, {1, 0, 1}).pow(n), rng);
      o.check(phi.has_value(), "no realization of (x^2+1)^" + std::to_string(n));
      if (!phi) continue;
      SymplecticElement sq(phi->matrix() * phi->matrix(), phi->gram());
      o.check(hyperbolic_criterion(sq) == (n % 2 == 1),
              "GF(" + std::to_string(q) + ") cyclic (x^2+1)^" + std::to_string(n) + ": hyperbolicity of phi^2");
    }
  }
  return o;
}

Outcome suite_infrastructure(const SuiteOptions& opt) {
  Outcome o;
  for (auto [n, q] : std::vector<std::pair<int, std::int64_t>>{{1, 3}, {1, 5}, {1, 7}, {1, 11}, {2, 3}}) {
    const GroupTable& g = group(n, q);
    o.check(g.order() == symplectic_group_order(n, q),
            "Sp(" + std::to_string(2 * n) + "," + std::to_string(q) + ") order " + std::to_string(g.order()));
  }
  const std::size_t matrices = opt.trials > 0 ? opt.trials : 200;
  const std::size_t polys = opt.trials > 0 ? opt.trials : 500;
  for (std::int64_t q : {3, 5, 7}) {
    Field f = Field::prime(q);
    o.merge(parallel_outcomes(matrices, opt.jobs, [&](std::size_t k) {
      Outcome r;
      Rng rng(mix(opt.seed, static_cast<std::uint64_t>(q), k));
      const std::size_t n = 1 + k % 6;
      // Low-rank perturbations of scalars give repeated eigenvalues.
      Mat a = random_matrix(f, n, n, rng);
      if (k % 2 == 0) {
        Mat u = random_matrix(f, n, 1, rng), v = random_matrix(f, 1, n, rng);
        a = Mat::scalar(random_scalar(f, rng), n) + u * v;
      }
      auto eds = *invariant_factors(a).elementary_divisors;
      for (const auto& c : field_elements(f)) {
        std::vector<std::pair<int, int>> expected;
        for (const auto& ed : eds)
          if (ed.base == Poly(f, {(-c).residue(), 1})) expected.emplace_back(ed.exponent, ed.multiplicity);
        auto got = linear_elementary_divisors(a, c);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        r.check(got == expected, "GF(" + std::to_string(q) + ") matrix [" + serialize_compact(a) + "] at " + c.to_string());
      }
      return r;
    }));
  }
  o.merge(parallel_outcomes(polys, opt.jobs, [&](std::size_t k) {
    Outcome r;
    Rng rng(mix(opt.seed, 5, k));
    const std::int64_t q = std::vector<std::int64_t>{3, 5, 7, 11}[k % 4];
    Field f = Field::prime(q);
    const int deg = 1 + static_cast<int>(k % 12);
    std::vector<Scalar> c;
    for (int i = 0; i < deg; ++i) c.push_back(random_scalar(f, rng));
    Scalar lead = random_scalar(f, rng);
    c.push_back(lead.is_zero() ? Scalar::one(f) : lead);
    // Repeated factors in a quarter of the trials.
    Poly p(f, c);
    if (k % 4 == 0) p = p * p;
    Factorization fac = factorize(p, rng);
    bool ok = fac.product() == p;
    for (std::size_t i = 0; i < fac.factors.size(); ++i) {
      const Poly& b = fac.factors[i].base;
      ok = ok && b.lead().is_one() && is_irreducible(b) && fac.factors[i].exponent >= 1;
      for (std::size_t j = 0; j < i; ++j) ok = ok && !(fac.factors[j].base == b);
    }
    r.check(ok, "GF(" + std::to_string(q) + ") factorization of " + p.to_string());
    return r;
  }));
  return o;
}

}  // namespace sympinv::detail
