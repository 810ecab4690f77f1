#include <set>

#include "pieces.hpp"

namespace sympinv {

using detail::ComponentKind;
using detail::Search;

std::string to_string(PieceType t) {
  switch (t) {
    case PieceType::type1: return "type1";
    case PieceType::type2: return "type2";
    case PieceType::type3: return "type3";
    default: return "plane";
  }
}

OrthogonalDecomposition orthogonal_decomposition(const SymplecticElement& phi, Rng& rng) {
  OrthogonalDecomposition out;
  Search s{rng, default_search_budget()};
  for (const auto& comp : detail::primary_components(phi)) {
    SymplecticElement c = phi.restrict_to(comp.basis);
    for (auto& pc : detail::component_pieces(c, comp, s))
      out.pieces.push_back({pc.type, pc.basis * comp.basis, pc.base, pc.exponent});
  }
  return out;
}

bool hyperbolic_criterion(const SymplecticElement& phi) {
  const Field& f = phi.field();
  if (!f.is_prime()) throw UnsupportedField("hyperbolic_criterion: prime fields only");
  if (phi.dim() == 0) return true;
  auto inv = invariant_factors(phi.matrix());
  for (const auto& ed : *inv.elementary_divisors)
    if (reciprocal(ed.base) == ed.base && ed.multiplicity % 2 != 0) return false;
  for (const Mat& u : {phi.matrix(), Mat(-phi.matrix())})
    for (const auto& layer : unipotent_layer_forms(u, phi.gram()))
      if (!quadratic_form_is_hyperbolic(layer.multiplicity, layer.discriminant_class)) return false;
  return true;
}

namespace {

std::vector<std::int64_t> subspace_key(const Subspace& s) {
  std::vector<std::int64_t> key;
  const Mat& b = s.basis();
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) key.push_back(b(i, j).residue());
  key.push_back(static_cast<std::int64_t>(b.rows()));
  return key;
}

}  // namespace

HyperbolicResult is_hyperbolic_exhaustive(const SymplecticElement& phi, std::uint64_t budget) {
  const Field& f = phi.field();
  if (!f.is_prime()) throw UnsupportedField("is_hyperbolic_exhaustive: prime fields only");
  const std::size_t dim = phi.dim(), n = dim / 2;
  if (dim == 0) return {Verdict::yes, "exhaustive", std::make_pair(Mat(f, 0, 0), Mat(f, 0, 0))};
  const Mat& a = phi.matrix();
  const Mat& g = phi.gram();
  const std::int64_t q = f.p();

  std::set<std::vector<std::int64_t>> seen;
  std::vector<Subspace> frontier{Subspace(f, dim)}, lagrangians;
  std::uint64_t steps = 0;
  while (!frontier.empty()) {
    std::vector<Subspace> next;
    for (const auto& s : frontier) {
      Subspace perp = phi.space().perp(s.basis());
      // Representatives of perp / s: rows of perp's basis outside s.
      Mat reps(f, 0, dim);
      Subspace cur = s;
      for (std::size_t i = 0; i < perp.basis().rows(); ++i) {
        Mat r = perp.basis().row(i);
        if (cur.contains(r)) continue;
        cur = cur + Subspace::span(r);
        reps = vstack(reps, r);
      }
      const std::size_t k = reps.rows();
      std::vector<std::int64_t> c(k, 0);
      for (;;) {
        // Next coefficient vector in base q; stop after wrapping around.
        std::size_t pos = 0;
        while (pos < k && ++c[pos] == q) c[pos++] = 0;
        if (pos == k) break;
        std::size_t lead = k;
        for (std::size_t i = k; i-- > 0;)
          if (c[i] != 0) {
            lead = i;
            break;
          }
        if (c[lead] != 1) continue;
        if (++steps > budget) return {Verdict::unknown, "exhaustive budget exhausted", std::nullopt};
        Mat v(f, 1, dim);
        for (std::size_t i = 0; i < k; ++i)
          if (c[i] != 0) v = v + reps.row(i) * Scalar(f, c[i]);
        Subspace t = s + Subspace::span(krylov(v, a, dim));
        if (t.dim() > n) continue;
        if (!(t.basis() * g * t.basis().transpose()).is_zero()) continue;
        if (!seen.insert(subspace_key(t)).second) continue;
        if (t.dim() == n)
          lagrangians.push_back(t);
        else
          next.push_back(t);
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t i = 0; i < lagrangians.size(); ++i)
    for (std::size_t j = i + 1; j < lagrangians.size(); ++j)
      if ((lagrangians[i] + lagrangians[j]).dim() == dim)
        return {Verdict::yes, "exhaustive", std::make_pair(lagrangians[i].basis(), lagrangians[j].basis())};
  return {Verdict::no, "exhaustive", std::nullopt};
}

HyperbolicResult is_hyperbolic(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  const Field& f = phi.field();
  if (phi.dim() == 0) return {Verdict::yes, "trivial", std::make_pair(Mat(f, 0, 0), Mat(f, 0, 0))};
  if (!f.is_prime()) return {Verdict::unknown, "unsupported field", std::nullopt};
  if (!hyperbolic_criterion(phi)) return {Verdict::no, "criterion", std::nullopt};
  try {
    if (auto l = detail::invariant_lagrangians(phi, false, Search{rng, budget}))
      return {Verdict::yes, "witness", l};
  } catch (const BudgetExceeded&) {
  }
  if (phi.dim() <= 6 && f.p() <= 7) return is_hyperbolic_exhaustive(phi, budget);
  return {Verdict::unknown, "search budget exhausted", std::nullopt};
}

std::vector<CyclicPair> sympinv_decomposition(const SymplecticElement& phi, const Mat& sigma, Rng& rng) {
  const Field& f = phi.field();
  const Mat& a = phi.matrix();
  Mat id = Mat::identity(f, phi.dim());
  if (sigma * sigma != id || !is_symplectic(sigma, phi.gram()))
    throw DomainError("sympinv_decomposition: sigma is not a symplectic involution");
  if (inverse(sigma) * a * sigma != inverse(a))
    throw DomainError("sympinv_decomposition: sigma does not invert phi");
  const std::uint64_t budget = default_search_budget();
  std::vector<CyclicPair> out;
  for (const auto& comp : detail::primary_components(phi)) {
    if (comp.kind == ComponentKind::unsplit)
      throw UnsupportedField("sympinv_decomposition: component cannot be split over this field");
    SymplecticElement c = phi.restrict_to(comp.basis);
    Mat sc = restrict_action(comp.basis, sigma);
    Mat w = Mat::identity(f, c.dim());
    while (w.rows() > 0) {
      SymplecticElement e = c.restrict_to(w);
      Mat ss = restrict_action(w, sc);
      Mat ie = Mat::identity(f, w.rows());
      std::vector<Mat> sources;
      for (const Mat& m : {Mat(ss - ie), Mat(ss + ie)}) {
        Mat k = left_kernel(m);
        if (k.rows() > 0) sources.push_back(k);
      }
      Poly mu = minimal_polynomial(e.matrix());
      const auto d = static_cast<std::size_t>(mu.degree());
      auto pick = [&]() {
        const Mat& src = sources[rng() % sources.size()];
        return detail::random_row_in(src, rng);
      };
      std::optional<Mat> ku;
      std::uint64_t it = 0;
      for (; it < budget && !ku; ++it) {
        Mat u = pick();
        if (vector_annihilator(u, e.matrix()) == mu) ku = krylov(u, e.matrix(), d);
      }
      std::optional<Mat> kw;
      for (; it < budget && ku && !kw; ++it) {
        Mat x = pick();
        Mat kx = krylov(x, e.matrix(), d);
        Mat both = vstack(*ku, kx);
        if (is_invertible(both * e.gram() * both.transpose())) kw = kx;
      }
      if (!kw) throw BudgetExceeded("sympinv_decomposition: search budget exhausted");
      out.push_back({*ku * w * comp.basis, *kw * w * comp.basis});
      w = left_kernel(e.gram() * vstack(*ku, *kw).transpose()) * w;
    }
  }
  return out;
}

}  // namespace sympinv
