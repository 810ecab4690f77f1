#include "pieces.hpp"

namespace sympinv {

using detail::ComponentKind;
using detail::Search;

namespace {

Mat plus(const Mat& a) { return inverse(a).transpose(); }

// Frame F (rows) with F G F' standard for invariant Lagrangians l1 + l2, and
// the block A of phi on l1 in that frame.
std::pair<Mat, Mat> hyperbolic_frame(const SymplecticElement& phi, const Mat& l1, const Mat& l2) {
  Mat fr = symplectic_basis_from_lagrangians(phi.gram(), l1, l2);
  Mat nf = fr * phi.matrix() * inverse(fr);
  const std::size_t n = l1.rows();
  return {fr, nf.block(0, 0, n, n)};
}

// a, b with a^2 + b^2 = -1.
std::pair<Scalar, Scalar> sum_of_two_squares_minus_one(const Field& f) {
  Scalar target = -Scalar::one(f);
  for (const auto& a : field_elements(f)) {
    auto b = sqrt(target - a * a);
    if (b) return {a, *b};
  }
  throw Error("no solution of a^2 + b^2 = -1");
}

struct Assembly {
  std::vector<Mat> bases, blocks;
  void add(const Mat& basis, const Mat& block) {
    bases.push_back(basis);
    blocks.push_back(block);
  }
  Mat build() const { return detail::assemble(bases, blocks); }
};

}  // namespace

std::pair<Mat, Mat> sp_two_skew_hyperbolic(const Mat& q) {
  const Field& f = q.field();
  const std::size_t n = q.rows();
  auto [s, t] = symmetric_pair_factorization(q);
  Mat z = Mat::zero(f, n, n);
  return {block2x2(z, s, -inverse(s), z), block2x2(z, -inverse(t), t, z)};
}

std::optional<std::pair<Mat, Mat>> sp_inv_skew_hyperbolic(const Mat& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Mat z = Mat::zero(f, n, n);
  try {
    if (auto r = gl_inv_skew_factorization(a)) {
      auto [s, h] = *r;
      return std::make_pair(direct_sum(s, plus(s)), direct_sum(h, plus(h)));
    }
  } catch (const DomainError&) {
  }
  if (auto r = antisymmetric_symmetric_factorization(a)) {
    auto [h, s] = *r;
    return std::make_pair(block2x2(z, h, -plus(h), z), block2x2(z, -inverse(s), s, z));
  }
  return std::nullopt;
}

std::optional<Mat> sp_inv_skew_cyclic(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  const Field& f = phi.field();
  const std::size_t d = phi.dim();
  const Mat& a = phi.matrix();
  if (d == 0) return Mat(f, 0, 0);
  Poly mu = minimal_polynomial(a);
  if (mu.degree() != static_cast<int>(d)) throw DomainError("sp_inv_skew_cyclic: element is not cyclic");
  if (scaled_reciprocal(mu, -Scalar::one(f)) != mu)
    throw DomainError("sp_inv_skew_cyclic: element is not similar to minus its inverse");
  Mat a2 = a * a, ainv = inverse(a), id = Mat::identity(f, d);
  if (f.is_prime() && !hyperbolic_criterion(SymplecticElement(a2, phi.gram()))) return std::nullopt;
  for (std::uint64_t it = 0; it < budget; ++it) {
    Mat u = random_matrix(f, 1, d, rng);
    Mat k2 = krylov(u, a2, d / 2);
    if (!(k2 * phi.gram() * k2.transpose()).is_zero()) continue;
    if (rank(k2) != d / 2) continue;
    Mat b = krylov(u, a, d);
    if (!is_invertible(b)) continue;
    Mat img(f, d, d), cur = u;
    for (std::size_t i = 0; i < d; ++i) {
      img.set_block(i, 0, i % 2 == 0 ? cur : Mat(-cur));
      cur = cur * ainv;
    }
    Mat sigma = inverse(b) * img;
    if (sigma * sigma == id && is_symplectic(sigma, phi.gram()) && sigma * a * sigma == -ainv) return sigma;
  }
  return std::nullopt;
}

std::optional<std::pair<Mat, Mat>> bireflection_witness(const SymplecticElement& phi, Rng& rng,
                                                        std::uint64_t budget) {
  const Field& f = phi.field();
  if (phi.dim() == 0) return std::make_pair(phi.matrix(), phi.matrix());
  std::optional<std::pair<Mat, Mat>> l;
  try {
    l = detail::invariant_lagrangians(phi, true, Search{rng, budget});
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  if (!l) return std::nullopt;
  auto [fr, a] = hyperbolic_frame(phi, l->first, l->second);
  auto w = wonenburger_involutions(a);
  if (!w) return std::nullopt;
  Mat frinv = inverse(fr);
  Mat s = frinv * direct_sum(w->s, plus(w->s)) * fr;
  Mat t = frinv * direct_sum(w->t, plus(w->t)) * fr;
  Mat id = Mat::identity(f, phi.dim());
  if (s * s != id || t * t != id || s * t != phi.matrix() || !is_symplectic(s, phi.gram()) ||
      !is_symplectic(t, phi.gram()))
    throw Error("bireflection_witness: assembled factors fail verification");
  return std::make_pair(s, t);
}

namespace {

// Reverser on a hyperbolic piece given by local Lagrangians.
Mat hyperbolic_reverser(const SymplecticElement& e, const Mat& l1, const Mat& l2) {
  auto [fr, q] = hyperbolic_frame(e, l1, l2);
  return inverse(fr) * sp_two_skew_hyperbolic(q).second * fr;
}

std::optional<Mat> split_reverser(const SymplecticElement& e, Search s) {
  auto sp = detail::split_cyclic_lagrangians(e, s);
  if (!sp) return std::nullopt;
  return hyperbolic_reverser(e, sp->first, sp->second);
}

// Reverser of a unipotent element, as a matrix in its own coordinates.
std::optional<Mat> unipotent_reverser(const SymplecticElement& u, Search s) {
  auto pcs = detail::unipotent_pieces(u, s);
  auto [ca, cb] = sum_of_two_squares_minus_one(u.field());
  Assembly as;
  for (std::size_t i = 0; i < pcs.size(); ++i) {
    if (pcs[i].type != PieceType::type2) {
      auto r = split_reverser(u.restrict_to(pcs[i].basis), s);
      if (!r) return std::nullopt;
      as.add(pcs[i].basis, *r);
      continue;
    }
    if (i + 1 >= pcs.size() || pcs[i + 1].type != PieceType::type2 || pcs[i + 1].exponent != pcs[i].exponent)
      return std::nullopt;
    const auto& p1 = pcs[i];
    const auto& p2 = pcs[++i];
    if (*p1.layer_class == *p2.layer_class) {
      // Equal classes: eta(x, y) = (a x rho + b y rho, b x rho - a y rho)
      // with rho the basis-reversing involution and a^2 + b^2 = -1.
      SymplecticElement e1 = u.restrict_to(p1.basis), e2 = u.restrict_to(p2.basis);
      auto beta = sp_conjugate_unipotent_cyclic(e1, e2);
      if (!beta) throw Error("unipotent_reverser: equal classes but no isometry");
      auto w = wonenburger_involutions(e1.matrix());
      Mat r = w->s;
      as.add(vstack(p1.basis, *beta * p2.basis), block2x2(r * ca, r * cb, r * cb, r * (-ca)));
    } else {
      Mat both = vstack(p1.basis, p2.basis);
      auto rv = split_reverser(u.restrict_to(both), s);
      if (!rv) return std::nullopt;
      as.add(both, *rv);
    }
  }
  return as.build();
}

}  // namespace

std::optional<Mat> skew_reverser(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  const Field& f = phi.field();
  if (phi.dim() == 0) return phi.matrix();
  Search s{rng, budget};
  Assembly global;
  try {
    for (const auto& comp : detail::primary_components(phi)) {
      SymplecticElement c = phi.restrict_to(comp.basis);
      std::optional<Mat> block;
      switch (comp.kind) {
        case ComponentKind::unipotent: block = unipotent_reverser(c, s); break;
        case ComponentKind::negative: block = unipotent_reverser(c.negate(), s); break;
        case ComponentKind::paired: {
          Mat x = kernel(eval(comp.base.pow(comp.exponent), c.matrix())).basis();
          Mat y = kernel(eval(comp.dual.pow(comp.exponent), c.matrix())).basis();
          block = hyperbolic_reverser(c, x, y);
          break;
        }
        case ComponentKind::self_reciprocal: {
          Assembly as;
          for (const auto& pc : detail::self_reciprocal_pieces(c, comp.base, s)) {
            auto r = skew_reverser_cyclic(c.restrict_to(pc.basis).matrix(), rng);
            if (!r) return std::nullopt;
            as.add(pc.basis, *r);
          }
          block = as.build();
          break;
        }
        default: return std::nullopt;
      }
      if (!block) return std::nullopt;
      global.add(comp.basis, *block);
    }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  Mat eta = global.build();
  const Mat& a = phi.matrix();
  if (eta * eta != -Mat::identity(f, phi.dim()) || !is_symplectic(eta, phi.gram()) ||
      inverse(eta) * a * eta != inverse(a))
    throw Error("skew_reverser: assembled reverser fails verification");
  return eta;
}

namespace {

// alpha on a cyclic piece with alpha^{-1} phi alpha = -phi^{-1}, not
// necessarily an involution.
std::optional<Mat> negating_isometry_cyclic(const SymplecticElement& e, Search s) {
  const Field& f = e.field();
  const std::size_t d = e.dim();
  const Mat& a = e.matrix();
  Mat b = -inverse(a);
  Poly mu = minimal_polynomial(a);
  Mat u(f, 1, d);
  bool have = false;
  for (std::uint64_t it = 0; it < s.budget && !have; ++it) {
    u = random_matrix(f, 1, d, s.rng);
    have = vector_annihilator(u, a) == mu;
  }
  if (!have) return std::nullopt;
  Mat ku = krylov(u, a, d);
  Mat gu = ku * e.gram() * ku.transpose();
  for (std::uint64_t it = 0; it < s.budget; ++it) {
    Mat w = random_matrix(f, 1, d, s.rng);
    Mat kw = krylov(w, b, d);
    if (kw * e.gram() * kw.transpose() == gu && is_invertible(kw)) return inverse(ku) * kw;
  }
  return std::nullopt;
}

}  // namespace

std::optional<Mat> negating_conjugator(const SymplecticElement& phi, bool require_involution, Rng& rng,
                                       std::uint64_t budget) {
  const Field& f = phi.field();
  if (phi.dim() == 0) return phi.matrix();
  Search s{rng, budget};
  Scalar minus_one = -Scalar::one(f);
  Assembly as;
  try {
    auto comps = detail::primary_components(phi);
    const detail::Component* plus_part = nullptr;
    const detail::Component* minus_part = nullptr;
    std::vector<bool> done(comps.size(), false);
    auto find_comp = [&](const Poly& base) -> std::optional<std::size_t> {
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (!done[j] && (comps[j].base == base || comps[j].dual == base)) return j;
      return std::nullopt;
    };
    for (std::size_t i = 0; i < comps.size(); ++i) {
      if (done[i]) continue;
      const auto& comp = comps[i];
      done[i] = true;
      SymplecticElement c = phi.restrict_to(comp.basis);
      switch (comp.kind) {
        case ComponentKind::unipotent: plus_part = &comp; break;
        case ComponentKind::negative: minus_part = &comp; break;
        case ComponentKind::unsplit: return std::nullopt;
        case ComponentKind::self_reciprocal: {
          Poly twin = negate_variable(comp.base);
          auto pcs = detail::self_reciprocal_pieces(c, comp.base, s);
          if (twin == comp.base) {
            const bool pair_up = comp.base == Poly(f, {1, 0, 1});
            for (std::size_t k = 0; k < pcs.size(); ++k) {
              Mat basis = pcs[k].basis * comp.basis;
              if (pair_up && pcs[k].exponent % 2 == 0 && k + 1 < pcs.size() &&
                  pcs[k + 1].exponent == pcs[k].exponent) {
                Mat both = vstack(pcs[k].basis, pcs[k + 1].basis);
                SymplecticElement e = c.restrict_to(both);
                auto sp = detail::split_cyclic_lagrangians(e, s);
                if (!sp) return std::nullopt;
                auto [fr, a] = hyperbolic_frame(e, sp->first, sp->second);
                auto r = sp_inv_skew_hyperbolic(a);
                if (!r) return std::nullopt;
                as.add(both * comp.basis, inverse(fr) * r->first * fr);
                ++k;
                continue;
              }
              SymplecticElement e = c.restrict_to(pcs[k].basis);
              std::optional<Mat> sigma;
              if (pair_up && pcs[k].exponent % 2 == 0) {
                if (require_involution) return std::nullopt;
                sigma = negating_isometry_cyclic(e, s);
              } else {
                sigma = sp_inv_skew_cyclic(e, rng, budget);
              }
              if (!sigma) return std::nullopt;
              as.add(basis, *sigma);
            }
          } else {
            auto j = find_comp(twin);
            if (!j) return std::nullopt;
            done[*j] = true;
            SymplecticElement c2 = phi.restrict_to(comps[*j].basis);
            auto pcs2 = detail::self_reciprocal_pieces(c2, comps[*j].base, s);
            if (pcs.size() != pcs2.size()) return std::nullopt;
            for (std::size_t k = 0; k < pcs.size(); ++k) {
              if (pcs[k].exponent != pcs2[k].exponent) return std::nullopt;
              Mat both = vstack(pcs[k].basis * comp.basis, pcs2[k].basis * comps[*j].basis);
              auto sigma = sp_inv_skew_cyclic(phi.restrict_to(both), rng, budget);
              if (!sigma) return std::nullopt;
              as.add(both, *sigma);
            }
          }
          break;
        }
        case ComponentKind::paired: {
          Poly twin = negate_variable(comp.base);
          auto ker = [&](const SymplecticElement& e, const Poly& h, int ex) {
            return kernel(eval(h.pow(ex), e.matrix())).basis();
          };
          Mat l1 = ker(c, comp.base, comp.exponent) * comp.basis;
          Mat l2 = ker(c, comp.dual, comp.exponent) * comp.basis;
          Mat basis = comp.basis;
          if (twin != comp.base && twin != comp.dual) {
            auto j = find_comp(twin);
            if (!j) return std::nullopt;
            done[*j] = true;
            const auto& cp = comps[*j];
            SymplecticElement c2 = phi.restrict_to(cp.basis);
            Poly twin_dual = reciprocal(twin);
            l1 = vstack(l1, ker(c2, twin_dual, cp.exponent) * cp.basis);
            l2 = vstack(l2, ker(c2, twin, cp.exponent) * cp.basis);
            basis = vstack(basis, cp.basis);
          }
          SymplecticElement e = phi.restrict_to(basis);
          auto l1_local = *solve_left(basis, l1), l2_local = *solve_left(basis, l2);
          auto [fr, blk] = hyperbolic_frame(e, l1_local, l2_local);
          if (auto r = sp_inv_skew_hyperbolic(blk)) {
            as.add(basis, inverse(fr) * r->first * fr);
            break;
          }
          if (twin != comp.dual) return std::nullopt;
          // Cyclic pieces with minimal polynomial (p p~)^e.
          for (const auto& pc : detail::paired_pieces(c, comp.base, comp.dual, comp.exponent)) {
            auto sigma = sp_inv_skew_cyclic(c.restrict_to(pc.basis), rng, budget);
            if (!sigma) return std::nullopt;
            as.add(pc.basis * comp.basis, *sigma);
          }
          break;
        }
      }
    }
    // (x - 1) and (x + 1) parts: swap them by an isometry between
    // (V+, phi^{-1}) and (V-, -phi).
    if (plus_part || minus_part) {
      if (!plus_part || !minus_part) return std::nullopt;
      SymplecticElement cp = phi.restrict_to(plus_part->basis), cm = phi.restrict_to(minus_part->basis);
      auto alpha = detail::unipotent_isometry(cp.inverse(), cm.negate(), s);
      if (!alpha) return std::nullopt;
      const std::size_t dp = cp.dim();
      Mat swap = block2x2(Mat::zero(f, dp, dp), *alpha, inverse(*alpha), Mat::zero(f, dp, dp));
      as.add(vstack(plus_part->basis, minus_part->basis), swap);
    }
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
  Mat sigma = as.build();
  const Mat& a = phi.matrix();
  if (!is_symplectic(sigma, phi.gram()) || inverse(sigma) * a * sigma != -inverse(a))
    throw Error("negating_conjugator: assembled conjugator fails verification");
  if (require_involution && sigma * sigma != Mat::identity(f, phi.dim()))
    throw Error("negating_conjugator: assembled conjugator is not an involution");
  return sigma;
}

}  // namespace sympinv
