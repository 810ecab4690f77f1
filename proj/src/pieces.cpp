#include "pieces.hpp"

#include <map>
#include <set>

namespace sympinv::detail {

namespace {

Mat identity_like(const Mat& m) { return Mat::identity(m.field(), m.rows()); }

Scalar form(const Mat& gram, const Mat& u, const Mat& w) { return (u * gram * w.transpose())(0, 0); }

// Rows spanning {x in span(rows) : f(x, against) = 0}, as combinations of rows.
Mat annihilator_in(const Mat& gram, const Mat& rows, const Mat& against) {
  if (against.rows() == 0) return rows;
  return left_kernel(rows * gram * against.transpose()) * rows;
}

int height(const Mat& nil) {
  Mat p = identity_like(nil);
  for (int j = 0; j <= static_cast<int>(nil.rows()); ++j) {
    if (p.is_zero()) return j;
    p = p * nil;
  }
  throw DomainError("element is not unipotent on this component");
}

[[noreturn]] void exhausted(const char* what) { throw BudgetExceeded(std::string(what) + ": search budget exhausted"); }

}  // namespace

Mat random_row_in(const Mat& basis, Rng& rng) {
  return random_matrix(basis.field(), 1, basis.rows(), rng) * basis;
}

Mat assemble(const std::vector<Mat>& bases, const std::vector<Mat>& blocks) {
  if (bases.empty()) throw DomainError("assemble: no pieces");
  Mat m = bases[0];
  for (std::size_t i = 1; i < bases.size(); ++i) m = vstack(m, bases[i]);
  return inverse(m) * direct_sum(blocks) * m;
}

std::vector<Component> primary_components(const SymplecticElement& phi) {
  const Field& f = phi.field();
  const Mat& a = phi.matrix();
  std::vector<Component> out;
  if (phi.dim() == 0) return out;
  Poly mu = minimal_polynomial(a);
  Poly xm1 = Poly::linear(Scalar::one(f)), xp1 = Poly::linear(-Scalar::one(f));
  auto ker = [&](const Poly& h) { return kernel(eval(h, a)).basis(); };

  if (!f.is_prime()) {
    Poly rest = mu;
    int em = 0, ep = 0;
    while ((rest % xm1).is_zero()) rest = divmod(rest, xm1).first, ++em;
    while ((rest % xp1).is_zero()) rest = divmod(rest, xp1).first, ++ep;
    if (em > 0) out.push_back({ComponentKind::unipotent, xm1, xm1, em, ker(xm1.pow(em))});
    if (ep > 0) out.push_back({ComponentKind::negative, xp1, xp1, ep, ker(xp1.pow(ep))});
    if (rest.degree() > 0) out.push_back({ComponentKind::unsplit, rest, rest, 1, ker(rest)});
    return out;
  }

  auto fac = factorize(mu);
  std::set<std::string> used;
  for (const auto& fc : fac.factors) {
    if (used.count(fc.base.to_string())) continue;
    const Poly& p = fc.base;
    const int e = fc.exponent;
    Poly ps = reciprocal(p);
    used.insert(p.to_string());
    if (p == xm1) {
      out.push_back({ComponentKind::unipotent, p, p, e, ker(p.pow(e))});
    } else if (p == xp1) {
      out.push_back({ComponentKind::negative, p, p, e, ker(p.pow(e))});
    } else if (ps == p) {
      out.push_back({ComponentKind::self_reciprocal, p, p, e, ker(p.pow(e))});
    } else {
      used.insert(ps.to_string());
      out.push_back({ComponentKind::paired, p, ps, e, ker((p * ps).pow(e))});
    }
  }
  return out;
}

std::vector<LocalPiece> unipotent_pieces(const SymplecticElement& u, Search s, const LayerTarget& target) {
  const Field& f = u.field();
  Poly xm1 = Poly::linear(Scalar::one(f));
  std::vector<LocalPiece> out;
  std::map<int, std::vector<Scalar>> chosen;
  Mat w = Mat::identity(f, u.dim());
  while (w.rows() > 0) {
    SymplecticElement e = u.restrict_to(w);
    const Mat& g = e.gram();
    Mat nm = identity_like(e.matrix()) - e.matrix();
    const int h = height(nm);
    Mat top = nm.pow(h - 1);
    Mat local(f, 0, w.rows());
    LocalPiece piece{h == 1 ? PieceType::plane : PieceType::type1, Mat(f, 0, 0), xm1, h, std::nullopt, std::nullopt};
    if (h % 2 == 0) {
      std::optional<Scalar> want = target ? target(h, chosen[h]) : std::nullopt;
      bool found = false;
      for (std::uint64_t it = 0; it < s.budget && !found; ++it) {
        Mat v = random_matrix(f, 1, w.rows(), s.rng);
        Scalar c = form(g, v * top, v);
        if (c.is_zero()) continue;
        Scalar cls = square_class(c);
        if (want && cls != *want) continue;
        local = krylov(v, e.matrix(), static_cast<std::size_t>(h));
        piece.type = PieceType::type2;
        piece.generator = v * w;
        piece.layer_class = cls;
        chosen[h].push_back(cls);
        found = true;
      }
      if (!found) exhausted("unipotent_pieces");
    } else {
      bool found = false;
      for (std::uint64_t it = 0; it < s.budget && !found; ++it) {
        Mat v = random_matrix(f, 1, w.rows(), s.rng), x = random_matrix(f, 1, w.rows(), s.rng);
        if ((v * top).is_zero() || (x * top).is_zero()) continue;
        Mat k = vstack(krylov(v, e.matrix(), static_cast<std::size_t>(h)), krylov(x, e.matrix(), static_cast<std::size_t>(h)));
        if (!is_invertible(k * g * k.transpose())) continue;
        local = k;
        found = true;
      }
      if (!found) exhausted("unipotent_pieces");
    }
    piece.basis = local * w;
    out.push_back(piece);
    w = left_kernel(g * local.transpose()) * w;
  }
  return out;
}

std::vector<LocalPiece> self_reciprocal_pieces(const SymplecticElement& c, const Poly& p, Search s) {
  const Field& f = c.field();
  std::vector<LocalPiece> out;
  Mat w = Mat::identity(f, c.dim());
  while (w.rows() > 0) {
    SymplecticElement e = c.restrict_to(w);
    Poly mu = minimal_polynomial(e.matrix());
    const auto d = static_cast<std::size_t>(mu.degree());
    bool found = false;
    for (std::uint64_t it = 0; it < s.budget && !found; ++it) {
      Mat v = random_matrix(f, 1, w.rows(), s.rng);
      Mat k = krylov(v, e.matrix(), d);
      if (!is_invertible(k * e.gram() * k.transpose())) continue;
      if (vector_annihilator(v, e.matrix()) != mu) continue;
      out.push_back({PieceType::type2, k * w, p, mu.degree() / p.degree(), v * w, std::nullopt});
      w = left_kernel(e.gram() * k.transpose()) * w;
      found = true;
    }
    if (!found) exhausted("self_reciprocal_pieces");
  }
  return out;
}

std::vector<LocalPiece> paired_pieces(const SymplecticElement& c, const Poly& p, const Poly& pstar, int e) {
  const Mat& a = c.matrix();
  Mat x = kernel(eval(p.pow(e), a)).basis(), y = kernel(eval(pstar.pow(e), a)).basis();
  CyclicDecomposition cd = cyclic_decomposition(restrict_action(x, a));
  std::vector<Mat> xs;
  std::size_t row = 0;
  for (const auto& h : cd.factors) {
    const auto d = static_cast<std::size_t>(h.degree());
    xs.push_back(cd.basis.block(row, 0, d, cd.basis.cols()) * x);
    row += d;
  }
  std::vector<LocalPiece> out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Mat others(c.field(), 0, c.dim());
    for (std::size_t j = 0; j < xs.size(); ++j)
      if (j != i) others = vstack(others, xs[j]);
    Mat yi = annihilator_in(c.gram(), y, others);
    out.push_back({PieceType::type3, vstack(xs[i], yi), p, cd.factors[i].degree() / p.degree(), std::nullopt,
                   std::nullopt});
  }
  return out;
}

std::vector<LocalPiece> component_pieces(const SymplecticElement& c, const Component& comp, Search s,
                                         const LayerTarget& target) {
  switch (comp.kind) {
    case ComponentKind::unipotent: return unipotent_pieces(c, s, target);
    case ComponentKind::negative: {
      auto out = unipotent_pieces(c.negate(), s, target);
      for (auto& pc : out) pc.base = comp.base;
      return out;
    }
    case ComponentKind::self_reciprocal: return self_reciprocal_pieces(c, comp.base, s);
    case ComponentKind::paired: return paired_pieces(c, comp.base, comp.dual, comp.exponent);
    default: throw UnsupportedField("orthogonal decomposition: component cannot be split over this field");
  }
}

std::optional<std::pair<Mat, Mat>> split_cyclic_lagrangians(const SymplecticElement& w, Search s) {
  const Field& f = w.field();
  const std::size_t d = w.dim() / 2;
  const Mat& a = w.matrix();
  const Mat& g = w.gram();
  auto isotropic_cyclic = [&](const Mat& v) -> std::optional<Mat> {
    Mat k = krylov(v, a, d);
    if (!(k * g * k.transpose()).is_zero()) return std::nullopt;
    if (rank(k) != d || rank(krylov(v, a, d + 1)) != d) return std::nullopt;
    return k;
  };
  std::optional<Mat> ka;
  std::uint64_t it = 0;
  for (; it < s.budget && !ka; ++it) ka = isotropic_cyclic(random_matrix(f, 1, w.dim(), s.rng));
  if (!ka) return std::nullopt;
  for (; it < s.budget; ++it) {
    auto kb = isotropic_cyclic(random_matrix(f, 1, w.dim(), s.rng));
    if (kb && rank(vstack(*ka, *kb)) == 2 * d) return std::make_pair(*ka, *kb);
  }
  return std::nullopt;
}

std::optional<std::pair<Mat, Mat>> invariant_lagrangians(const SymplecticElement& phi, bool balanced, Search s) {
  const Field& f = phi.field();
  Mat l1(f, 0, phi.dim()), l2(f, 0, phi.dim());
  auto add_split = [&](const SymplecticElement& c, const Mat& local, const Mat& to_ambient) {
    auto sp = split_cyclic_lagrangians(c.restrict_to(local), s);
    if (!sp) return false;
    l1 = vstack(l1, sp->first * local * to_ambient);
    l2 = vstack(l2, sp->second * local * to_ambient);
    return true;
  };

  for (const auto& comp : primary_components(phi)) {
    SymplecticElement c = phi.restrict_to(comp.basis);
    const Mat& a = c.matrix();
    switch (comp.kind) {
      case ComponentKind::paired: {
        Mat x = kernel(eval(comp.base.pow(comp.exponent), a)).basis();
        Mat y = kernel(eval(comp.dual.pow(comp.exponent), a)).basis();
        if (!balanced) {
          l1 = vstack(l1, x * comp.basis);
          l2 = vstack(l2, y * comp.basis);
          break;
        }
        CyclicDecomposition cd = cyclic_decomposition(restrict_action(x, a));
        Mat x1(f, 0, c.dim()), x2(f, 0, c.dim());
        std::size_t row = 0;
        for (std::size_t i = 0; i < cd.factors.size(); i += 2) {
          if (i + 1 >= cd.factors.size() || cd.factors[i] != cd.factors[i + 1]) return std::nullopt;
          const auto d = static_cast<std::size_t>(cd.factors[i].degree());
          x1 = vstack(x1, cd.basis.block(row, 0, d, cd.basis.cols()) * x);
          x2 = vstack(x2, cd.basis.block(row + d, 0, d, cd.basis.cols()) * x);
          row += 2 * d;
        }
        l1 = vstack(l1, vstack(x1, annihilator_in(c.gram(), y, x1)) * comp.basis);
        l2 = vstack(l2, vstack(x2, annihilator_in(c.gram(), y, x2)) * comp.basis);
        break;
      }
      case ComponentKind::self_reciprocal: {
        auto pcs = self_reciprocal_pieces(c, comp.base, s);
        for (std::size_t i = 0; i < pcs.size(); i += 2) {
          if (i + 1 >= pcs.size() || pcs[i].exponent != pcs[i + 1].exponent) return std::nullopt;
          if (!add_split(c, vstack(pcs[i].basis, pcs[i + 1].basis), comp.basis)) return std::nullopt;
        }
        break;
      }
      case ComponentKind::unipotent:
      case ComponentKind::negative: {
        // Pair the cyclic pieces of each even layer as <c> + <-c>.
        LayerTarget pairing = [](int, const std::vector<Scalar>& earlier) -> std::optional<Scalar> {
          if (earlier.size() % 2 == 0) return std::nullopt;
          return square_class(-earlier.back());
        };
        std::vector<LocalPiece> pcs;
        try {
          pcs = component_pieces(c, comp, s, pairing);
        } catch (const BudgetExceeded&) {
          return std::nullopt;
        }
        SymplecticElement u = comp.kind == ComponentKind::negative ? c.negate() : c;
        for (std::size_t i = 0; i < pcs.size(); ++i) {
          if (pcs[i].type == PieceType::type2) {
            if (i + 1 >= pcs.size() || pcs[i + 1].type != PieceType::type2 || pcs[i].exponent != pcs[i + 1].exponent)
              return std::nullopt;
            if (!add_split(u, vstack(pcs[i].basis, pcs[i + 1].basis), comp.basis)) return std::nullopt;
            ++i;
          } else if (!add_split(u, pcs[i].basis, comp.basis)) {
            return std::nullopt;
          }
        }
        break;
      }
      default: return std::nullopt;
    }
  }
  return std::make_pair(l1, l2);
}

bool operator==(const UnipotentSignature& a, const UnipotentSignature& b) {
  if (a.sizes != b.sizes || a.layers.size() != b.layers.size()) return false;
  for (std::size_t i = 0; i < a.layers.size(); ++i)
    if (a.layers[i].size != b.layers[i].size || a.layers[i].multiplicity != b.layers[i].multiplicity ||
        a.layers[i].discriminant_class != b.layers[i].discriminant_class)
      return false;
  return true;
}

UnipotentSignature unipotent_signature(const Mat& u, const Mat& gram) {
  return {linear_elementary_divisors(u, Scalar::one(u.field())), unipotent_layer_forms(u, gram)};
}

std::optional<Mat> unipotent_isometry(const SymplecticElement& a1, const SymplecticElement& a2, Search s) {
  if (a1.dim() != a2.dim()) return std::nullopt;
  if (a1.dim() == 0) return Mat(a1.field(), 0, 0);
  if (!(unipotent_signature(a1.matrix(), a1.gram()) == unipotent_signature(a2.matrix(), a2.gram())))
    return std::nullopt;
  auto p1 = unipotent_pieces(a1, s);
  std::map<int, std::vector<Scalar>> classes;
  for (const auto& pc : p1)
    if (pc.layer_class) classes[pc.exponent].push_back(*pc.layer_class);
  LayerTarget match = [&](int size, const std::vector<Scalar>& earlier) -> std::optional<Scalar> {
    return classes[size].at(earlier.size());
  };
  auto p2 = unipotent_pieces(a2, s, match);
  if (p1.size() != p2.size()) throw Error("unipotent_isometry: decompositions do not align");

  auto frame = [&](const SymplecticElement& e, const LocalPiece& pc) -> Mat {
    if (pc.type == PieceType::plane) return symplectic_frame(e.gram());
    auto sp = split_cyclic_lagrangians(e, s);
    if (!sp) exhausted("unipotent_isometry");
    return symplectic_basis_from_lagrangians(e.gram(), sp->first, sp->second);
  };

  Mat m1(a1.field(), 0, a1.dim()), images(a1.field(), 0, a2.dim());
  for (std::size_t i = 0; i < p1.size(); ++i) {
    if (p1[i].type != p2[i].type || p1[i].exponent != p2[i].exponent)
      throw Error("unipotent_isometry: decompositions do not align");
    SymplecticElement e1 = a1.restrict_to(p1[i].basis), e2 = a2.restrict_to(p2[i].basis);
    Mat local(a1.field(), 0, 0);
    if (p1[i].type == PieceType::type2) {
      auto c = sp_conjugate_unipotent_cyclic(e1, e2);
      if (!c) throw Error("unipotent_isometry: matched pieces are not conjugate");
      local = *c;
    } else {
      local = inverse(frame(e1, p1[i])) * frame(e2, p2[i]);
    }
    m1 = vstack(m1, p1[i].basis);
    images = vstack(images, local * p2[i].basis);
  }
  Mat alpha = inverse(m1) * images;
  if (a1.matrix() * alpha != alpha * a2.matrix() || alpha * a2.gram() * alpha.transpose() != a1.gram())
    throw Error("unipotent_isometry: assembled map is not an equivariant isometry");
  return alpha;
}

}  // namespace sympinv::detail
