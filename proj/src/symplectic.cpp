#include "sympinv/symplectic.hpp"

namespace sympinv {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes: return "true";
    case Verdict::no: return "false";
    default: return "unknown";
  }
}

SymplecticSpace::SymplecticSpace(Mat gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || !gram_.is_antisymmetric()) throw DomainError("symplectic form: gram not antisymmetric");
  if (!is_invertible(gram_)) throw DomainError("symplectic form: gram is degenerate");
}

Scalar SymplecticSpace::form(const Mat& u, const Mat& w) const { return (u * gram_ * w.transpose())(0, 0); }

Subspace SymplecticSpace::perp(const Mat& rows) const {
  if (rows.rows() == 0) return Subspace::whole(field(), dim());
  return kernel(gram_ * rows.transpose());
}

bool SymplecticSpace::is_standard() const { return gram_ == Mat::standard_symplectic(field(), dim() / 2); }

bool is_symplectic(const Mat& p, const Mat& gram) { return p * gram * p.transpose() == gram; }
bool is_skew_symplectic(const Mat& p, const Mat& gram) { return p * gram * p.transpose() == -gram; }

SymplecticElement::SymplecticElement(Mat matrix, SymplecticSpace space) : m_(std::move(matrix)), space_(std::move(space)) {
  if (!m_.is_square() || m_.rows() != space_.dim()) throw NotSymplectic("matrix size does not match the form");
  if (!is_symplectic(m_, space_.gram())) throw NotSymplectic("matrix does not preserve the form");
}

SymplecticElement SymplecticElement::standard(Mat matrix) {
  if (matrix.rows() % 2 != 0) throw NotSymplectic("odd dimension");
  auto n = matrix.rows() / 2;
  Field f = matrix.field();
  return SymplecticElement(std::move(matrix), SymplecticSpace::standard(f, n));
}

SymplecticElement SymplecticElement::inverse() const { return SymplecticElement(sympinv::inverse(m_), space_); }
SymplecticElement SymplecticElement::negate() const { return SymplecticElement(-m_, space_); }

SymplecticElement SymplecticElement::operator*(const SymplecticElement& o) const {
  if (o.gram() != gram()) throw DomainError("product of isometries of different forms");
  return SymplecticElement(m_ * o.m_, space_);
}

SymplecticElement SymplecticElement::restrict_to(const Mat& basis) const {
  return SymplecticElement(restrict_action(basis, m_), basis * gram() * basis.transpose());
}

Mat wall_gram(const SymplecticElement& phi, const Mat& bahn_basis) {
  const Field& f = phi.field();
  Mat nm = Mat::identity(f, phi.dim()) - phi.matrix();
  auto pre = solve_left(nm, bahn_basis);
  if (!pre) throw DomainError("wall_gram: rows are not in Bahn");
  return *pre * phi.gram() * bahn_basis.transpose();
}

WallFormData wall_form(const SymplecticElement& phi) {
  const Field& f = phi.field();
  Mat b = image(phi.matrix() - Mat::identity(f, phi.dim())).basis();
  Mat g = wall_gram(phi, b);
  Scalar theta = det(g);
  return {b, g, theta, square_class(theta)};
}

namespace {

bool is_unipotent(const Mat& m) {
  Mat nm = m - Mat::identity(m.field(), m.rows());
  return nm.pow(static_cast<std::int64_t>(m.rows())).is_zero();
}

// Rows of `big` (a basis) that extend a basis of `small` to one of their span.
Mat relative_complement(const Mat& big, const Subspace& small) {
  Subspace cur = small;
  Mat out(big.field(), 0, big.cols());
  for (std::size_t i = 0; i < big.rows(); ++i) {
    Mat r = big.row(i);
    if (cur.contains(r)) continue;
    cur = cur + Subspace::span(r);
    out = vstack(out, r);
  }
  return out;
}

struct QuotientData {
  Mat reps;  // complement of Fix in Bahn
  Mat action;
  Mat gram;
};

QuotientData bahn_mod_fix(const Mat& phi, const Mat& gram) {
  const Field& f = phi.field();
  Mat nm = Mat::identity(f, phi.rows()) - phi;
  Subspace bahn = image(nm), fix = kernel(nm);
  if (!bahn.contains(fix)) throw DomainError("quotient Bahn/Fix: Fix is not inside Bahn");
  Mat reps = relative_complement(bahn.basis(), fix);
  Mat full = vstack(reps, fix.basis());
  auto coords = solve_left(full, reps * phi);
  Mat action = coords->block(0, 0, reps.rows(), reps.rows());
  return {reps, action, reps * gram * reps.transpose()};
}

// u outside Bahn with f(u_j, u_{j+1}) = 0 for 0 <= j <= n-2, u_j = u (1-phi)^j,
// by induction through Bahn/Fix.
Mat wall_generator(const Mat& phi, const Mat& gram) {
  const Field& f = phi.field();
  const std::size_t dim = phi.rows();
  Mat id = Mat::identity(f, dim);
  Mat nm = id - phi;
  Subspace bahn = image(nm);
  if (dim == 2) {
    for (std::size_t i = 0; i < dim; ++i) {
      Mat e(f, 1, dim);
      e(0, i) = Scalar::one(f);
      if (!bahn.contains(e)) return e;
    }
  }
  QuotientData q = bahn_mod_fix(phi, gram);
  Mat w = wall_generator(q.action, q.gram) * q.reps;
  Mat v = *solve_left(nm, w);
  Mat d = v * (phi - inverse(phi));
  Mat fix2 = kernel(nm * nm).basis();
  auto form = [&](const Mat& a, const Mat& b) { return (a * gram * b.transpose())(0, 0); };
  for (std::size_t i = 0; i < fix2.rows(); ++i) {
    Mat z = fix2.row(i);
    Scalar den = form(z, d);
    if (den.is_zero()) continue;
    Scalar lambda = -form(v, v * phi) / den;
    return v + z * lambda;
  }
  throw Error("wall_antitriangular: no correction vector in Fix^2");
}

Mat antitriangular_matrix(const Mat& u, const Mat& phi, const Mat& gram) {
  const Field& f = phi.field();
  const std::size_t m = phi.rows() - 1;
  Mat nm = Mat::identity(f, phi.rows()) - phi;
  Mat k = krylov(u, nm, phi.rows());
  Mat all = k * gram * k.transpose();
  // a(i, j) = f(u_{i-1}, u_j) for 1 <= i, j <= 2n-1.
  return all.block(0, 1, m, m);
}

Mat normalized_wall_generator(const Mat& phi, const Mat& gram, Scalar* theta_out) {
  const std::size_t n = phi.rows() / 2;
  Mat u = wall_generator(phi, gram);
  Mat a = antitriangular_matrix(u, phi, gram);
  Scalar sign = n % 2 == 1 ? Scalar::one(phi.field()) : -Scalar::one(phi.field());
  Scalar theta = sign * a(n - 1, n - 1);
  Scalar canon = square_class(theta);
  auto c = sqrt(canon / theta);
  if (!c) throw Error("wall_antitriangular: normalization is not a square");
  if (theta_out) *theta_out = canon;
  return u * *c;
}

void require_cyclic_unipotent(const SymplecticElement& phi, const char* who) {
  if (phi.dim() == 0 || !is_unipotent(phi.matrix()) || !is_cyclic(phi.matrix()))
    throw DomainError(std::string(who) + ": element is not cyclic unipotent");
}

}  // namespace

AntitriangularForm wall_antitriangular(const SymplecticElement& phi) {
  require_cyclic_unipotent(phi, "wall_antitriangular");
  Scalar theta;
  Mat u = normalized_wall_generator(phi.matrix(), phi.gram(), &theta);
  return {u, antitriangular_matrix(u, phi.matrix(), phi.gram()), theta};
}

bool antitriangular_conditions_hold(const Mat& a, const Scalar& theta) {
  const std::size_t m = a.rows();
  if (m % 2 == 0 || a.cols() != m) return false;
  const std::size_t n = (m + 1) / 2;
  // One-based accessor; indices outside 1..2n-1 are treated as absent.
  auto at = [&](std::size_t i, std::size_t j) { return a(i - 1, j - 1); };
  auto in = [&](std::size_t i) { return i >= 1 && i <= m; };
  for (std::size_t i = 1; i + 1 <= n; ++i)
    if (!at(i, i).is_zero()) return false;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) {
      if (in(j + 1) && in(i - 1) && at(i, j) != -at(j + 1, i - 1)) return false;
      if (in(i + 1) && at(i, j) - at(j, i) != at(i + 1, j)) return false;
      if (i + j >= 2 * n + 1 && !at(i, j).is_zero()) return false;
    }
  for (std::size_t j = 1; j <= m; ++j) {
    Scalar s = (j - 1) % 2 == 0 ? at(1, m) : -at(1, m);
    if (at(j, 2 * n - j) != s) return false;
  }
  Scalar sign = n % 2 == 1 ? Scalar::one(a.field()) : -Scalar::one(a.field());
  return at(n, n) == sign * theta;
}

SymplecticElement quotient_on_bahn_mod_fix(const SymplecticElement& phi) {
  if (!is_unipotent(phi.matrix())) throw DomainError("quotient_on_bahn_mod_fix: element is not unipotent");
  QuotientData q = bahn_mod_fix(phi.matrix(), phi.gram());
  return SymplecticElement(q.action, q.gram);
}

std::optional<Mat> sp_conjugate_unipotent_cyclic(const SymplecticElement& a, const SymplecticElement& b) {
  require_cyclic_unipotent(a, "sp_conjugate_unipotent_cyclic");
  require_cyclic_unipotent(b, "sp_conjugate_unipotent_cyclic");
  if (a.dim() != b.dim()) return std::nullopt;
  Scalar ta, tb;
  Mat ua = normalized_wall_generator(a.matrix(), a.gram(), &ta);
  Mat ub = normalized_wall_generator(b.matrix(), b.gram(), &tb);
  if (ta != tb) return std::nullopt;
  Mat ka = krylov(ua, a.matrix(), a.dim()), kb = krylov(ub, b.matrix(), b.dim());
  if (ka * a.gram() * ka.transpose() != kb * b.gram() * kb.transpose())
    throw Error("sp_conjugate_unipotent_cyclic: normalized generators have different Gram matrices");
  return inverse(ka) * kb;
}

Mat g_form(const SymplecticElement& phi, int m) {
  if (m < 1) throw DomainError("g_form: m must be positive");
  Mat nm = Mat::identity(phi.field(), phi.dim()) - phi.matrix();
  return nm.pow(2 * m - 1) * phi.gram();
}

std::vector<LayerForm> unipotent_layer_forms(const Mat& phi, const Mat& gram) {
  const Field& f = phi.field();
  const std::size_t dim = phi.rows();
  Mat nm = Mat::identity(f, dim) - phi;
  std::vector<Subspace> ker{Subspace(f, dim)};
  for (std::size_t j = 1; j <= dim + 1; ++j) ker.push_back(kernel(nm.pow(static_cast<std::int64_t>(j))));
  std::vector<LayerForm> out;
  for (std::size_t t = 1; 2 * t <= dim; ++t) {
    const std::size_t s = 2 * t;
    Subspace rad = ker[s - 1];
    if (ker[s + 1].dim() > 0) rad = rad + Subspace::span(ker[s + 1].basis() * nm);
    Mat c = relative_complement(ker[s].basis(), rad);
    if (c.rows() == 0) continue;
    Mat g = c * nm.pow(static_cast<std::int64_t>(s - 1)) * gram * c.transpose();
    out.push_back({static_cast<int>(s), static_cast<int>(c.rows()), square_class(det(g))});
  }
  return out;
}

bool quadratic_form_is_hyperbolic(int dim, const Scalar& discriminant_class) {
  if (dim % 2 != 0) return false;
  Scalar sign = (dim / 2) % 2 == 0 ? Scalar::one(discriminant_class.field()) : -Scalar::one(discriminant_class.field());
  return is_square(sign * discriminant_class);
}

namespace {

// P with P A P' = diag(1, ..., 1, delta).
Mat diagonal_normal_form(const Mat& a, Rng& rng, std::uint64_t budget) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Mat w = Mat::identity(f, n), out(f, 0, n);
  auto q = [&](const Mat& v) { return (v * a * v.transpose())(0, 0); };
  while (w.rows() > 1) {
    bool found = false;
    for (std::uint64_t it = 0; it < budget && !found; ++it) {
      Mat v = random_matrix(f, 1, w.rows(), rng) * w;
      if (q(v).is_one()) {
        out = vstack(out, v);
        w = Subspace::span(w).intersect(kernel(a * v.transpose())).basis();
        found = true;
      }
    }
    if (!found) throw BudgetExceeded("congruence: no vector of norm one found");
  }
  return vstack(out, w);
}

}  // namespace

std::optional<Mat> congruence_transform(const Mat& a, const Mat& b, Rng& rng) {
  if (!a.field().is_prime()) throw UnsupportedField("congruence_transform: prime fields only");
  if (!a.is_symmetric() || !b.is_symmetric() || !is_invertible(a) || !is_invertible(b))
    throw DomainError("congruence_transform: forms must be symmetric and nondegenerate");
  if (a.rows() != b.rows()) return std::nullopt;
  if (a.rows() == 0) return a;
  if (!is_square(det(a) / det(b))) return std::nullopt;
  Mat pa = diagonal_normal_form(a, rng, default_search_budget());
  Mat pb = diagonal_normal_form(b, rng, default_search_budget());
  const std::size_t last = a.rows() - 1;
  Scalar da = (pa * a * pa.transpose())(last, last), db = (pb * b * pb.transpose())(last, last);
  Scalar c = *sqrt(db / da);
  for (std::size_t j = 0; j < a.cols(); ++j) pa(last, j) *= c;
  return inverse(pb) * pa;
}

namespace {

// Rows c with f(c_i, l_j) = delta_ij and f(c_i, c_k) = 0.
Mat dual_isotropic_rows(const Mat& gram, const Mat& l) {
  const Field& f = gram.field();
  const std::size_t n = l.rows();
  Mat out(f, 0, gram.rows());
  for (std::size_t i = 0; i < n; ++i) {
    Mat cons = vstack(l * gram.transpose(), out * gram.transpose());
    Mat rhs(f, cons.rows(), 1);
    rhs(i, 0) = Scalar::one(f);
    auto c = solve_right(cons, rhs);
    if (!c) throw Error("lagrangian complement: inconsistent system");
    out = vstack(out, c->transpose());
  }
  return out;
}

}  // namespace

Mat symplectic_basis_from_lagrangians(const Mat& gram, const Mat& l1, const Mat& l2) {
  Mat fm = l1 * gram * l2.transpose();
  Mat c = inverse(fm).transpose() * l2;
  return vstack(l1, c);
}

bool is_big_transvection(const SymplecticElement& phi) {
  Mat m = phi.matrix() - Mat::identity(phi.field(), phi.dim());
  return (m * m).is_zero();
}

BigTransvectionData big_transvection_data(const SymplecticElement& phi) {
  if (!is_big_transvection(phi)) throw DomainError("big_transvection_data: Bahn is not inside Fix");
  const Field& f = phi.field();
  const std::size_t dim = phi.dim(), n = dim / 2;
  Subspace bahn = image(phi.matrix() - Mat::identity(f, dim));
  const std::size_t r = bahn.dim();
  // Extend Bahn to a Lagrangian; the added rows come first.
  Mat extra(f, 0, dim);
  Subspace lag = bahn;
  while (lag.dim() < n) {
    Mat cand = phi.space().perp(lag.basis()).basis();
    Mat add = relative_complement(cand, lag);
    Mat v = add.row(0);
    extra = vstack(extra, v);
    lag = lag + Subspace::span(v);
  }
  Mat l = vstack(extra, bahn.basis());
  Mat c = -dual_isotropic_rows(phi.gram(), l);
  Mat conj = vstack(l, c);
  Mat nf = conj * phi.matrix() * inverse(conj);
  Mat s = nf.block(n, 0, n, n);
  Mat t = s.block(n - r, n - r, r, r);
  std::optional<Mat> cong;
  if (f.is_prime() && r > 0) {
    Rng rng(0xb1b1);
    cong = congruence_transform(t, wall_form(phi).gram_omega, rng);
    if (!cong) throw Error("big_transvection_data: normal form is not congruent to the Wall form");
  }
  return {conj, nf, s, t, cong};
}

Mat symplectic_frame(const Mat& gram) {
  const Field& f = gram.field();
  const std::size_t dim = gram.rows();
  SymplecticSpace space(gram);
  Mat es(f, 0, dim), fs(f, 0, dim);
  Mat w = Mat::identity(f, dim);
  while (w.rows() > 0) {
    Mat e = w.row(0);
    Mat partner(f, 0, dim);
    for (std::size_t i = 1; i < w.rows() && partner.rows() == 0; ++i) {
      Scalar v = space.form(e, w.row(i));
      if (!v.is_zero()) partner = w.row(i) * v.inv();
    }
    if (partner.rows() == 0) throw DomainError("symplectic_frame: degenerate form");
    es = vstack(es, e);
    fs = vstack(fs, partner);
    w = Subspace::span(w).intersect(space.perp(vstack(e, partner))).basis();
  }
  return vstack(es, fs);
}

Mat random_symplectic(const Mat& gram, Rng& rng) {
  const Field& f = gram.field();
  const std::size_t dim = gram.rows();
  Mat out = Mat::identity(f, dim);
  for (std::size_t k = 0; k < 4 * dim + 4; ++k) {
    Mat v = random_matrix(f, 1, dim, rng);
    Scalar a = random_scalar(f, rng);
    out = out * (Mat::identity(f, dim) + gram * v.transpose() * v * a);
  }
  return out;
}

std::optional<SymplecticElement> symplectic_realization(const Poly& h, Rng& rng,
                                                        const std::optional<Scalar>& theta_class,
                                                        std::uint64_t budget) {
  const Field& f = h.field();
  const auto d = static_cast<std::size_t>(h.degree());
  if (d == 0 || d % 2 != 0) throw DomainError("symplectic_realization: degree must be even and positive");
  Mat c = Mat::companion(h);
  // Antisymmetric G with C G C' = G, as the kernel of a linear system.
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) vars.emplace_back(i, j);
  auto build = [&](const Mat& coeffs) {
    Mat g(f, d, d);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      g(vars[v].first, vars[v].second) = coeffs(0, v);
      g(vars[v].second, vars[v].first) = -coeffs(0, v);
    }
    return g;
  };
  Mat sys(f, d * d, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    Mat e(f, 1, vars.size());
    e(0, v) = Scalar::one(f);
    Mat ev = build(e);
    Mat r = c * ev * c.transpose() - ev;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys(i * d + j, v) = r(i, j);
  }
  Mat sols = left_kernel(sys.transpose());
  if (sols.rows() == 0) return std::nullopt;
  for (std::uint64_t it = 0; it < budget; ++it) {
    Mat g = build(random_matrix(f, 1, sols.rows(), rng) * sols);
    if (!is_invertible(g)) continue;
    Mat m = symplectic_frame(g);
    SymplecticElement out = SymplecticElement::standard(m * c * inverse(m));
    if (theta_class && wall_form(out).theta_class != *theta_class) continue;
    return out;
  }
  return std::nullopt;
}

}  // namespace sympinv
