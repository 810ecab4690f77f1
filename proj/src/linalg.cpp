#include "sympinv/linalg.hpp"

#include <map>

namespace sympinv {

namespace {

constexpr int kSearchAttempts = 20000;

Mat unit_row(const Field& f, std::size_t n, std::size_t i) {
  Mat e(f, 1, n);
  e(0, i) = Scalar::one(f);
  return e;
}

// A row vector of length n: the i-th standard vector for small i, random after.
Mat candidate_row(const Field& f, std::size_t n, int attempt, Rng& rng) {
  if (static_cast<std::size_t>(attempt) < n) return unit_row(f, n, static_cast<std::size_t>(attempt));
  return random_matrix(f, 1, n, rng);
}

Poly poly_radical(const Poly& f) {
  if (f.field().is_prime()) return radical(f);
  return divmod(f, gcd(f, f.derivative())).first.monic();
}

Mat cyclic_vector(const Mat& a, const Poly& mu, Rng& rng) {
  for (int attempt = 0; attempt < kSearchAttempts; ++attempt) {
    Mat u = candidate_row(a.field(), a.rows(), attempt, rng);
    if (vector_annihilator(u, a) == mu) return u;
  }
  throw Error("cyclic_vector: search budget exhausted");
}

}  // namespace

Subspace spaces(const Mat& a, SpaceKind which, int j) {
  if (!a.is_square()) throw DomainError("spaces: matrix not square");
  const std::size_t n = a.rows();
  Mat id = Mat::identity(a.field(), n);
  Mat m = which == SpaceKind::neg ? a + id : a - id;
  Mat pw = m.pow(j == kStable ? static_cast<std::int64_t>(n) : j);
  return which == SpaceKind::bahn ? image(pw) : kernel(pw);
}

Poly SimilarityInvariants::minimal_polynomial() const {
  if (invariant_factors.empty()) throw DomainError("minimal_polynomial: empty matrix");
  return invariant_factors.back();
}

Poly SimilarityInvariants::characteristic_polynomial() const {
  if (invariant_factors.empty()) throw DomainError("characteristic_polynomial: empty matrix");
  Poly c = Poly::constant(Scalar::one(invariant_factors[0].field()));
  for (const auto& f : invariant_factors) c = c * f;
  return c;
}

SimilarityInvariants invariant_factors(const Mat& a) {
  if (!a.is_square()) throw DomainError("invariant_factors: matrix not square");
  const std::size_t n = a.rows();
  const Field& f = a.field();
  std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n, Poly(f)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      m[i][j] = Poly::constant(-a(i, j));
      if (i == j) m[i][j] = m[i][j] + Poly::x(f);
    }

  auto row_sub = [&](std::size_t dst, std::size_t src, const Poly& q, std::size_t from) {
    for (std::size_t j = from; j < n; ++j) m[dst][j] = m[dst][j] - q * m[src][j];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const Poly& q, std::size_t from) {
    for (std::size_t i = from; i < n; ++i) m[i][dst] = m[i][dst] - q * m[i][src];
  };

  SimilarityInvariants out;
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (!m[i][j].is_zero() && (bi == n || m[i][j].degree() < m[bi][bj].degree())) {
            bi = i;
            bj = j;
          }
      if (bi == n) throw Error("invariant_factors: singular characteristic matrix");
      std::swap(m[k], m[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(m[i][k], m[i][bj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (m[i][k].is_zero()) continue;
        auto [q, r] = divmod(m[i][k], m[k][k]);
        row_sub(i, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (m[k][j].is_zero()) continue;
        auto [q, r] = divmod(m[k][j], m[k][k]);
        col_sub(j, k, q, k);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = k + 1; i < n && divides; ++i)
        for (std::size_t j = k + 1; j < n && divides; ++j)
          if (!(m[i][j] % m[k][k]).is_zero()) {
            for (std::size_t c = k; c < n; ++c) m[k][c] = m[k][c] + m[i][c];
            divides = false;
          }
      if (divides) break;
    }
    Poly d = m[k][k].monic();
    if (d.degree() >= 1) out.invariant_factors.push_back(d);
  }
  if (f.is_prime() && n > 0) out.elementary_divisors = elementary_divisors(out.invariant_factors);
  return out;
}

std::vector<ElementaryDivisor> elementary_divisors(const std::vector<Poly>& invariant_factors) {
  std::map<std::pair<Poly, int>, int> count;
  for (const auto& f : invariant_factors)
    for (const auto& fac : factorize(f).factors) ++count[{fac.base, fac.exponent}];
  std::vector<ElementaryDivisor> out;
  for (const auto& [key, m] : count) out.push_back({key.first, key.second, m});
  return out;
}

std::vector<std::pair<int, int>> linear_elementary_divisors(const Mat& a, const Scalar& c) {
  if (!a.is_square()) throw DomainError("linear_elementary_divisors: matrix not square");
  const std::size_t n = a.rows();
  Mat m = a - Mat::scalar(c, n);
  std::vector<std::size_t> r{n};
  Mat pw = Mat::identity(a.field(), n);
  for (;;) {
    pw = pw * m;
    r.push_back(rank(pw));
    if (r.back() == r[r.size() - 2]) break;
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 1; t + 1 < r.size(); ++t) {
    std::int64_t mult = static_cast<std::int64_t>(r[t - 1]) - 2 * static_cast<std::int64_t>(r[t]) +
                        static_cast<std::int64_t>(r[t + 1]);
    if (mult > 0) out.emplace_back(static_cast<int>(t), static_cast<int>(mult));
  }
  return out;
}

bool is_similar(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || !a.is_square() || !b.is_square()) throw DomainError("is_similar: size mismatch");
  if (a.field() != b.field()) throw FieldMismatch();
  return invariant_factors(a).invariant_factors == invariant_factors(b).invariant_factors;
}

Poly vector_annihilator(const Mat& v, const Mat& a) {
  const Field& f = a.field();
  Mat k(f, 0, a.cols());
  Mat cur = v;
  for (;;) {
    if (k.rows() > 0) {
      if (auto c = solve_left(k, cur)) {
        std::vector<Scalar> coeffs;
        for (std::size_t i = 0; i < k.rows(); ++i) coeffs.push_back(-(*c)(0, i));
        coeffs.push_back(Scalar::one(f));
        return Poly(f, coeffs);
      }
    } else if (cur.is_zero()) {
      return Poly::constant(Scalar::one(f));
    }
    k = vstack(k, cur);
    cur = cur * a;
  }
}

Poly minimal_polynomial(const Mat& a) {
  if (a.rows() == 0) return Poly::constant(Scalar::one(a.field()));
  Poly m = Poly::constant(Scalar::one(a.field()));
  for (std::size_t i = 0; i < a.rows(); ++i) m = lcm(m, vector_annihilator(unit_row(a.field(), a.rows(), i), a));
  return m;
}

Mat krylov(const Mat& v, const Mat& a, std::size_t d) {
  Mat k(a.field(), d, a.cols());
  Mat cur = v;
  for (std::size_t i = 0; i < d; ++i) {
    k.set_block(i, 0, cur);
    cur = cur * a;
  }
  return k;
}

Mat restrict_action(const Mat& basis, const Mat& a) {
  if (basis.rows() == 0) return Mat(a.field(), 0, 0);
  auto x = solve_left(basis, basis * a);
  if (!x) throw DomainError("restrict_action: subspace is not invariant");
  return *x;
}

bool is_cyclic(const Mat& a) {
  return a.rows() == 0 || minimal_polynomial(a).degree() == static_cast<int>(a.rows());
}

CyclicDecomposition cyclic_decomposition(const Mat& a, Rng& rng) {
  if (!a.is_square()) throw DomainError("cyclic_decomposition: matrix not square");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  CyclicDecomposition out{Mat(f, 0, n), {}, {}};
  Mat w = Mat::identity(f, n);
  while (w.rows() > 0) {
    const std::size_t k = w.rows();
    Mat aw = restrict_action(w, a);
    Poly mu = minimal_polynomial(aw);
    const auto d = static_cast<std::size_t>(mu.degree());
    Mat u = cyclic_vector(aw, mu, rng);
    Mat ku = krylov(u, aw, d);

    // A functional z whose Krylov columns pair nondegenerately with ku; the
    // common kernel of those columns is an invariant complement of <u>.
    Mat zcols(f, k, d);
    bool found = false;
    Mat awt = aw.transpose();
    for (int attempt = 0; attempt < kSearchAttempts && !found; ++attempt) {
      Mat z = candidate_row(f, k, attempt, rng);
      zcols = krylov(z, awt, d).transpose();
      found = is_invertible(ku * zcols);
    }
    if (!found) throw Error("cyclic_decomposition: no complementary functional found");

    out.generators.push_back(u * w);
    out.factors.push_back(mu);
    out.basis = vstack(out.basis, ku * w);
    w = left_kernel(zcols) * w;
  }
  return out;
}

CyclicDecomposition cyclic_decomposition(const Mat& a) {
  Rng rng(0xc1c1);
  return cyclic_decomposition(a, rng);
}

Poly scaled_reciprocal(const Poly& f, const Scalar& c) {
  if (f.coeff(0).is_zero()) throw DomainError("scaled_reciprocal: zero constant term");
  const int d = f.degree();
  std::vector<Scalar> out(static_cast<std::size_t>(d) + 1, Scalar::zero(f.field()));
  Scalar cp = Scalar::one(f.field());
  for (int i = 0; i <= d; ++i) {
    out[static_cast<std::size_t>(d - i)] = f.coeff(i) * cp;
    cp *= c;
  }
  return Poly(f.field(), out).monic();
}

std::optional<InvolutionPair> wonenburger_involutions(const Mat& a) {
  if (!is_invertible(a)) throw DomainError("wonenburger_involutions: matrix not invertible");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return InvolutionPair{a, a};
  CyclicDecomposition cd = cyclic_decomposition(a);
  for (const auto& h : cd.factors)
    if (reciprocal(h) != h) return std::nullopt;
  Mat ainv = inverse(a), binv = inverse(cd.basis);
  Mat m(f, n, n);
  std::size_t row = 0;
  for (std::size_t b = 0; b < cd.factors.size(); ++b) {
    Mat cur = cd.generators[b];
    for (int i = 0; i < cd.factors[b].degree(); ++i) {
      m.set_block(row++, 0, cur * binv);
      cur = cur * ainv;
    }
  }
  Mat s = binv * m * cd.basis;
  return InvolutionPair{s, s * a};
}

std::optional<Mat> gl_reversal_conjugator(const Mat& a) {
  auto w = wonenburger_involutions(a);
  if (!w) return std::nullopt;
  return w->s;
}

namespace {

// Symmetric invertible X with C X = X C' for a companion matrix C.
Mat symmetric_intertwiner(const Mat& c, Rng& rng) {
  const Field& f = c.field();
  const std::size_t d = c.rows();
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) vars.emplace_back(i, j);
  auto sym = [&](const Mat& coeffs) {
    Mat x(f, d, d);
    for (std::size_t v = 0; v < vars.size(); ++v) {
      x(vars[v].first, vars[v].second) = coeffs(0, v);
      x(vars[v].second, vars[v].first) = coeffs(0, v);
    }
    return x;
  };
  // Column v of the system holds vec(C E_v - E_v C') for the v-th symmetric unit.
  Mat sys(f, d * d, vars.size());
  for (std::size_t v = 0; v < vars.size(); ++v) {
    Mat e(f, 1, vars.size());
    e(0, v) = Scalar::one(f);
    Mat ev = sym(e);
    Mat r = c * ev - ev * c.transpose();
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sys(i * d + j, v) = r(i, j);
  }
  Mat sols = left_kernel(sys.transpose());
  for (int attempt = 0; attempt < kSearchAttempts; ++attempt) {
    Mat coeffs = static_cast<std::size_t>(attempt) < sols.rows() ? sols.row(static_cast<std::size_t>(attempt))
                                                                   : random_matrix(f, 1, sols.rows(), rng) * sols;
    Mat x = sym(coeffs);
    if (is_invertible(x)) return x;
  }
  throw Error("symmetric_pair_factorization: no invertible symmetric intertwiner found");
}

}  // namespace

std::pair<Mat, Mat> symmetric_pair_factorization(const Mat& q) {
  if (!is_invertible(q)) throw DomainError("symmetric_pair_factorization: matrix not invertible");
  const Field& f = q.field();
  const std::size_t n = q.rows();
  if (q.is_symmetric()) return {q, Mat::identity(f, n)};
  Rng rng(0x5e77);
  CyclicDecomposition cd = cyclic_decomposition(q, rng);
  std::vector<Mat> s_blocks, t_blocks;
  for (const auto& h : cd.factors) {
    Mat c = Mat::companion(h);
    Mat x = symmetric_intertwiner(c, rng);
    s_blocks.push_back(c * x);
    t_blocks.push_back(inverse(x));
  }
  Mat b = cd.basis, binv = inverse(b);
  Mat s = binv * direct_sum(s_blocks) * binv.transpose();
  Mat t = b.transpose() * direct_sum(t_blocks) * b;
  return {s, t};
}

Mat skew_cyclic_normal_form(const Mat& a, const Scalar& lambda) {
  if (!a.is_square() || a.rows() % 2 != 0) throw DomainError("skew_cyclic_normal_form: need an even square matrix");
  if (lambda.is_zero()) throw DomainError("skew_cyclic_normal_form: lambda must be nonzero");
  if (!is_invertible(a)) throw DomainError("skew_cyclic_normal_form: matrix not invertible");
  Poly mu = minimal_polynomial(a);
  if (mu.degree() != static_cast<int>(a.rows())) throw DomainError("skew_cyclic_normal_form: matrix is not cyclic");
  if (scaled_reciprocal(mu, lambda) != mu)
    throw DomainError("skew_cyclic_normal_form: matrix is not similar to lambda times its inverse");
  for (auto [t, m] : linear_elementary_divisors(a * a, lambda))
    if (t % 2 == 1)
      throw DomainError("skew_cyclic_normal_form: A^2 has an elementary divisor (x - lambda)^t with t odd");
  auto g = inverse_dickson(mu, lambda);
  if (!g)
    throw Error("skew_cyclic_normal_form: inverse Dickson transform failed on an input meeting the preconditions: " +
                mu.to_string());
  return Mat::companion(*g);
}

JordanChevalley jordan_chevalley(const Mat& a) {
  if (!a.is_square()) throw DomainError("jordan_chevalley: matrix not square");
  const Field& f = a.field();
  if (a.rows() == 0) return {a, Poly::x(f)};
  Poly mu = minimal_polynomial(a);
  Poly r = poly_radical(mu), dr = r.derivative();
  Poly s = Poly::x(f) % mu;
  for (int it = 0; it < 64; ++it) {
    Poly rs = r.compose(s) % mu;
    if (rs.is_zero()) return {eval(s, a), s};
    Poly d = dr.compose(s) % mu;
    s = (s - mulmod(rs, inverse_mod(d, mu), mu)) % mu;
  }
  throw Error("jordan_chevalley: Newton iteration did not converge");
}

std::optional<std::pair<Mat, Mat>> gl_inv_skew_factorization(const Mat& p) {
  if (!is_invertible(p)) throw DomainError("gl_inv_skew_factorization: matrix not invertible");
  const Field& f = p.field();
  const std::size_t n = p.rows();
  Mat id = Mat::identity(f, n);
  if (p * p == -id) return std::make_pair(id, p);
  Scalar minus_one = -Scalar::one(f);
  for (auto [t, m] : linear_elementary_divisors(p * p, minus_one))
    if (t % 2 == 1) throw DomainError("gl_inv_skew_factorization: P^2 has an elementary divisor (x + 1)^t with t odd");

  Rng rng(0x15c5);
  CyclicDecomposition cd = cyclic_decomposition(p, rng);
  for (const auto& h : cd.factors)
    if (scaled_reciprocal(h, minus_one) != h) return std::nullopt;

  std::vector<Mat> k_blocks, s_blocks, h_blocks;
  for (const auto& h : cd.factors) {
    auto g = inverse_dickson(h, minus_one);
    if (!g) throw Error("gl_inv_skew_factorization: invariant factor " + h.to_string() + " has no normal form");
    const auto m = static_cast<std::size_t>(g->degree());
    Mat d = Mat::companion(*g), im = Mat::identity(f, m), zm = Mat::zero(f, m, m);
    Mat nf = block2x2(zm, im, im, d);
    Mat w = cyclic_vector(nf, h, rng);
    k_blocks.push_back(krylov(w, nf, 2 * m));
    s_blocks.push_back(block2x2(im, zm, d, -im));
    h_blocks.push_back(block2x2(zm, im, -im, zm));
  }
  Mat mm = inverse(direct_sum(k_blocks)) * cd.basis, mminv = inverse(mm);
  return std::make_pair(mminv * direct_sum(s_blocks) * mm, mminv * direct_sum(h_blocks) * mm);
}

std::optional<std::pair<Mat, Mat>> antisymmetric_symmetric_factorization(const Mat& a) {
  if (!is_invertible(a)) throw DomainError("antisymmetric_symmetric_factorization: matrix not invertible");
  const Field& f = a.field();
  if (a.rows() == 0) return std::make_pair(a, a);
  Rng rng(0xa5a5);
  CyclicDecomposition cd = cyclic_decomposition(a, rng);
  for (const auto& h : cd.factors)
    if (negate_variable(h) != h) return std::nullopt;

  // Each block k(x^2) is similar to N = [[0, I], [C, 0]] with C = companion(k);
  // writing C = R T gives N = [[0, R], [-R, 0]] diag(-T, R^{-1}).
  std::vector<Mat> k_blocks, h_blocks, s_blocks;
  for (const auto& h : cd.factors) {
    std::vector<Scalar> kc;
    for (int i = 0; i <= h.degree(); i += 2) kc.push_back(h.coeff(i));
    Poly k(f, kc);
    const auto m = static_cast<std::size_t>(k.degree());
    Mat c = Mat::companion(k), im = Mat::identity(f, m), zm = Mat::zero(f, m, m);
    Mat nf = block2x2(zm, im, c, zm);
    auto [r, t] = symmetric_pair_factorization(c);
    Mat w = cyclic_vector(nf, h, rng);
    k_blocks.push_back(krylov(w, nf, 2 * m));
    h_blocks.push_back(block2x2(zm, r, -r, zm));
    s_blocks.push_back(direct_sum(-t, inverse(r)));
  }
  Mat mm = inverse(direct_sum(k_blocks)) * cd.basis, mminv = inverse(mm);
  return std::make_pair(mminv * direct_sum(h_blocks) * mminv.transpose(), mm.transpose() * direct_sum(s_blocks) * mm);
}

std::optional<Mat> skew_reverser_cyclic(const Mat& a, Rng& rng) {
  const Field& f = a.field();
  if (!f.is_prime()) throw UnsupportedField("skew_reverser_cyclic: prime fields only");
  if (!is_invertible(a)) throw DomainError("skew_reverser_cyclic: matrix not invertible");
  const std::size_t n = a.rows();
  Poly mu = minimal_polynomial(a);
  if (mu.degree() != static_cast<int>(n)) throw DomainError("skew_reverser_cyclic: matrix is not cyclic");
  auto fac = factorize(mu);
  if (fac.factors.size() != 1) throw DomainError("skew_reverser_cyclic: minimal polynomial is not primary");
  const Poly& p = fac.factors[0].base;
  if (p.degree() % 2 != 0) throw DomainError("skew_reverser_cyclic: irreducible factor has odd degree");
  if (!is_self_reciprocal(p)) return std::nullopt;

  // g with g(x) g(1/x) = -1 in the field K[x]/(p).
  Poly xinv = inverse_mod(Poly::x(f), p);
  Poly minus_one = Poly::constant(-Scalar::one(f));
  std::optional<Poly> g;
  for (int attempt = 0; attempt < 50 * kSearchAttempts && !g; ++attempt) {
    std::vector<Scalar> c;
    for (int i = 0; i < p.degree(); ++i) c.push_back(random_scalar(f, rng));
    Poly cand(f, c);
    if (cand.is_zero()) continue;
    if (mulmod(cand, cand.compose(xinv) % p, p) == minus_one) g = cand;
  }
  if (!g) throw Error("skew_reverser_cyclic: norm equation search exhausted");

  JordanChevalley jc = jordan_chevalley(a);
  Poly h = g->compose(jc.poly) % mu;
  Mat u = cyclic_vector(a, mu, rng);
  Mat w = u * eval(h, a);
  Mat ainv = inverse(a);
  Mat b = krylov(u, a, n), images(f, n, n);
  Mat cur = w;
  for (std::size_t j = 0; j < n; ++j) {
    images.set_block(j, 0, cur);
    cur = cur * ainv;
  }
  return inverse(b) * images;
}

}  // namespace sympinv
