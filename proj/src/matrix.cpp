#include "sympinv/matrix.hpp"

#include <sstream>

namespace sympinv {

Mat::Mat(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, Scalar::zero(f)) {}

Mat::Mat(Field f, const std::vector<std::vector<std::int64_t>>& rows)
    : field_(f), rows_(rows.size()), cols_(rows.empty() ? 0 : rows[0].size()) {
  a_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DomainError("Mat: ragged rows");
    for (auto v : r) a_.emplace_back(f, v);
  }
}

Mat::Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : field_(f), rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows * cols) throw DomainError("Mat: entry count does not match shape");
  for (const auto& s : a_)
    if (s.field() != f) throw FieldMismatch();
}

Mat Mat::identity(Field f, std::size_t n) {
  Mat m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(f);
  return m;
}

Mat Mat::scalar(const Scalar& s, std::size_t n) {
  Mat m(s.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = s;
  return m;
}

Mat Mat::diag(const std::vector<Scalar>& d) {
  if (d.empty()) throw DomainError("Mat::diag: empty diagonal");
  Mat m(d[0].field(), d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::companion(const Poly& f) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("companion: polynomial must be monic of degree >= 1");
  const auto n = static_cast<std::size_t>(f.degree());
  Mat m(f.field(), n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i, i + 1) = Scalar::one(f.field());
  for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = -f.coeff(static_cast<int>(j));
  return m;
}

Mat Mat::standard_symplectic(Field f, std::size_t n) {
  Mat g(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    g(i, n + i) = Scalar::one(f);
    g(n + i, i) = -Scalar::one(f);
  }
  return g;
}

Mat Mat::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DomainError("Mat::block out of range");
  Mat b(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Mat::set_block(std::size_t r0, std::size_t c0, const Mat& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw DomainError("Mat::set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Mat Mat::transpose() const {
  Mat t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Mat Mat::pow(std::int64_t e) const {
  if (!is_square()) throw DomainError("Mat::pow: matrix not square");
  if (e < 0) return inverse(*this).pow(-e);
  Mat r = identity(field_, rows_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool Mat::is_zero() const {
  for (const auto& s : a_)
    if (!s.is_zero()) return false;
  return true;
}

bool Mat::is_identity() const { return is_square() && *this == identity(field_, rows_); }

Mat& Mat::operator+=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("Mat +: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("Mat -: shape mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Mat& Mat::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DomainError("Mat *: shape mismatch");
  if (a.field_ != b.field_) throw FieldMismatch();
  Mat c(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
    }
  return c;
}

Mat Mat::operator-() const {
  Mat r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

bool operator<(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  for (std::size_t i = 0; i < a.a_.size(); ++i)
    if (a.a_[i] != b.a_[i]) return a.a_[i] < b.a_[i];
  return false;
}

std::string Mat::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).to_string();
    os << "]";
  }
  os << "]";
  return os.str();
}

Mat vstack(const Mat& top, const Mat& bottom) {
  if (top.rows() == 0) return bottom;
  if (bottom.rows() == 0) return top;
  if (top.cols() != bottom.cols()) throw DomainError("vstack: column mismatch");
  Mat r(top.field(), top.rows() + bottom.rows(), top.cols());
  r.set_block(0, 0, top);
  r.set_block(top.rows(), 0, bottom);
  return r;
}

Mat hstack(const Mat& left, const Mat& right) { return vstack(left.transpose(), right.transpose()).transpose(); }

Mat direct_sum(const Mat& a, const Mat& b) {
  Mat r(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), a.cols(), b);
  return r;
}

Mat direct_sum(const std::vector<Mat>& blocks) {
  if (blocks.empty()) throw DomainError("direct_sum: no blocks");
  Mat r = blocks[0];
  for (std::size_t i = 1; i < blocks.size(); ++i) r = direct_sum(r, blocks[i]);
  return r;
}

Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

Mat rref(const Mat& a, std::vector<std::size_t>* pivots) {
  Mat m = a;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(r, j));
    Scalar inv = m(r, c).inv();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Scalar k = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= k * m(r, j);
    }
    if (pivots) pivots->push_back(c);
    ++r;
  }
  return m;
}

std::size_t rank(const Mat& a) {
  std::vector<std::size_t> piv;
  rref(a, &piv);
  return piv.size();
}

Scalar det(const Mat& a) {
  if (!a.is_square()) throw DomainError("det: matrix not square");
  Mat m = a;
  const std::size_t n = m.rows();
  Scalar d = Scalar::one(a.field());
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c).is_zero()) ++piv;
    if (piv == n) return Scalar::zero(a.field());
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      d = -d;
    }
    d *= m(c, c);
    Scalar inv = m(c, c).inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Scalar k = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= k * m(c, j);
    }
  }
  return d;
}

bool is_invertible(const Mat& a) { return a.is_square() && rank(a) == a.rows(); }

Mat inverse(const Mat& a) {
  if (!a.is_square()) throw DomainError("inverse: matrix not square");
  const std::size_t n = a.rows();
  Mat aug = hstack(a, Mat::identity(a.field(), n));
  std::vector<std::size_t> piv;
  Mat r = rref(aug, &piv);
  if (piv.size() < n || (n > 0 && piv[n - 1] != n - 1)) throw DomainError("inverse: matrix is singular");
  return r.block(0, n, n, n);
}

Mat left_kernel(const Mat& a) {
  // v A = 0  <=>  A^T v^T = 0: null space of A^T.
  Mat t = a.transpose();
  std::vector<std::size_t> piv;
  Mat r = rref(t, &piv);
  const std::size_t n = t.cols();
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  Mat out(a.field(), n - piv.size(), n);
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_piv[free]) continue;
    out(k, free) = Scalar::one(a.field());
    for (std::size_t i = 0; i < piv.size(); ++i) out(k, piv[i]) = -r(i, free);
    ++k;
  }
  return rref(out);
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DomainError("solve_right: row mismatch");
  const std::size_t n = a.cols();
  Mat aug = hstack(a, b);
  std::vector<std::size_t> piv;
  Mat r = rref(aug, &piv);
  Mat x(a.field(), n, b.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) {
    if (piv[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(piv[i], j) = r(i, n + j);
  }
  return x;
}

std::optional<Mat> solve_left(const Mat& a, const Mat& b) {
  auto x = solve_right(a.transpose(), b.transpose());
  if (!x) return std::nullopt;
  return x->transpose();
}

Mat eval(const Poly& f, const Mat& a) {
  if (!a.is_square()) throw DomainError("eval: matrix not square");
  Mat r(a.field(), a.rows(), a.cols());
  for (int i = f.degree(); i >= 0; --i) r = r * a + Mat::scalar(f.coeff(i), a.rows());
  return r;
}

Subspace::Subspace(Field f, std::size_t ambient) : field_(f), ambient_(ambient), basis_(f, 0, ambient) {}

Subspace Subspace::span(const Mat& generators) {
  Subspace s(generators.field(), generators.cols());
  Mat r = rref(generators);
  std::size_t k = 0;
  while (k < r.rows()) {
    bool zero = true;
    for (std::size_t j = 0; j < r.cols(); ++j)
      if (!r(k, j).is_zero()) zero = false;
    if (zero) break;
    ++k;
  }
  s.basis_ = r.block(0, 0, k, r.cols());
  return s;
}

bool Subspace::contains(const Mat& v) const { return rank(vstack(basis_, v)) == dim(); }

bool Subspace::contains(const Subspace& s) const { return contains(s.basis_); }

Subspace Subspace::operator+(const Subspace& o) const { return span(vstack(basis_, o.basis_)); }

Subspace Subspace::intersect(const Subspace& o) const {
  if (dim() == 0 || o.dim() == 0) return Subspace(field_, ambient_);
  // x B1 = y B2  <=>  (x, -y) [B1; B2] = 0
  Mat k = left_kernel(vstack(basis_, o.basis_));
  Mat coeffs = k.block(0, 0, k.rows(), dim());
  return span(coeffs * basis_);
}

Subspace Subspace::map(const Mat& a) const { return span(basis_ * a); }

Subspace image(const Mat& a) { return Subspace::span(a); }
Subspace kernel(const Mat& a) { return Subspace::span(left_kernel(a)); }

Mat complement_basis(const Mat& basis) {
  const std::size_t n = basis.cols();
  Mat cur = basis;
  std::size_t r = rank(cur);
  std::vector<Mat> added;
  for (std::size_t i = 0; i < n && r < n; ++i) {
    Mat e(basis.field(), 1, n);
    e(0, i) = Scalar::one(basis.field());
    Mat next = vstack(cur, e);
    std::size_t nr = rank(next);
    if (nr > r) {
      cur = next;
      r = nr;
      added.push_back(e);
    }
  }
  Mat out(basis.field(), 0, n);
  for (auto& e : added) out = vstack(out, e);
  return out;
}

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng) {
  Mat m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

Mat random_invertible(const Field& f, std::size_t n, Rng& rng) {
  for (;;) {
    Mat m = random_matrix(f, n, n, rng);
    if (is_invertible(m)) return m;
  }
}

}  // namespace sympinv
