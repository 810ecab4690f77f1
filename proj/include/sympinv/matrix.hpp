#pragma once

// Exact dense matrices and subspaces.
//
// Vectors are row vectors and matrices act on the right: v -> v * A. Hence
// kernel(A) = { v : v A = 0 } and image(A) is the row space of A.

#include <optional>
#include <string>
#include <vector>

#include "sympinv/poly.hpp"
#include "sympinv/scalar.hpp"

namespace sympinv {

class Mat {
 public:
  Mat(Field f, std::size_t rows, std::size_t cols);
  Mat(Field f, const std::vector<std::vector<std::int64_t>>& rows);
  Mat(Field f, std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Mat identity(Field f, std::size_t n);
  static Mat zero(Field f, std::size_t rows, std::size_t cols) { return Mat(f, rows, cols); }
  static Mat scalar(const Scalar& s, std::size_t n);
  static Mat diag(const std::vector<Scalar>& d);
  /// Companion matrix of a monic polynomial (row convention: e_i -> e_{i+1}).
  static Mat companion(const Poly& f);
  /// [[0, I], [-I, 0]] of size 2n.
  static Mat standard_symplectic(Field f, std::size_t n);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Mat row(std::size_t i) const { return block(i, 0, 1, cols_); }
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat transpose() const;
  Mat pow(std::int64_t e) const;

  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const { return *this == transpose(); }
  bool is_antisymmetric() const { return *this == -transpose(); }

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Scalar& s);
  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator*(Mat a, const Scalar& s) { return a *= s; }
  friend Mat operator*(const Scalar& s, Mat a) { return a *= s; }
  friend Mat operator*(const Mat& a, const Mat& b);
  Mat operator-() const;

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }
  /// Lexicographic order on entries; canonical tie-breaking only.
  friend bool operator<(const Mat& a, const Mat& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> a_;
};

Mat vstack(const Mat& top, const Mat& bottom);
Mat hstack(const Mat& left, const Mat& right);
Mat direct_sum(const Mat& a, const Mat& b);
Mat direct_sum(const std::vector<Mat>& blocks);
/// Block matrix [[a, b], [c, d]].
Mat block2x2(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

/// Reduced row echelon form; pivot columns are appended to *pivots if given.
Mat rref(const Mat& a, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const Mat& a);
Scalar det(const Mat& a);
bool is_invertible(const Mat& a);
/// Throws DomainError for a singular matrix.
Mat inverse(const Mat& a);
/// A matrix whose rows form the canonical (rref) basis of {v : v A = 0}.
Mat left_kernel(const Mat& a);
/// Some X with A X = B, or nullopt when inconsistent.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);
/// Some X with X A = B, or nullopt when inconsistent.
std::optional<Mat> solve_left(const Mat& a, const Mat& b);

/// f(A) for a polynomial f.
Mat eval(const Poly& f, const Mat& a);

/// A subspace of K^n stored by its rref basis (rows).
class Subspace {
 public:
  Subspace(Field f, std::size_t ambient);
  /// Row space of the given generators.
  static Subspace span(const Mat& generators);
  static Subspace whole(Field f, std::size_t n) { return span(Mat::identity(f, n)); }

  const Mat& basis() const { return basis_; }
  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient() const { return ambient_; }
  const Field& field() const { return field_; }

  bool contains(const Mat& v) const;
  bool contains(const Subspace& s) const;
  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  /// Image of the subspace under v -> v A.
  Subspace map(const Mat& a) const;

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Field field_;
  std::size_t ambient_;
  Mat basis_;
};

Subspace image(const Mat& a);
Subspace kernel(const Mat& a);

/// Rows of `basis` extended to a basis of K^n by standard vectors, returning
/// only the added complement rows.
Mat complement_basis(const Mat& basis);

Mat random_matrix(const Field& f, std::size_t rows, std::size_t cols, Rng& rng);
Mat random_invertible(const Field& f, std::size_t n, Rng& rng);

}  // namespace sympinv
