#pragma once

// Symplectic spaces, Wall forms, orthogonal decompositions and
// factorizations into symplectic involutions and skew-involutions.
//
// A form is given by its Gram matrix G: f(u, w) = u G w'. An element P is
// symplectic when P G P' = G and skew-symplectic when P G P' = -G.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/budget.hpp"
#include "sympinv/linalg.hpp"
#include "sympinv/matrix.hpp"

namespace sympinv {

/// Tri-state answer used by every decision procedure.
enum class Verdict { no, yes, unknown };
std::string to_string(Verdict v);

/// A nondegenerate alternating form.
class SymplecticSpace {
 public:
  /// Throws DomainError unless gram is antisymmetric and invertible.
  explicit SymplecticSpace(Mat gram);
  static SymplecticSpace standard(Field f, std::size_t n) {
    return SymplecticSpace(Mat::standard_symplectic(f, n));
  }

  const Mat& gram() const { return gram_; }
  const Field& field() const { return gram_.field(); }
  std::size_t dim() const { return gram_.rows(); }
  Scalar form(const Mat& u, const Mat& w) const;
  /// Subspace orthogonal to the rows of `rows`.
  Subspace perp(const Mat& rows) const;
  bool is_standard() const;

 private:
  Mat gram_;
};

/// An isometry of a symplectic space.
class SymplecticElement {
 public:
  /// Throws NotSymplectic when P G P' != G.
  SymplecticElement(Mat matrix, SymplecticSpace space);
  SymplecticElement(Mat matrix, Mat gram) : SymplecticElement(std::move(matrix), SymplecticSpace(std::move(gram))) {}
  static SymplecticElement standard(Mat matrix);

  const Mat& matrix() const { return m_; }
  const Mat& gram() const { return space_.gram(); }
  const SymplecticSpace& space() const { return space_; }
  const Field& field() const { return m_.field(); }
  std::size_t dim() const { return m_.rows(); }

  SymplecticElement inverse() const;
  SymplecticElement negate() const;
  SymplecticElement operator*(const SymplecticElement& o) const;
  /// Restriction to an invariant nondegenerate subspace, in the coordinates of
  /// the given basis rows.
  SymplecticElement restrict_to(const Mat& basis) const;

 private:
  Mat m_;
  SymplecticSpace space_;
};

bool is_symplectic(const Mat& p, const Mat& gram);
bool is_skew_symplectic(const Mat& p, const Mat& gram);

/// Wall form omega on Bahn(phi): omega(u(1-phi), w(1-phi)) = f(u, w(1-phi)).
struct WallFormData {
  /// Rows: the echelon basis of Bahn(phi) used for gram_omega.
  Mat path_basis;
  Mat gram_omega;
  /// det(gram_omega); 1 when Bahn is zero.
  Scalar theta;
  /// Canonical representative of the square class of theta.
  Scalar theta_class;
};
WallFormData wall_form(const SymplecticElement& phi);

/// Gram matrix of the Wall form in the coordinates of the given basis of Bahn.
Mat wall_gram(const SymplecticElement& phi, const Mat& bahn_basis);

/// Generator u for a cyclic unipotent phi of dimension 2n whose matrix
/// a(i, j) = f(u_{i-1}, u_j), u_i = u (1-phi)^i, 1 <= i, j <= 2n-1, is
/// antitriangular in the normalized shape. theta is the canonical
/// representative of the Wall form discriminant.
struct AntitriangularForm {
  Mat generator;
  Mat a;
  Scalar theta;
};
AntitriangularForm wall_antitriangular(const SymplecticElement& phi);
/// Checks the six defining conditions on the matrix a for the given theta.
bool antitriangular_conditions_hold(const Mat& a, const Scalar& theta);

/// The element induced on Bahn/Fix with its induced form, for unipotent
/// phi with Fix inside Bahn.
SymplecticElement quotient_on_bahn_mod_fix(const SymplecticElement& phi);

/// Whether two cyclic unipotent elements of equal dimension are conjugate in
/// Sp, with a conjugator alpha (alpha^{-1} a alpha = b) when they are.
std::optional<Mat> sp_conjugate_unipotent_cyclic(const SymplecticElement& a, const SymplecticElement& b);

/// Gram matrix of g(a, b) = f(a (1-phi)^{2m-1}, b).
Mat g_form(const SymplecticElement& phi, int m);

/// Symmetric bilinear form on the Jordan layer of size 2t of a unipotent
/// element: g restricted to a complement of the radical of its domain.
struct LayerForm {
  int size;
  int multiplicity;
  /// Square class of the determinant; 1 when multiplicity is zero.
  Scalar discriminant_class;
};
/// Layer forms of the (x - 1)-primary part of phi, one per even Jordan size.
std::vector<LayerForm> unipotent_layer_forms(const Mat& phi, const Mat& gram);
/// Whether a nondegenerate symmetric form of this dimension and
/// discriminant class is hyperbolic (finite fields).
bool quadratic_form_is_hyperbolic(int dim, const Scalar& discriminant_class);

/// X with X A X' = B for symmetric nondegenerate A, B over a prime field.
std::optional<Mat> congruence_transform(const Mat& a, const Mat& b, Rng& rng);

/// Big transvection normal form. With row vectors the normal form is
/// conj * phi * conj^{-1} = [[I, 0], [S, I]], the transpose of the column
/// form [[I, S], [0, I]]; S = 0 + T with T congruent to the Wall form, and
/// conj G conj' is the standard form.
struct BigTransvectionData {
  Mat conjugator;
  Mat normal_form;
  Mat s;
  Mat t;
  /// X with X T X' = gram_omega of wall_form(phi); prime fields only.
  std::optional<Mat> congruence;
};
BigTransvectionData big_transvection_data(const SymplecticElement& phi);
bool is_big_transvection(const SymplecticElement& phi);

/// Rows [l; c] with l a basis of L1, c in L2, and f(l_i, c_j) = delta_ij.
Mat symplectic_basis_from_lagrangians(const Mat& gram, const Mat& l1, const Mat& l2);

/// M with M gram M' = [[0, I], [-I, 0]].
Mat symplectic_frame(const Mat& gram);
/// Product of random symplectic transvections.
Mat random_symplectic(const Mat& gram, Rng& rng);
/// A standard-form symplectic element with minimal polynomial h on K^deg h,
/// from a random invariant form of the companion matrix. When theta_class is
/// given (cyclic unipotent h only) the Wall discriminant class is matched.
std::optional<SymplecticElement> symplectic_realization(const Poly& h, Rng& rng,
                                                        const std::optional<Scalar>& theta_class = std::nullopt,
                                                        std::uint64_t budget = default_search_budget());

// ---- Orthogonal decomposition ----------------------------------------------

enum class PieceType { type1, type2, type3, plane };
std::string to_string(PieceType t);

struct Piece {
  PieceType type;
  /// Rows in ambient coordinates.
  Mat basis;
  /// Irreducible factor; for type 3 the member of {p, p*} that is listed first.
  Poly base;
  int exponent;
};

struct OrthogonalDecomposition {
  std::vector<Piece> pieces;
};
/// Orthogonal sum of indecomposables. Over Q only elements whose minimal
/// polynomial is a product of (x - 1) and (x + 1) powers are supported.
OrthogonalDecomposition orthogonal_decomposition(const SymplecticElement& phi, Rng& rng);

struct HyperbolicResult {
  Verdict verdict;
  std::string method;
  /// Invariant Lagrangians L1 + L2 = V when verdict is yes.
  std::optional<std::pair<Mat, Mat>> lagrangians;
};
HyperbolicResult is_hyperbolic(const SymplecticElement& phi, Rng& rng,
                               std::uint64_t budget = default_search_budget());
/// Exhaustive search for an invariant Lagrangian splitting; unknown when the
/// budget of visited subspaces runs out.
HyperbolicResult is_hyperbolic_exhaustive(const SymplecticElement& phi, std::uint64_t budget);

/// Finite-field criterion for an invariant Lagrangian splitting.
bool hyperbolic_criterion(const SymplecticElement& phi);

/// Pairs (U_i, W_i) of totally isotropic phi-cyclic subspaces, each stable
/// under sigma, with V the orthogonal sum of the U_i + W_i.
struct CyclicPair {
  Mat u, w;
};
std::vector<CyclicPair> sympinv_decomposition(const SymplecticElement& phi, const Mat& sigma, Rng& rng);

// ---- Symplectic factorizations ------------------------------------------------

/// For phi = [[Q, 0], [0, Q^+]] on the standard form: symplectic
/// skew-involutions eta1, eta2 with phi = eta1 eta2.
std::pair<Mat, Mat> sp_two_skew_hyperbolic(const Mat& q);
/// For phi = [[A, 0], [0, A^+]] with A ~ -A^{-1} or A ~ -A: symplectic sigma,
/// eta with sigma^2 = I, eta^2 = -I, phi = sigma eta.
std::optional<std::pair<Mat, Mat>> sp_inv_skew_hyperbolic(const Mat& a);
/// For cyclic phi whose minimal polynomial is (x^2+1)^{2m+1}, p(x)^t with
/// p(x) = p(-x), or p(x)^t p(-x)^t: sigma with sigma^2 = I,
/// sigma^{-1} phi sigma = -phi^{-1}, symplectic. nullopt when the search fails.
std::optional<Mat> sp_inv_skew_cyclic(const SymplecticElement& phi, Rng& rng,
                                      std::uint64_t budget = default_search_budget());

/// Symplectic involutions s, t with phi = s t.
std::optional<std::pair<Mat, Mat>> bireflection_witness(const SymplecticElement& phi, Rng& rng,
                                                        std::uint64_t budget = default_search_budget());
/// Symplectic eta with eta^2 = -I and eta^{-1} phi eta = phi^{-1}; then
/// phi = (phi eta)(-eta) is a product of two skew-involutions.
std::optional<Mat> skew_reverser(const SymplecticElement& phi, Rng& rng,
                                 std::uint64_t budget = default_search_budget());
/// Symplectic alpha with alpha^{-1} phi alpha = -phi^{-1}. With
/// require_involution the result also satisfies alpha^2 = I, so that
/// phi = alpha (alpha phi) with (alpha phi)^2 = -I.
std::optional<Mat> negating_conjugator(const SymplecticElement& phi, bool require_involution, Rng& rng,
                                       std::uint64_t budget = default_search_budget());

}  // namespace sympinv
