#pragma once

// Canonical forms, similarity and general-linear factorizations into involutions.

#include <optional>
#include <utility>
#include <vector>

#include "sympinv/matrix.hpp"
#include "sympinv/poly.hpp"

namespace sympinv {

enum class SpaceKind { bahn, fix, neg };
/// Pass as j to `spaces` for the stabilized space.
inline constexpr int kStable = -1;

/// Bahn^j = image (A-1)^j, Fix^j = kernel (A-1)^j, Neg^j = kernel (A+1)^j.
Subspace spaces(const Mat& a, SpaceKind which, int j = 1);

struct ElementaryDivisor {
  Poly base;
  int exponent;
  int multiplicity;
};

struct SimilarityInvariants {
  /// Nonconstant invariant factors, each dividing the next.
  std::vector<Poly> invariant_factors;
  /// Present over prime fields only.
  std::optional<std::vector<ElementaryDivisor>> elementary_divisors;

  Poly minimal_polynomial() const;
  Poly characteristic_polynomial() const;
};

/// Smith form of xI - A over K[x].
SimilarityInvariants invariant_factors(const Mat& a);
/// Elementary divisors (sorted) from a list of invariant factors; prime fields.
std::vector<ElementaryDivisor> elementary_divisors(const std::vector<Poly>& invariant_factors);

/// (t, multiplicity) of the elementary divisors (x-c)^t, from the rank sequence.
std::vector<std::pair<int, int>> linear_elementary_divisors(const Mat& a, const Scalar& c);

bool is_similar(const Mat& a, const Mat& b);
Poly minimal_polynomial(const Mat& a);
/// Monic annihilator of the row vector v under A.
Poly vector_annihilator(const Mat& v, const Mat& a);
/// Rows v, vA, ..., vA^{d-1}.
Mat krylov(const Mat& v, const Mat& a, std::size_t d);
/// A_W with B A = A_W B for the invariant subspace spanned by the rows of B.
Mat restrict_action(const Mat& basis, const Mat& a);
bool is_cyclic(const Mat& a);

/// Rational canonical form with transform: basis * A = C * basis where C is
/// the direct sum of companion(factors[i]), and the rows of basis are the
/// Krylov rows of generators[i]. Factors are ordered so each is divisible by
/// the next (largest first).
struct CyclicDecomposition {
  Mat basis;
  std::vector<Poly> factors;
  std::vector<Mat> generators;
};
CyclicDecomposition cyclic_decomposition(const Mat& a, Rng& rng);
CyclicDecomposition cyclic_decomposition(const Mat& a);

/// Monic x^d f(c/x) normalized, i.e. the polynomial of c A^{-1} when f is that of A.
Poly scaled_reciprocal(const Poly& f, const Scalar& c);

struct InvolutionPair {
  Mat s, t;
};

/// S^2 = T^2 = I with A = S T, when A ~ A^{-1}.
std::optional<InvolutionPair> wonenburger_involutions(const Mat& a);
/// Invertible R with R^{-1} A R = A^{-1}.
std::optional<Mat> gl_reversal_conjugator(const Mat& a);

/// Q = S T with S, T symmetric and S invertible.
std::pair<Mat, Mat> symmetric_pair_factorization(const Mat& q);

/// D with [[0, I], [-lambda I, D]] similar to the cyclic matrix A. Throws
/// DomainError naming the violated precondition.
Mat skew_cyclic_normal_form(const Mat& a, const Scalar& lambda);

struct JordanChevalley {
  Mat semisimple;
  /// semisimple = poly(A).
  Poly poly;
};
JordanChevalley jordan_chevalley(const Mat& a);

/// P = S H with S^2 = I and H^2 = -I, when P ~ -P^{-1}.
std::optional<std::pair<Mat, Mat>> gl_inv_skew_factorization(const Mat& p);

/// A = H S with H antisymmetric and S symmetric, both invertible, when
/// A ~ -A. Returns nullopt when some invariant factor is not even.
std::optional<std::pair<Mat, Mat>> antisymmetric_symmetric_factorization(const Mat& a);

/// eta with eta^2 = -I and eta^{-1} A eta = A^{-1}, for A cyclic with minimal
/// polynomial p^t, p irreducible self-reciprocal of even degree.
std::optional<Mat> skew_reverser_cyclic(const Mat& a, Rng& rng);

}  // namespace sympinv
