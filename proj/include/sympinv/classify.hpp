#pragma once

// Decision procedures for bireflectionality, products of two
// skew-involutions, products of an involution and a skew-involution, and
// reversibility in PSp, each with a verifiable witness.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/budget.hpp"
#include "sympinv/linalg.hpp"
#include "sympinv/symplectic.hpp"

namespace sympinv {

/// Brute-force ground truth over a finite group of standard-form matrices.
class Oracle {
 public:
  virtual ~Oracle() = default;
  /// Whether the group Sp(dim, f) is available.
  virtual bool covers(const Field& f, std::size_t dim) const = 0;
  /// (s, t) with s^2 = e1 I, t^2 = e2 I and s t = phi, or nullopt.
  virtual std::optional<std::pair<Mat, Mat>> product(const Mat& phi, int e1, int e2) const = 0;
  /// a with a^{-1} phi a = psi, or nullopt.
  virtual std::optional<Mat> conjugate(const Mat& phi, const Mat& psi) const = 0;
};

enum class WitnessKind { two_involutions, two_skew_involutions, involution_skew, reverser };
std::string to_string(WitnessKind k);

struct Witness {
  WitnessKind kind;
  /// Factors whose product is phi, for the product kinds.
  std::vector<Mat> factors;
  /// For reverser: a with a^{-1} phi a = target, where target is phi^{-1},
  /// or -phi^{-1} when negated is set.
  std::optional<Mat> conjugator;
  bool negated = false;
};

/// Re-multiplies the witness and checks squares and symplectic membership.
bool verify_witness(const SymplecticElement& phi, const Witness& w);

enum class Method { criterion, oracle, witness, none };
std::string to_string(Method m);

enum class Ambient { gl, sp };
std::string to_string(Ambient a);

struct Decision {
  Verdict verdict = Verdict::unknown;
  Method method = Method::none;
  /// Group in which the underlying conjugacy was established.
  Ambient ambient = Ambient::sp;
  std::optional<Witness> witness;
  std::string note;
};

struct ClassifyOptions {
  std::uint64_t budget = default_search_budget();
  std::uint64_t seed = 0;
  const Oracle* oracle = nullptr;
};

Decision is_bireflectional(const SymplecticElement& phi, const ClassifyOptions& opt = {});
Decision is_two_skew_product(const SymplecticElement& phi, const ClassifyOptions& opt = {});
Decision is_reversible_sp(const SymplecticElement& phi, const ClassifyOptions& opt = {});
/// Conjugacy of phi and -phi^{-1} in Sp.
Decision is_negating_sp(const SymplecticElement& phi, const ClassifyOptions& opt = {});
Decision is_inv_skew_product(const SymplecticElement& phi, const ClassifyOptions& opt = {});
/// The same condition with the conjugacy of phi and -phi^{-1} read in GL.
Verdict inv_skew_gl_reading(const SymplecticElement& phi);
Decision psp_reversible_not_bireflectional(const SymplecticElement& phi, const ClassifyOptions& opt = {});

/// Multiplicities of the elementary divisors p^t of A, as (t, multiplicity);
/// works over any field for irreducible p.
std::vector<std::pair<int, int>> primary_multiplicities(const Mat& a, const Poly& p);

struct ClassificationReport {
  std::vector<Poly> invariant_factors;
  std::optional<std::vector<ElementaryDivisor>> elementary_divisors;
  bool reversible_gl = false;
  Decision reversible_sp, bireflectional, two_skew, inv_skew, negating_sp;
  Verdict inv_skew_gl = Verdict::unknown;
  Decision psp_reversible_not_bireflectional;
};

ClassificationReport classify(const SymplecticElement& phi, const ClassifyOptions& opt = {});

}  // namespace sympinv
