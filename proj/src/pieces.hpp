#pragma once

// Internal machinery shared by the decomposition, the factorizations
// and the classifier. Every basis is a matrix of rows in the coordinates of
// the element it was computed from.

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "sympinv/symplectic.hpp"

namespace sympinv::detail {

struct Search {
  Rng& rng;
  std::uint64_t budget;
};

enum class ComponentKind { unipotent, negative, self_reciprocal, paired, unsplit };

/// Orthogonal summand ker h(phi)^e for a reciprocity-closed factor h.
struct Component {
  ComponentKind kind;
  Poly base;   // p
  Poly dual;   // p*; equal to base unless paired
  int exponent;
  Mat basis;
};

/// Over Q only the (x - 1), (x + 1) components are split off; the rest is
/// returned as one unsplit component.
std::vector<Component> primary_components(const SymplecticElement& phi);

struct LocalPiece {
  PieceType type;
  Mat basis;
  Poly base;
  int exponent;
  /// Cyclic generator for type 2 pieces.
  std::optional<Mat> generator;
  /// Square class of f(v N^{s-1}, v) for even unipotent cyclic pieces.
  std::optional<Scalar> layer_class;
};

/// target(size, classes already chosen in that layer) gives the wanted layer
/// class of the next even cyclic piece, or nullopt for any class.
using LayerTarget = std::function<std::optional<Scalar>(int, const std::vector<Scalar>&)>;

/// Orthogonal pieces of a unipotent element, largest Jordan size first.
std::vector<LocalPiece> unipotent_pieces(const SymplecticElement& u, Search s, const LayerTarget& target = {});
/// Regular cyclic pieces of an element whose minimal polynomial is p^e, p
/// self-reciprocal and not x +- 1; largest first.
std::vector<LocalPiece> self_reciprocal_pieces(const SymplecticElement& c, const Poly& p, Search s);
/// Type 3 pieces X_i + Y_i of a paired component.
std::vector<LocalPiece> paired_pieces(const SymplecticElement& c, const Poly& p, const Poly& pstar, int e);

/// All pieces of a component, in the component's coordinates.
std::vector<LocalPiece> component_pieces(const SymplecticElement& c, const Component& comp, Search s,
                                         const LayerTarget& target = {});

/// Totally isotropic invariant cyclic subspaces <a> + <b> = V of half
/// dimension; returns (Krylov rows of a, Krylov rows of b).
std::optional<std::pair<Mat, Mat>> split_cyclic_lagrangians(const SymplecticElement& w, Search s);

/// Invariant Lagrangians L1 + L2 = V. With balanced, phi on L1 is also
/// similar to its inverse.
std::optional<std::pair<Mat, Mat>> invariant_lagrangians(const SymplecticElement& phi, bool balanced, Search s);

/// alpha with a1 alpha = alpha a2 and alpha G2 alpha' = G1, for unipotent
/// a1, a2 of the same class.
std::optional<Mat> unipotent_isometry(const SymplecticElement& a1, const SymplecticElement& a2, Search s);

/// Jordan sizes with multiplicity and even-layer classes of a unipotent element.
struct UnipotentSignature {
  std::vector<std::pair<int, int>> sizes;
  std::vector<LayerForm> layers;
  friend bool operator==(const UnipotentSignature&, const UnipotentSignature&);
};
UnipotentSignature unipotent_signature(const Mat& u, const Mat& gram);

/// M^{-1} diag(blocks) M where M stacks the piece bases and each block acts
/// in its piece's coordinates.
Mat assemble(const std::vector<Mat>& bases, const std::vector<Mat>& blocks);

/// Random combination of the rows of basis.
Mat random_row_in(const Mat& basis, Rng& rng);

}  // namespace sympinv::detail
