#pragma once

// Exact scalars over an odd prime field GF(p) or the rationals.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "sympinv/errors.hpp"

namespace sympinv {

using Rng = std::mt19937_64;

enum class FieldKind { prime, rational };

/// Describes the ground field. Characteristic 2 is rejected at construction.
class Field {
 public:
  static Field prime(std::int64_t p);
  static Field rational() { return Field(FieldKind::rational, 0); }

  FieldKind kind() const { return kind_; }
  bool is_prime() const { return kind_ == FieldKind::prime; }
  bool is_rational() const { return kind_ == FieldKind::rational; }
  /// Modulus of a prime field; 0 for Q.
  std::int64_t p() const { return p_; }

  /// True for GF(p) with p = 3 mod 4, i.e. -1 is not a square.
  bool minus_one_nonsquare() const { return is_prime() && p_ % 4 == 3; }

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }
  friend bool operator!=(const Field& a, const Field& b) { return !(a == b); }

 private:
  Field(FieldKind k, std::int64_t p) : kind_(k), p_(p) {}

  FieldKind kind_;
  std::int64_t p_;
};

bool is_prime_number(std::int64_t n);

/// An element of a Field, always kept in canonical form: a residue in [0, p)
/// or a reduced fraction with positive denominator.
class Scalar {
 public:
  Scalar() : field_(Field::rational()), value_(std::int64_t{0}) {}
  Scalar(Field f, std::int64_t n);
  Scalar(Field f, const mpq_class& q);

  static Scalar zero(Field f) { return Scalar(f, std::int64_t{0}); }
  static Scalar one(Field f) { return Scalar(f, std::int64_t{1}); }

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over a prime field.
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  /// Value as a rational; only valid over Q.
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }

  Scalar inv() const;
  Scalar pow(std::int64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order used only for canonical tie-breaking.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// "k" over GF(p); "n" or "n/d" over Q.
  std::string to_string() const;
  static Scalar parse(Field f, const std::string& text);

 private:
  void check_same(const Scalar& o) const {
    if (field_ != o.field_) throw FieldMismatch();
  }

  Field field_;
  std::variant<std::int64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// Whether a nonzero scalar is a square in its field.
bool is_square(const Scalar& a);

/// A square root when one exists in the field.
std::optional<Scalar> sqrt(const Scalar& a);

/// Canonical representative of the square class of a nonzero scalar:
/// 1 or the least quadratic nonresidue over GF(p), the signed squarefree
/// integer over Q.
Scalar square_class(const Scalar& a);

/// Uniform element of GF(p); over Q a small integer in [-3, 3].
Scalar random_scalar(const Field& f, Rng& rng);

/// Every element of GF(p) in increasing residue order.
std::vector<Scalar> field_elements(const Field& f);

}  // namespace sympinv
