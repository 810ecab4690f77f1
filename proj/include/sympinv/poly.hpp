#pragma once

// Dense univariate polynomials over a Field.

#include <string>
#include <utility>
#include <vector>

#include "sympinv/scalar.hpp"

namespace sympinv {

class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  /// Coefficients lowest degree first; trailing zeros are trimmed.
  Poly(Field f, std::vector<Scalar> coeffs);
  Poly(Field f, std::initializer_list<std::int64_t> coeffs);

  static Poly constant(const Scalar& c);
  static Poly x(Field f) { return monomial(Scalar::one(f), 1); }
  static Poly monomial(const Scalar& c, int degree);
  /// x - c
  static Poly linear(const Scalar& c);

  const Field& field() const { return field_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
  Scalar coeff(int i) const;
  Scalar lead() const { return coeff(degree()); }
  const std::vector<Scalar>& coeffs() const { return c_; }

  Poly monic() const;
  Poly derivative() const;
  Scalar eval(const Scalar& x) const;
  /// f(g(x))
  Poly compose(const Poly& g) const;
  Poly pow(int e) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }
  Poly operator-() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }
  /// Degree first, then coefficients from the top; canonical ordering only.
  friend bool operator<(const Poly& a, const Poly& b);

  /// Human readable, e.g. "x^2 + 2*x + 1".
  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

/// Quotient and remainder; throws DivisionByZero for a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g);
Poly operator%(const Poly& f, const Poly& g);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(const Poly& f, const Poly& g);
Poly lcm(const Poly& f, const Poly& g);
/// Returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);
/// Inverse of a modulo m; throws DomainError when not coprime.
Poly inverse_mod(const Poly& a, const Poly& m);
Poly powmod(const Poly& base, std::int64_t e, const Poly& m);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);

/// q*(x) = q(0)^{-1} x^{deg q} q(1/x). Requires q(0) != 0.
Poly reciprocal(const Poly& q);
bool is_self_reciprocal(const Poly& q);

/// f(x + lambda/x) * x^{deg f} for monic f of degree >= 1.
Poly dickson_transform(const Poly& f, const Scalar& lambda);
/// Monic g with dickson_transform(g, lambda) == h, when it exists.
std::optional<Poly> inverse_dickson(const Poly& h, const Scalar& lambda);

/// Monic normalisation of f(-x); the "negation twin" of a polynomial.
Poly negate_variable(const Poly& f);

struct Factor {
  Poly base;
  int exponent;
};

/// unit * prod base^exponent, bases monic irreducible and pairwise distinct,
/// sorted canonically.
struct Factorization {
  Scalar unit;
  std::vector<Factor> factors;
  std::uint64_t seed = 0;

  Poly product() const;
};

/// Complete factorisation over GF(p): squarefree split, distinct-degree
/// split, then Cantor-Zassenhaus equal-degree splitting driven by rng.
Factorization factorize(const Poly& f, Rng& rng);
Factorization factorize(const Poly& f, std::uint64_t seed = 0x5eed);

/// Product of the distinct monic irreducible factors of f.
Poly radical(const Poly& f);

/// Irreducibility over GF(p) via Rabin's test.
bool is_irreducible(const Poly& f);

}  // namespace sympinv
