#include "sympinv/scalar.hpp"

#include <ostream>

namespace sympinv {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
    b = static_cast<std::int64_t>((__int128)b * b % p);
    e >>= 1;
  }
  return r;
}

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t g = p, x = 0, x1 = 1, a1 = mod(a, p);
  if (a1 == 0) throw DivisionByZero();
  while (a1 != 0) {
    std::int64_t q = g / a1;
    std::int64_t t = g - q * a1;
    g = a1;
    a1 = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  return mod(x, p);
}

std::int64_t mpz_mod_small(const mpz_class& z, std::int64_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_si();
}

mpz_class squarefree_part(mpz_class n) {
  mpz_class out = 1;
  if (n < 0) {
    out = -1;
    n = -n;
  }
  for (mpz_class d = 2; d * d <= n; ++d) {
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    if (e % 2 == 1) out *= d;
  }
  return out * n;
}

}  // namespace

bool is_prime_number(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field Field::prime(std::int64_t p) {
  if (p == 2) throw DomainError("characteristic 2 is not supported");
  if (!is_prime_number(p)) throw DomainError("field modulus must be an odd prime");
  if (p > (std::int64_t{1} << 31)) throw DomainError("field modulus too large");
  return Field(FieldKind::prime, p);
}

std::string Field::to_string() const {
  return is_prime() ? "GF(" + std::to_string(p_) + ")" : "Q";
}

Scalar::Scalar(Field f, std::int64_t n) : field_(f) {
  if (f.is_prime())
    value_ = mod(n, f.p());
  else
    value_ = mpq_class(static_cast<long>(n));
}

Scalar::Scalar(Field f, const mpq_class& q) : field_(f) {
  if (f.is_prime()) {
    std::int64_t num = mpz_mod_small(q.get_num(), f.p());
    std::int64_t den = mpz_mod_small(q.get_den(), f.p());
    if (den == 0) throw DivisionByZero();
    value_ = static_cast<std::int64_t>((__int128)num * inv_mod(den, f.p()) % f.p());
  } else {
    mpq_class c = q;
    c.canonicalize();
    value_ = c;
  }
}

bool Scalar::is_zero() const {
  if (field_.is_prime()) return residue() == 0;
  return rational() == 0;
}

bool Scalar::is_one() const {
  if (field_.is_prime()) return residue() == 1;
  return rational() == 1;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw DivisionByZero();
  if (field_.is_prime()) return Scalar(field_, inv_mod(residue(), field_.p()));
  return Scalar(field_, mpq_class(1) / rational());
}

Scalar Scalar::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  if (field_.is_prime()) return Scalar(field_, pow_mod(residue(), e, field_.p()));
  mpq_class r = 1, b = rational();
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return Scalar(field_, r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (field_.is_prime()) {
    std::int64_t r = residue() + o.residue();
    if (r >= field_.p()) r -= field_.p();
    value_ = r;
  } else {
    std::get<mpq_class>(value_) += o.rational();
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (field_.is_prime()) {
    std::int64_t r = residue() - o.residue();
    if (r < 0) r += field_.p();
    value_ = r;
  } else {
    std::get<mpq_class>(value_) -= o.rational();
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (field_.is_prime())
    value_ = static_cast<std::int64_t>((__int128)residue() * o.residue() % field_.p());
  else
    std::get<mpq_class>(value_) *= o.rational();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same(o);
  return *this *= o.inv();
}

Scalar Scalar::operator-() const {
  if (field_.is_prime()) return Scalar(field_, residue() == 0 ? 0 : field_.p() - residue());
  return Scalar(field_, mpq_class(-rational()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  if (a.field_.is_prime()) return a.residue() == b.residue();
  return a.rational() == b.rational();
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same(b);
  if (a.field_.is_prime()) return a.residue() < b.residue();
  return a.rational() < b.rational();
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue());
  return rational().get_str();
}

Scalar Scalar::parse(Field f, const std::string& text) {
  mpq_class q;
  if (q.set_str(text, 10) != 0) throw ParseError("malformed scalar '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  return Scalar(f, q);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

bool is_square(const Scalar& a) {
  if (a.is_zero()) throw DomainError("is_square: zero has no square class");
  const Field& f = a.field();
  if (f.is_prime()) return pow_mod(a.residue(), (f.p() - 1) / 2, f.p()) == 1;
  return squarefree_part(a.rational().get_num() * a.rational().get_den()) == 1;
}

std::optional<Scalar> sqrt(const Scalar& a) {
  const Field& f = a.field();
  if (a.is_zero()) return a;
  if (!is_square(a)) return std::nullopt;
  if (f.is_rational()) {
    mpz_class n = a.rational().get_num(), d = a.rational().get_den();
    mpz_class rn = ::sqrt(n), rd = ::sqrt(d);
    return Scalar(f, mpq_class(rn, rd));
  }
  // Tonelli-Shanks.
  std::int64_t p = f.p(), n = a.residue();
  std::int64_t q = p - 1, s = 0;
  while (q % 2 == 0) {
    q /= 2;
    ++s;
  }
  std::int64_t z = 2;
  while (pow_mod(z, (p - 1) / 2, p) != p - 1) ++z;
  std::int64_t m = s, c = pow_mod(z, q, p), t = pow_mod(n, q, p), r = pow_mod(n, (q + 1) / 2, p);
  while (t != 1) {
    std::int64_t i = 0, tt = t;
    while (tt != 1) {
      tt = static_cast<std::int64_t>((__int128)tt * tt % p);
      ++i;
    }
    std::int64_t b = pow_mod(c, std::int64_t{1} << (m - i - 1), p);
    m = i;
    c = static_cast<std::int64_t>((__int128)b * b % p);
    t = static_cast<std::int64_t>((__int128)t * c % p);
    r = static_cast<std::int64_t>((__int128)r * b % p);
  }
  return Scalar(f, r);
}

Scalar square_class(const Scalar& a) {
  const Field& f = a.field();
  if (a.is_zero()) throw DomainError("square_class: zero has no square class");
  if (f.is_prime()) {
    if (is_square(a)) return Scalar::one(f);
    for (std::int64_t k = 2;; ++k)
      if (!is_square(Scalar(f, k))) return Scalar(f, k);
  }
  return Scalar(f, mpq_class(squarefree_part(a.rational().get_num() * a.rational().get_den())));
}

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::int64_t> d(0, f.p() - 1);
    return Scalar(f, d(rng));
  }
  std::uniform_int_distribution<std::int64_t> d(-3, 3);
  return Scalar(f, d(rng));
}

std::vector<Scalar> field_elements(const Field& f) {
  if (!f.is_prime()) throw UnsupportedField("field_elements: Q is infinite");
  std::vector<Scalar> out;
  out.reserve(static_cast<std::size_t>(f.p()));
  for (std::int64_t k = 0; k < f.p(); ++k) out.emplace_back(f, k);
  return out;
}

}  // namespace sympinv
