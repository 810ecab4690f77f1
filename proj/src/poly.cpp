#include "sympinv/poly.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sympinv {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_)
    if (c.field() != field_) throw FieldMismatch();
  trim();
}

Poly::Poly(Field f, std::initializer_list<std::int64_t> coeffs) : field_(f) {
  for (auto c : coeffs) c_.emplace_back(f, c);
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Scalar& c, int degree) {
  std::vector<Scalar> v(static_cast<std::size_t>(degree) + 1, Scalar::zero(c.field()));
  v.back() = c;
  return Poly(c.field(), std::move(v));
}

Poly Poly::linear(const Scalar& c) { return Poly(c.field(), {-c, Scalar::one(c.field())}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(int i) const {
  if (i < 0 || i > degree()) return Scalar::zero(field_);
  return c_[static_cast<std::size_t>(i)];
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * lead().inv();
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (int i = 1; i <= degree(); ++i) d.push_back(c_[static_cast<std::size_t>(i)] * Scalar(field_, i));
  return Poly(field_, std::move(d));
}

Scalar Poly::eval(const Scalar& x) const {
  Scalar r = Scalar::zero(field_);
  for (int i = degree(); i >= 0; --i) r = r * x + c_[static_cast<std::size_t>(i)];
  return r;
}

Poly Poly::compose(const Poly& g) const {
  Poly r(field_);
  for (int i = degree(); i >= 0; --i) r = r * g + constant(c_[static_cast<std::size_t>(i)]);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r = constant(Scalar::one(field_)), b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size(), Scalar::zero(field_));
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (field_ != o.field_) throw FieldMismatch();
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Scalar> r(c_.size() + o.c_.size() - 1, Scalar::zero(field_));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
  }
  return false;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Scalar& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    bool show_coeff = !c.is_one() || i == 0;
    if (show_coeff) os << c.to_string();
    if (i > 0) {
      if (show_coeff) os << "*";
      os << "x";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> divmod(const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DivisionByZero();
  if (f.field() != g.field()) throw FieldMismatch();
  const Field& fld = f.field();
  if (f.degree() < g.degree()) return {Poly(fld), f};
  std::vector<Scalar> rem = f.coeffs();
  std::vector<Scalar> quo(static_cast<std::size_t>(f.degree() - g.degree() + 1), Scalar::zero(fld));
  Scalar inv_lead = g.lead().inv();
  const int dg = g.degree();
  for (int i = f.degree(); i >= dg; --i) {
    Scalar c = rem[static_cast<std::size_t>(i)] * inv_lead;
    quo[static_cast<std::size_t>(i - dg)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= dg; ++j) rem[static_cast<std::size_t>(i - dg + j)] -= c * g.coeff(j);
  }
  rem.resize(static_cast<std::size_t>(dg));
  return {Poly(fld, std::move(quo)), Poly(fld, std::move(rem))};
}

Poly operator%(const Poly& f, const Poly& g) { return divmod(f, g).second; }

Poly gcd(const Poly& f, const Poly& g) {
  Poly a = f, b = g;
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly lcm(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly(f.field());
  return divmod(f * g, gcd(f, g)).first.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const Field& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(Scalar::one(f)), s1(f);
  Poly t0(f), t1 = Poly::constant(Scalar::one(f));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  Scalar k = r0.lead().inv();
  return {r0 * k, s0 * k, t0 * k};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  auto e = extended_gcd(a % m, m);
  if (!e.g.is_one()) throw DomainError("inverse_mod: polynomial not invertible modulo m");
  return e.s % m;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(const Poly& base, std::int64_t e, const Poly& m) {
  Poly r = Poly::constant(Scalar::one(base.field())) % m, b = base % m;
  while (e > 0) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

Poly reciprocal(const Poly& q) {
  if (q.is_zero() || q.coeff(0).is_zero()) throw DomainError("reciprocal: q(0) must be nonzero");
  std::vector<Scalar> c(q.coeffs().rbegin(), q.coeffs().rend());
  return Poly(q.field(), std::move(c)) * q.coeff(0).inv();
}

bool is_self_reciprocal(const Poly& q) {
  return !q.is_zero() && !q.coeff(0).is_zero() && reciprocal(q) == q.monic();
}

Poly dickson_transform(const Poly& f, const Scalar& lambda) {
  if (!f.is_monic() || f.degree() < 1) throw DomainError("dickson_transform: input must be monic of degree >= 1");
  const Field& fld = f.field();
  const int n = f.degree();
  Poly quad(fld, {lambda, Scalar::zero(fld), Scalar::one(fld)});  // x^2 + lambda
  Poly r(fld), qp = Poly::constant(Scalar::one(fld));
  for (int i = 0; i <= n; ++i) {
    r += qp * Poly::monomial(f.coeff(i), n - i);
    qp *= quad;
  }
  return r;
}

std::optional<Poly> inverse_dickson(const Poly& h, const Scalar& lambda) {
  if (!h.is_monic() || h.degree() < 2 || h.degree() % 2 != 0) return std::nullopt;
  const Field& fld = h.field();
  const int m = h.degree() / 2;
  Poly quad(fld, {lambda, Scalar::zero(fld), Scalar::one(fld)});
  std::vector<Poly> basis;  // basis[k] = (x^2 + lambda)^k x^(m-k), degree m+k
  Poly qp = Poly::constant(Scalar::one(fld));
  for (int k = 0; k <= m; ++k) {
    basis.push_back(qp * Poly::monomial(Scalar::one(fld), m - k));
    qp *= quad;
  }
  std::vector<Scalar> g(static_cast<std::size_t>(m) + 1, Scalar::zero(fld));
  Poly rest = h;
  for (int k = m; k >= 0; --k) {
    Scalar c = rest.coeff(m + k);
    g[static_cast<std::size_t>(k)] = c;
    rest -= basis[static_cast<std::size_t>(k)] * c;
  }
  if (!rest.is_zero()) return std::nullopt;
  return Poly(fld, std::move(g));
}

Poly negate_variable(const Poly& f) {
  std::vector<Scalar> c = f.coeffs();
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Poly(f.field(), std::move(c)).monic();
}

Poly Factorization::product() const {
  Poly r = Poly::constant(unit);
  for (const auto& f : factors) r *= f.base.pow(f.exponent);
  return r;
}

namespace {

void require_prime(const Poly& f, const char* what) {
  if (!f.field().is_prime()) throw UnsupportedField(std::string(what) + ": only available over GF(p)");
}

// g(x) = sum a_{kp} x^{kp}  ->  sum a_{kp} x^k
Poly pth_root(const Poly& f) {
  const std::int64_t p = f.field().p();
  std::vector<Scalar> c;
  for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) c.push_back(f.coeff(i));
  return Poly(f.field(), std::move(c));
}

void squarefree_split(const Poly& f, int mult, std::vector<Factor>& out) {
  if (f.degree() < 1) return;
  const Field& fld = f.field();
  Poly c = gcd(f, f.derivative());
  Poly w = divmod(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = divmod(w, y).first;
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree_split(pth_root(c.monic()), mult * static_cast<int>(fld.p()), out);
}

Poly frobenius_power(const Poly& h, const Poly& m) { return powmod(h, m.field().p(), m); }

void equal_degree_split(const Poly& g, int d, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(g.monic());
    return;
  }
  const Field& fld = g.field();
  for (;;) {
    std::vector<Scalar> c;
    for (int i = 0; i < g.degree(); ++i) c.push_back(random_scalar(fld, rng));
    Poly a(fld, std::move(c));
    if (a.degree() < 1) continue;
    // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
    Poly t = a % g, acc = a % g;
    for (int i = 1; i < d; ++i) {
      t = frobenius_power(t, g);
      acc = mulmod(acc, t, g);
    }
    Poly b = powmod(acc, (fld.p() - 1) / 2, g) - Poly::constant(Scalar::one(fld));
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree_split(h, d, rng, out);
      equal_degree_split(divmod(g, h).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

Factorization factorize(const Poly& f, Rng& rng) {
  require_prime(f, "factorize");
  if (f.is_zero()) throw DomainError("factorize: zero polynomial");
  const Field& fld = f.field();
  Factorization out{f.lead(), {}, 0};
  std::vector<Factor> sqf;
  squarefree_split(f.monic(), 1, sqf);
  std::map<Poly, int> merged;
  for (const auto& [g0, mult] : sqf) {
    Poly g = g0;
    Poly h = Poly::x(fld) % g;
    const Poly xg = Poly::x(fld);
    for (int i = 1; g.degree() >= 2 * i; ++i) {
      h = frobenius_power(h, g);
      Poly d = gcd(g, h - xg);
      if (d.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree_split(d, i, rng, parts);
        for (auto& p : parts) merged[p] += mult;
        g = divmod(g, d).first;
        h = h % g;
      }
    }
    if (g.degree() > 0) merged[g.monic()] += mult;
  }
  for (auto& [b, e] : merged) out.factors.push_back({b, e});
  return out;
}

Factorization factorize(const Poly& f, std::uint64_t seed) {
  Rng rng(seed);
  Factorization r = factorize(f, rng);
  r.seed = seed;
  return r;
}

Poly radical(const Poly& f) {
  require_prime(f, "radical");
  if (f.is_zero()) throw DomainError("radical: zero polynomial");
  Poly r = Poly::constant(Scalar::one(f.field()));
  for (const auto& fac : factorize(f).factors) r *= fac.base;
  return r;
}

bool is_irreducible(const Poly& f) {
  require_prime(f, "is_irreducible");
  const int n = f.degree();
  if (n < 1) return false;
  if (n == 1) return true;
  Poly g = f.monic();
  const Poly x = Poly::x(f.field());
  auto frob_iter = [&](int k) {
    Poly h = x % g;
    for (int i = 0; i < k; ++i) h = frobenius_power(h, g);
    return h;
  };
  for (int r = 2; r <= n; ++r) {
    if (n % r != 0 || !is_prime_number(r)) continue;
    if (gcd(g, frob_iter(n / r) - x).degree() > 0) return false;
  }
  return (frob_iter(n) - x).is_zero();
}

}  // namespace sympinv
