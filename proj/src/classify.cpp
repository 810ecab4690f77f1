#include "sympinv/classify.hpp"

#include "pieces.hpp"

namespace sympinv {

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::two_involutions: return "two_involutions";
    case WitnessKind::two_skew_involutions: return "two_skew_involutions";
    case WitnessKind::involution_skew: return "involution_skew";
    default: return "reverser";
  }
}

std::string to_string(Method m) {
  switch (m) {
    case Method::criterion: return "criterion";
    case Method::oracle: return "oracle";
    case Method::witness: return "witness";
    default: return "none";
  }
}

std::string to_string(Ambient a) { return a == Ambient::gl ? "GL" : "Sp"; }

bool verify_witness(const SymplecticElement& phi, const Witness& w) {
  const Field& f = phi.field();
  const Mat& a = phi.matrix();
  const Mat& g = phi.gram();
  Mat id = Mat::identity(f, phi.dim());
  if (w.kind == WitnessKind::reverser) {
    if (!w.conjugator || !is_symplectic(*w.conjugator, g)) return false;
    Mat target = w.negated ? Mat(-inverse(a)) : inverse(a);
    return inverse(*w.conjugator) * a * *w.conjugator == target;
  }
  if (w.factors.size() != 2) return false;
  const Mat& s = w.factors[0];
  const Mat& t = w.factors[1];
  if (!is_symplectic(s, g) || !is_symplectic(t, g) || s * t != a) return false;
  switch (w.kind) {
    case WitnessKind::two_involutions: return s * s == id && t * t == id;
    case WitnessKind::two_skew_involutions: return s * s == -id && t * t == -id;
    default: return s * s == id && t * t == -id;
  }
}

std::vector<std::pair<int, int>> primary_multiplicities(const Mat& a, const Poly& p) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  const auto d = static_cast<std::size_t>(p.degree());
  Mat pa = eval(p, a);
  std::vector<std::size_t> r{n};
  Mat cur = Mat::identity(f, n);
  while (true) {
    cur = cur * pa;
    r.push_back(rank(cur));
    if (r.back() == r[r.size() - 2]) break;
  }
  r.push_back(r.back());
  std::vector<std::pair<int, int>> out;
  for (std::size_t t = 1; t + 1 < r.size(); ++t) {
    std::size_t m = (r[t - 1] - r[t]) - (r[t] - r[t + 1]);
    if (m > 0) out.emplace_back(static_cast<int>(t), static_cast<int>(m / d));
  }
  return out;
}

namespace {

bool criterion_field(const Field& f) { return f.minus_one_nonsquare(); }

Rng make_rng(const ClassifyOptions& opt) { return Rng(opt.seed); }

// Empty when every elementary divisor p^t with t even occurs with even
// multiplicity, else the first offending divisor.
std::string odd_even_power(const Mat& a, const Poly& p) {
  for (auto [t, m] : primary_multiplicities(a, p))
    if (t % 2 == 0 && m % 2 != 0)
      return "(" + p.to_string() + ")^" + std::to_string(t) + " has odd multiplicity " + std::to_string(m);
  return {};
}

bool even_powers_even(const Mat& a, const Poly& p) { return odd_even_power(a, p).empty(); }

Poly x_minus(const Field& f, std::int64_t c) { return Poly(f, {-c, 1}); }
Poly x2_plus_1(const Field& f) { return Poly(f, {1, 0, 1}); }

// Balanced hyperbolicity: every elementary divisor with even multiplicity and
// every layer form of the (x -+ 1) parts hyperbolic.
// Each criterion returns an empty string when it holds, else the reason it fails.
std::string bireflection_criterion(const SymplecticElement& phi) {
  auto inv = invariant_factors(phi.matrix());
  for (const auto& ed : *inv.elementary_divisors)
    if (ed.multiplicity % 2 != 0)
      return "(" + ed.base.to_string() + ")^" + std::to_string(ed.exponent) + " has odd multiplicity " +
             std::to_string(ed.multiplicity);
  const char* sign[] = {"x - 1", "x + 1"};
  int k = 0;
  for (const Mat& u : {phi.matrix(), Mat(-phi.matrix())}) {
    for (const auto& layer : unipotent_layer_forms(u, phi.gram()))
      if (!quadratic_form_is_hyperbolic(layer.multiplicity, layer.discriminant_class))
        return std::string("layer form of (") + sign[k] + ")^" + std::to_string(layer.size) + " is not hyperbolic";
    ++k;
  }
  return {};
}

std::string two_skew_criterion(const SymplecticElement& phi) {
  const Field& f = phi.field();
  std::string r = odd_even_power(phi.matrix(), x_minus(f, 1));
  return r.empty() ? odd_even_power(phi.matrix(), x_minus(f, -1)) : r;
}

// phi ~ -phi^{-1} in Sp: GL similarity, and (V+, phi) isometric to (V-, -phi^{-1}).
std::string negating_criterion(const SymplecticElement& phi) {
  const Field& f = phi.field();
  const Mat& a = phi.matrix();
  Mat ainv = inverse(a);
  if (!is_similar(a, -ainv)) return "not similar to -phi^{-1}";
  const std::size_t n = phi.dim();
  Mat id = Mat::identity(f, n);
  Mat vp = kernel((a - id).pow(static_cast<std::int64_t>(n))).basis();
  Mat vm = kernel((a + id).pow(static_cast<std::int64_t>(n))).basis();
  if (vp.rows() != vm.rows()) return "unipotent and negative unipotent parts differ in dimension";
  if (vp.rows() == 0) return {};
  Mat u = restrict_action(vp, a);
  Mat w = -inverse(restrict_action(vm, a));
  if (detail::unipotent_signature(u, vp * phi.gram() * vp.transpose()) !=
      detail::unipotent_signature(w, vm * phi.gram() * vm.transpose()))
    return "phi on the 1-primary part is not isometric to -phi^{-1} on the (-1)-primary part";
  return {};
}

// Conversion between phi's coordinates and the standard form the oracle uses.
struct Frame {
  Mat m, minv;
  explicit Frame(const SymplecticElement& phi)
      : m(phi.space().is_standard() ? Mat::identity(phi.field(), phi.dim()) : symplectic_frame(phi.gram())),
        minv(inverse(m)) {}
  Mat to_std(const Mat& x) const { return m * x * minv; }
  Mat from_std(const Mat& x) const { return minv * x * m; }
};

bool oracle_available(const SymplecticElement& phi, const ClassifyOptions& opt) {
  return opt.oracle && phi.field().is_prime() && opt.oracle->covers(phi.field(), phi.dim());
}

Decision yes(Method m, Ambient amb, std::optional<Witness> w, std::string note = {}) {
  return {Verdict::yes, m, amb, std::move(w), std::move(note)};
}
Decision no(Method m, Ambient amb, std::string note = {}) { return {Verdict::no, m, amb, std::nullopt, std::move(note)}; }
Decision unknown(std::string note) { return {Verdict::unknown, Method::none, Ambient::sp, std::nullopt, std::move(note)}; }

Witness product_witness(WitnessKind k, Mat s, Mat t) { return {k, {std::move(s), std::move(t)}, std::nullopt, false}; }
Witness conjugator_witness(Mat a, bool negated) { return {WitnessKind::reverser, {}, std::move(a), negated}; }

std::optional<Witness> checked(const SymplecticElement& phi, std::optional<Witness> w) {
  if (w && !verify_witness(phi, *w)) throw Error("classify: constructed witness fails verification");
  return w;
}

Decision oracle_product(const SymplecticElement& phi, const ClassifyOptions& opt, int e1, int e2, WitnessKind k) {
  Frame fr(phi);
  auto r = opt.oracle->product(fr.to_std(phi.matrix()), e1, e2);
  if (!r) return no(Method::oracle, Ambient::sp);
  auto w = checked(phi, product_witness(k, fr.from_std(r->first), fr.from_std(r->second)));
  return yes(Method::oracle, Ambient::sp, w);
}

Decision oracle_conjugate(const SymplecticElement& phi, const ClassifyOptions& opt, bool negated) {
  Frame fr(phi);
  Mat a = fr.to_std(phi.matrix());
  Mat target = negated ? Mat(-inverse(a)) : inverse(a);
  auto r = opt.oracle->conjugate(a, target);
  if (!r) return no(Method::oracle, Ambient::sp);
  return yes(Method::oracle, Ambient::sp, checked(phi, conjugator_witness(fr.from_std(*r), negated)));
}

template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const UnsupportedField&) {
    return std::nullopt;
  } catch (const BudgetExceeded&) {
    return std::nullopt;
  }
}

std::optional<Witness> bireflection(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  return guarded([&]() -> std::optional<Witness> {
    auto w = bireflection_witness(phi, rng, budget);
    if (!w) return std::nullopt;
    return product_witness(WitnessKind::two_involutions, w->first, w->second);
  });
}

std::optional<Mat> skew_rev(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  return guarded([&]() { return skew_reverser(phi, rng, budget); });
}

std::optional<Witness> two_skew(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  auto eta = skew_rev(phi, rng, budget);
  if (!eta) return std::nullopt;
  return product_witness(WitnessKind::two_skew_involutions, phi.matrix() * *eta, -*eta);
}

std::optional<Witness> inv_skew(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  auto sigma = guarded([&]() { return negating_conjugator(phi, true, rng, budget); });
  if (!sigma) return std::nullopt;
  return product_witness(WitnessKind::involution_skew, *sigma, *sigma * phi.matrix());
}

std::optional<Witness> negating(const SymplecticElement& phi, Rng& rng, std::uint64_t budget) {
  auto a = guarded([&]() { return negating_conjugator(phi, false, rng, budget); });
  if (!a) return std::nullopt;
  return conjugator_witness(*a, true);
}

// Shared tail: a witness settles "yes", then the oracle, then "unknown".
Decision witness_or_oracle(const SymplecticElement& phi, const ClassifyOptions& opt, std::optional<Witness> w,
                           const std::function<Decision()>& oracle) {
  if (w) return yes(Method::witness, Ambient::sp, checked(phi, std::move(w)));
  if (oracle_available(phi, opt)) return oracle();
  return unknown(phi.field().is_prime() ? "no witness within budget and no oracle for this group"
                                        : "no witness found; no decision procedure over this field");
}

// A criterion verdict, carrying a witness when one is found.
Decision by_criterion(const SymplecticElement& phi, const ClassifyOptions& opt, const std::string& failure,
                      const std::function<std::optional<Witness>()>& build, const std::function<Decision()>& oracle) {
  if (!failure.empty()) return no(Method::criterion, Ambient::sp, failure);
  if (auto w = build()) return yes(Method::criterion, Ambient::sp, checked(phi, std::move(w)));
  if (oracle_available(phi, opt)) {
    Decision d = oracle();
    if (d.verdict != Verdict::yes) throw Error("classify: criterion and oracle disagree");
    d.method = Method::criterion;
    return d;
  }
  return yes(Method::criterion, Ambient::sp, std::nullopt, "witness not found within budget");
}

}  // namespace

Decision is_bireflectional(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Mat& a = phi.matrix();
  if (!is_similar(a, inverse(a))) return no(Method::criterion, Ambient::gl, "not similar to its inverse");
  Rng rng = make_rng(opt);
  auto oracle = [&] { return oracle_product(phi, opt, 1, 1, WitnessKind::two_involutions); };
  if (phi.field().is_prime())
    return by_criterion(phi, opt, bireflection_criterion(phi), [&] { return bireflection(phi, rng, opt.budget); },
                        oracle);
  return witness_or_oracle(phi, opt, bireflection(phi, rng, opt.budget), oracle);
}

Decision is_two_skew_product(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Mat& a = phi.matrix();
  if (!is_similar(a, inverse(a))) return no(Method::criterion, Ambient::gl, "not similar to its inverse");
  Rng rng = make_rng(opt);
  auto oracle = [&] { return oracle_product(phi, opt, -1, -1, WitnessKind::two_skew_involutions); };
  if (criterion_field(phi.field()))
    return by_criterion(phi, opt, two_skew_criterion(phi), [&] { return two_skew(phi, rng, opt.budget); }, oracle);
  return witness_or_oracle(phi, opt, two_skew(phi, rng, opt.budget), oracle);
}

Decision is_reversible_sp(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Mat& a = phi.matrix();
  if (!is_similar(a, inverse(a))) return no(Method::criterion, Ambient::gl, "not similar to its inverse");
  Rng rng = make_rng(opt);
  auto build = [&]() -> std::optional<Witness> {
    if (auto eta = skew_rev(phi, rng, opt.budget)) return conjugator_witness(*eta, false);
    if (auto w = bireflection(phi, rng, opt.budget)) return conjugator_witness(w->factors[0], false);
    return std::nullopt;
  };
  auto oracle = [&] { return oracle_conjugate(phi, opt, false); };
  if (criterion_field(phi.field())) return by_criterion(phi, opt, two_skew_criterion(phi), build, oracle);
  return witness_or_oracle(phi, opt, build(), oracle);
}

Decision is_negating_sp(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Mat& a = phi.matrix();
  if (!is_similar(a, -inverse(a))) return no(Method::criterion, Ambient::gl, "not similar to -phi^{-1}");
  Rng rng = make_rng(opt);
  auto oracle = [&] { return oracle_conjugate(phi, opt, true); };
  if (criterion_field(phi.field()))
    return by_criterion(phi, opt, negating_criterion(phi), [&] { return negating(phi, rng, opt.budget); }, oracle);
  return witness_or_oracle(phi, opt, negating(phi, rng, opt.budget), oracle);
}

Decision is_inv_skew_product(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Mat& a = phi.matrix();
  if (!is_similar(a, -inverse(a))) return no(Method::criterion, Ambient::gl, "not similar to -phi^{-1}");
  Rng rng = make_rng(opt);
  auto oracle = [&] { return oracle_product(phi, opt, 1, -1, WitnessKind::involution_skew); };
  if (criterion_field(phi.field())) {
    std::string failure = negating_criterion(phi);
    if (failure.empty()) failure = odd_even_power(a, x2_plus_1(phi.field()));
    return by_criterion(phi, opt, failure, [&] { return inv_skew(phi, rng, opt.budget); }, oracle);
  }
  return witness_or_oracle(phi, opt, inv_skew(phi, rng, opt.budget), oracle);
}

Verdict inv_skew_gl_reading(const SymplecticElement& phi) {
  if (!criterion_field(phi.field())) return Verdict::unknown;
  const Mat& a = phi.matrix();
  bool holds = is_similar(a, -inverse(a)) && even_powers_even(a, x2_plus_1(phi.field()));
  return holds ? Verdict::yes : Verdict::no;
}

Decision psp_reversible_not_bireflectional(const SymplecticElement& phi, const ClassifyOptions& opt) {
  const Field& f = phi.field();
  if (!f.is_prime()) return unknown("finite fields only");
  if (!criterion_field(f)) return no(Method::criterion, Ambient::sp, "requires q = 3 mod 4");
  if (phi.dim() < 8) return no(Method::criterion, Ambient::sp, "requires dimension at least 8");
  const Mat& a = phi.matrix();
  if (even_powers_even(a, x2_plus_1(f))) return no(Method::criterion, Ambient::sp);
  if (even_powers_even(a, x_minus(f, 1))) return no(Method::criterion, Ambient::sp);
  Decision d = is_negating_sp(phi, opt);
  d.note = "witness conjugates phi to -phi^{-1}";
  return d;
}

ClassificationReport classify(const SymplecticElement& phi, const ClassifyOptions& opt) {
  ClassificationReport r;
  auto inv = invariant_factors(phi.matrix());
  r.invariant_factors = inv.invariant_factors;
  r.elementary_divisors = inv.elementary_divisors;
  r.reversible_gl = is_similar(phi.matrix(), inverse(phi.matrix()));
  r.reversible_sp = is_reversible_sp(phi, opt);
  r.bireflectional = is_bireflectional(phi, opt);
  r.two_skew = is_two_skew_product(phi, opt);
  r.negating_sp = is_negating_sp(phi, opt);
  r.inv_skew = is_inv_skew_product(phi, opt);
  r.inv_skew_gl = inv_skew_gl_reading(phi);
  r.psp_reversible_not_bireflectional = psp_reversible_not_bireflectional(phi, opt);
  return r;
}

}  // namespace sympinv
