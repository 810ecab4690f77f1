#include "sympinv/verify.hpp"

#include <atomic>
#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

#include "suites.hpp"

namespace sympinv {

namespace detail {

Outcome parallel_outcomes(std::size_t count, unsigned jobs, const std::function<Outcome(std::size_t)>& fn) {
  std::vector<Outcome> parts(count);
  std::atomic<std::size_t> next{0};
  auto work = [&]() {
    for (std::size_t i = next++; i < count; i = next++) parts[i] = fn(i);
  };
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < std::max(1u, jobs); ++i) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  Outcome out;
  for (const auto& p : parts) out.merge(p);
  return out;
}

const GroupTable& group(int n, std::int64_t q) {
  static std::mutex mu;
  static std::map<std::pair<int, std::int64_t>, std::unique_ptr<GroupTable>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, q}];
  if (!slot) {
    slot = std::make_unique<GroupTable>(n, q);
    slot->class_count();
  }
  return *slot;
}

Mat class_rep(const GroupTable& g, std::size_t cls) { return g.unpack(g.elements()[g.class_representative(cls)]); }

std::string label(const GroupTable& g, std::size_t cls) {
  return "Sp(" + std::to_string(2 * g.n()) + "," + std::to_string(g.q()) + ") class " + std::to_string(cls) + " [" +
         serialize_compact(class_rep(g, cls)) + "]";
}

std::vector<std::pair<int, std::int64_t>> groups_for(const SuiteOptions& opt,
                                                     std::vector<std::pair<int, std::int64_t>> defaults) {
  if (opt.n > 0 && opt.q > 0) return {{opt.n, opt.q}};
  if (opt.q > 0) {
    std::vector<std::pair<int, std::int64_t>> out;
    for (auto [n, q] : defaults)
      if (q == opt.q) out.emplace_back(n, q);
    if (out.empty()) out.emplace_back(1, opt.q);
    return out;
  }
  if (opt.n > 0) {
    std::vector<std::pair<int, std::int64_t>> out;
    for (auto [n, q] : defaults)
      if (n == opt.n) out.emplace_back(n, q);
    return out;
  }
  return defaults;
}

}  // namespace detail

namespace {

using detail::class_rep;
using detail::label;
using detail::Outcome;

bool yes(const Decision& d) { return d.verdict == Verdict::yes; }

std::string verdicts(const std::string& a, Verdict x, const std::string& b, bool y) {
  return a + "=" + to_string(x) + " " + b + "=" + (y ? "true" : "false");
}

void check_witness(Outcome& o, const SymplecticElement& phi, const Decision& d, const std::string& where) {
  if (d.verdict != Verdict::yes) return;
  o.check(d.witness.has_value(), where + ": true verdict without witness");
  if (d.witness) o.check(verify_witness(phi, *d.witness), where + ": witness fails verification");
}

// Runs fn on every class of every group, in parallel over classes.
Outcome over_classes(const SuiteOptions& opt, const std::vector<std::pair<int, std::int64_t>>& groups,
                     const std::function<void(Outcome&, const GroupTable&, std::size_t)>& fn) {
  Outcome out;
  for (auto [n, q] : groups) {
    const GroupTable& g = detail::group(n, q);
    out.merge(detail::parallel_outcomes(g.class_count(), opt.jobs, [&](std::size_t c) {
      Outcome o;
      fn(o, g, c);
      return o;
    }));
  }
  return out;
}

ClassifyOptions no_oracle(const SuiteOptions& opt, std::size_t c) {
  ClassifyOptions o;
  o.budget = opt.budget;
  o.seed = opt.seed + c;
  return o;
}

Outcome suite_theorem4(const SuiteOptions& opt) {
  auto groups = detail::groups_for(opt, {{1, 3}, {1, 7}, {1, 11}, {2, 3}});
  return over_classes(opt, groups, [&](Outcome& o, const GroupTable& g, std::size_t c) {
    Mat a = class_rep(g, c);
    auto phi = SymplecticElement::standard(a);
    const std::string where = label(g, c);
    Decision crit = is_two_skew_product(phi, no_oracle(opt, c));
    Decision rev = is_reversible_sp(phi, no_oracle(opt, c));
    auto o_skew = g.product(a, -1, -1);
    auto o_rev = g.conjugate(a, inverse(a));
    o.check(crit.method == Method::criterion, where + ": two_skew not decided by the criterion");
    o.check((crit.verdict == Verdict::yes) == o_skew.has_value() && crit.verdict != Verdict::unknown,
            where + ": " + verdicts("criterion", crit.verdict, "oracle_two_skew", o_skew.has_value()));
    o.check(o_skew.has_value() == o_rev.has_value(),
            where + ": oracle_two_skew=" + (o_skew ? "true" : "false") + " oracle_reversible=" + (o_rev ? "true" : "false"));
    o.check((rev.verdict == Verdict::yes) == o_rev.has_value() && rev.verdict != Verdict::unknown,
            where + ": " + verdicts("reversible", rev.verdict, "oracle_reversible", o_rev.has_value()));
    check_witness(o, phi, crit, where + " two_skew");
    check_witness(o, phi, rev, where + " reversible");
  });
}

Outcome suite_theorem2(const SuiteOptions& opt) {
  auto groups = detail::groups_for(opt, {{1, 3}, {1, 7}, {2, 3}});
  return over_classes(opt, groups, [&](Outcome& o, const GroupTable& g, std::size_t c) {
    Mat a = class_rep(g, c);
    auto phi = SymplecticElement::standard(a);
    const std::string where = label(g, c);
    Decision d = is_bireflectional(phi, no_oracle(opt, c));
    auto oracle = g.product(a, 1, 1);
    o.check(d.verdict != Verdict::unknown && (d.verdict == Verdict::yes) == oracle.has_value(),
            where + ": " + verdicts("decision", d.verdict, "oracle", oracle.has_value()));
    check_witness(o, phi, d, where + " bireflectional");
  });
}

Outcome suite_theorem5(const SuiteOptions& opt) {
  auto groups = detail::groups_for(opt, {{1, 3}, {1, 7}, {2, 3}});
  Outcome out = over_classes(opt, groups, [&](Outcome& o, const GroupTable& g, std::size_t c) {
    Mat a = class_rep(g, c);
    auto phi = SymplecticElement::standard(a);
    const std::string where = label(g, c);
    Decision d = is_inv_skew_product(phi, no_oracle(opt, c));
    Decision neg = is_negating_sp(phi, no_oracle(opt, c));
    auto oracle = g.product(a, 1, -1);
    auto o_neg = g.conjugate(a, -inverse(a));
    o.check(d.verdict != Verdict::unknown && yes(d) == oracle.has_value(),
            where + ": " + verdicts("inv_skew", d.verdict, "oracle", oracle.has_value()));
    o.check(neg.verdict != Verdict::unknown && yes(neg) == o_neg.has_value(),
            where + ": " + verdicts("negating", neg.verdict, "oracle_negating", o_neg.has_value()));
    check_witness(o, phi, d, where + " inv_skew");
    check_witness(o, phi, neg, where + " negating");
    Decision psp = psp_reversible_not_bireflectional(phi, no_oracle(opt, c));
    o.check(psp.verdict == Verdict::no, where + ": psp_reversible_not_bireflectional is not false in dimension <= 4");
    Verdict gl = inv_skew_gl_reading(phi);
    if ((gl == Verdict::yes) != oracle.has_value())
      o.info.push_back(where + ": GL reading of conjugacy to -phi^{-1} gives " + to_string(gl) + ", oracle gives " +
                       (oracle ? "true" : "false"));
  });
  return out;
}

SymplecticElement eight_dim_example(const Field& f, Rng& rng) {
  auto psi = symplectic_realization(Poly(f, {1, 0, 1}).pow(2), rng);
  if (!psi) throw Error("eight-dimensional example: no realization of (x^2 + 1)^2");
  Mat j = Mat::identity(f, 2);
  j(0, 1) = Scalar::one(f);
  Mat a = direct_sum(direct_sum(psi->matrix(), j), -inverse(j));
  Mat g = direct_sum(direct_sum(psi->gram(), Mat::standard_symplectic(f, 1)), Mat::standard_symplectic(f, 1));
  return SymplecticElement(a, g);
}

Outcome suite_corollary(const SuiteOptions& opt) {
  Outcome o;
  Field f = Field::prime(opt.q > 0 ? opt.q : 3);
  Rng rng(opt.seed);
  const std::size_t trials = opt.trials > 0 ? opt.trials : 4;
  for (std::size_t k = 0; k < trials; ++k) {
    SymplecticElement base = eight_dim_example(f, rng);
    // A random symplectic change of coordinates of the same example.
    Mat fr = symplectic_frame(base.gram());
    Mat x = random_symplectic(Mat::standard_symplectic(f, 4), rng);
    Mat c = inverse(fr) * x * fr;
    SymplecticElement phi = k == 0 ? base : SymplecticElement(inverse(c) * base.matrix() * c, base.gram());
    ClassifyOptions co;
    co.seed = opt.seed + k;
    co.budget = opt.budget;
    ClassificationReport r = classify(phi, co);
    const std::string where = "example " + std::to_string(k);
    const Decision& psp = r.psp_reversible_not_bireflectional;
    o.check(psp.verdict == Verdict::yes, where + ": verdict " + to_string(psp.verdict));
    o.check(psp.witness && psp.witness->negated && verify_witness(phi, *psp.witness),
            where + ": conjugator to -phi^{-1} missing or invalid");
    o.check(r.negating_sp.verdict == Verdict::yes, where + ": negating_sp " + to_string(r.negating_sp.verdict));
    o.check(r.bireflectional.verdict == Verdict::no, where + ": bireflectional " + to_string(r.bireflectional.verdict));
    o.check(r.reversible_sp.verdict == Verdict::no, where + ": reversible_sp " + to_string(r.reversible_sp.verdict));
    o.check(r.inv_skew.verdict == Verdict::no, where + ": inv_skew " + to_string(r.inv_skew.verdict));
    o.check(phi.dim() == 8, where + ": dimension");
  }
  return o;
}

Outcome suite_invariants(const SuiteOptions& opt) {
  auto groups = detail::groups_for(opt, {{1, 3}, {1, 7}, {1, 11}, {2, 3}});
  return over_classes(opt, groups, [&](Outcome& o, const GroupTable& g, std::size_t c) {
    Mat a = class_rep(g, c);
    auto phi = SymplecticElement::standard(a);
    const std::string where = label(g, c);
    // Parity of dim Bahn^t for reversible classes.
    if (g.conjugate(a, inverse(a))) {
      for (std::size_t t = 1; t <= g.dim(); ++t) {
        std::size_t d = spaces(a, SpaceKind::bahn, static_cast<int>(t)).dim();
        o.check(d % 2 == 0, where + ": dim Bahn^" + std::to_string(t) + " = " + std::to_string(d) + " is odd");
      }
    }
    const Mat id = Mat::identity(a.field(), a.rows());
    // Unipotent cyclic elements are not conjugate to their inverses when -1 is a nonsquare.
    if (is_cyclic(a) && (a - id).pow(static_cast<std::int64_t>(a.rows())).is_zero())
      o.check(!g.conjugate(a, inverse(a)), where + ": unipotent cyclic element is Sp-reversible");
    // Homocyclic bicyclic with phi^2 fixfree is hyperbolic.
    const auto inv = invariant_factors(a).invariant_factors;
    if (inv.size() == 2 && inv[0] == inv[1] && rank(a * a - id) == a.rows()) {
      auto h = is_hyperbolic_exhaustive(phi, opt.budget);
      o.check(h.verdict == Verdict::yes, where + ": bicyclic with phi^2 fixfree but hyperbolic=" + to_string(h.verdict));
    }
    ClassifyOptions co = no_oracle(opt, c);
    Decision bi = is_bireflectional(phi, co), sk = is_two_skew_product(phi, co), rv = is_reversible_sp(phi, co),
             is = is_inv_skew_product(phi, co);
    o.check(!yes(bi) || yes(rv), where + ": bireflectional but not reversible");
    o.check(!yes(sk) || yes(rv), where + ": two_skew but not reversible");
    o.check(sk.verdict == rv.verdict, where + ": two_skew and reversible differ");
    Rng rng(opt.seed + c);
    for (int k = 0; k < 3; ++k) {
      Mat x = g.unpack(g.elements()[rng() % g.order()]);
      auto conj = SymplecticElement::standard(inverse(x) * a * x);
      co.seed = opt.seed + c + 1000 * (k + 1);
      o.check(is_bireflectional(conj, co).verdict == bi.verdict, where + ": bireflectional not a class function");
      o.check(is_two_skew_product(conj, co).verdict == sk.verdict, where + ": two_skew not a class function");
      o.check(is_reversible_sp(conj, co).verdict == rv.verdict, where + ": reversible not a class function");
      o.check(is_inv_skew_product(conj, co).verdict == is.verdict, where + ": inv_skew not a class function");
    }
  });
}

bool needs_three_mod_four(const std::string& name) {
  return name == "theorem4" || name == "theorem5" || name == "corollary" || name == "invariants";
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"theorem2", "theorem4",  "theorem5",         "corollary",
                                              "wall",     "dickson",   "invariants",       "witnesses",
                                              "big_transvection",      "infrastructure"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteOptions& opt) {
  static const std::map<std::string, std::function<Outcome(const SuiteOptions&)>> table{
      {"theorem2", suite_theorem2},
      {"theorem4", suite_theorem4},
      {"theorem5", suite_theorem5},
      {"corollary", suite_corollary},
      {"wall", detail::suite_wall},
      {"dickson", detail::suite_dickson},
      {"invariants", suite_invariants},
      {"witnesses", detail::suite_witnesses},
      {"big_transvection", detail::suite_big_transvection},
      {"infrastructure", detail::suite_infrastructure}};
  auto it = table.find(name);
  if (it == table.end()) throw DomainError("unknown suite " + name);
  SuiteResult r;
  r.suite = name;
  if (opt.q > 0 && !is_prime_number(opt.q)) throw UnsupportedField("q must be an odd prime");
  if (opt.q > 0 && opt.q % 4 != 3 && (needs_three_mod_four(name) || name == "big_transvection")) {
    r.skipped = true;
    r.notice = "skipped: q = " + std::to_string(opt.q) + " is 1 mod 4, outside the hypothesis q = 3 mod 4";
    return r;
  }
  auto t0 = std::chrono::steady_clock::now();
  Outcome o = it->second(opt);
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.checks = o.checks;
  r.failures = std::move(o.failures);
  r.info = std::move(o.info);
  return r;
}

}  // namespace sympinv
