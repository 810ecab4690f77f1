// Acceptance criteria 1-9. One PASS/FAIL line per criterion.

#include <algorithm>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "sympinv/verify.hpp"

using namespace sympinv;

namespace {

// Every criterion tolerates zero failed checks.
constexpr std::size_t kMaxFailures = 0;

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> suites;
  double seconds_limit;
};

const std::vector<Criterion> kCriteria = {
    {1, "two skew-involutions: criterion = oracle = Sp-reversible", {"theorem4"}, 300},
    {2, "bireflectional = oracle, witnesses re-multiply", {"theorem2"}, 300},
    {3, "involution times skew-involution and the 8-dimensional example", {"theorem5", "corollary"}, 600},
    {4, "witness soundness, 1000 inputs per kind", {"witnesses"}, 120},
    {5, "Wall normal form, Theta-class conjugacy, Theta identity", {"wall"}, 300},
    {6, "Dickson transform of invariant factors", {"dickson"}, 60},
    {7, "parity of dim Bahn^t for reversible classes", {"invariants"}, 300},
    {8, "big transvections and hyperbolicity of phi^2", {"big_transvection"}, 300},
    {9, "group orders, elementary divisors, factorization", {"infrastructure"}, 300},
};

}  // namespace

int main() {
  SuiteOptions opt;
  opt.jobs = std::max(1u, std::thread::hardware_concurrency());
  int failed = 0;
  for (const auto& c : kCriteria) {
    std::uint64_t checks = 0;
    std::vector<std::string> failures, notes;
    double seconds = 0;
    bool skipped = false;
    for (const auto& s : c.suites) {
      SuiteResult r = run_suite(s, opt);
      checks += r.checks;
      seconds += r.seconds;
      skipped = skipped || r.skipped;
      for (const auto& f : r.failures) failures.push_back(s + ": " + f);
      for (const auto& i : r.info) notes.push_back(s + ": " + i);
    }
    const bool pass = !skipped && checks > 0 && failures.size() <= kMaxFailures && seconds < c.seconds_limit;
    std::printf("%s criterion %d: %s (%llu checks, %zu failures, %.2f s, limit %.0f s)\n", pass ? "PASS" : "FAIL", c.id,
                c.title.c_str(), static_cast<unsigned long long>(checks), failures.size(), seconds, c.seconds_limit);
    for (std::size_t i = 0; i < failures.size() && i < 10; ++i) std::printf("    %s\n", failures[i].c_str());
    for (const auto& n : notes) std::printf("    note: %s\n", n.c_str());
    if (!pass) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
