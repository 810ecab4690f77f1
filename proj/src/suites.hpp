#pragma once

// Shared plumbing for the verification suites.

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "sympinv/smallgroups.hpp"
#include "sympinv/verify.hpp"

namespace sympinv::detail {

struct Outcome {
  std::uint64_t checks = 0;
  std::vector<std::string> failures, info;

  void check(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void merge(const Outcome& o) {
    checks += o.checks;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    info.insert(info.end(), o.info.begin(), o.info.end());
  }
};

/// Runs fn(0..count-1) on jobs threads; results merged in index order.
Outcome parallel_outcomes(std::size_t count, unsigned jobs, const std::function<Outcome(std::size_t)>& fn);

/// Cached group tables, built once per process.
const GroupTable& group(int n, std::int64_t q);
Mat class_rep(const GroupTable& g, std::size_t cls);
std::string label(const GroupTable& g, std::size_t cls);

/// The requested (n, q) or the defaults.
std::vector<std::pair<int, std::int64_t>> groups_for(const SuiteOptions& opt,
                                                     std::vector<std::pair<int, std::int64_t>> defaults);

Outcome suite_wall(const SuiteOptions& opt);
Outcome suite_dickson(const SuiteOptions& opt);
Outcome suite_witnesses(const SuiteOptions& opt);
Outcome suite_big_transvection(const SuiteOptions& opt);
Outcome suite_infrastructure(const SuiteOptions& opt);

template <class T>
std::string str(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace sympinv::detail
