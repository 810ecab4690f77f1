#pragma once

// Verification suites shared by the command line and the acceptance binary.

#include <cstdint>
#include <string>
#include <vector>

#include "sympinv/budget.hpp"

namespace sympinv {

struct SuiteOptions {
  /// Group parameters; 0 selects the suite's default set.
  int n = 0;
  std::int64_t q = 0;
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  /// Random trials per field or per kind; 0 selects the default.
  std::size_t trials = 0;
  std::uint64_t budget = default_search_budget();
};

struct SuiteResult {
  std::string suite;
  bool skipped = false;
  std::string notice;
  std::uint64_t checks = 0;
  std::vector<std::string> failures;
  /// Observations that are reported but not asserted.
  std::vector<std::string> info;
  double seconds = 0;
  bool passed() const { return failures.empty(); }
};

/// theorem2, theorem4, theorem5, corollary, wall, dickson, invariants,
/// witnesses, big_transvection, infrastructure.
const std::vector<std::string>& suite_names();
/// Throws DomainError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opt = {});

}  // namespace sympinv
