#pragma once

#include <cstdint>

namespace sympinv {

/// Attempts allowed to one randomized or exhaustive search. SYMPINV_BUDGET
/// overrides the default.
std::uint64_t default_search_budget();

}  // namespace sympinv
