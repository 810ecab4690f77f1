#include "sympinv/budget.hpp"

#include <cstdlib>
#include <string>

namespace sympinv {

std::uint64_t default_search_budget() {
  if (const char* env = std::getenv("SYMPINV_BUDGET")) {
    try {
      auto v = std::stoull(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return 200000;
}

}  // namespace sympinv
