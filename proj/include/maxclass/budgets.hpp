#pragma once

#include <cstdint>

namespace maxclass {

// Enumeration caps, tunable from the CLI. Exceeding a cap raises budget_error
// (or marks the affected check as skipped); it is never ignored silently.
struct Budgets {
  std::int64_t oracle_elements = 390625;      // 5^8: element / conjugacy enumeration
  std::int64_t exponent_elements = 78125;     // 5^7: exponent() of a nonabelian subgroup
  std::int64_t intersection_elements = 3125;  // 5^5: generic intersection fallback
  std::int64_t center_bruteforce = 15625;     // 5^6: brute-force center cross-check
  std::int64_t normal_subgroups = 3125;       // 5^5: exhaustive normal-subgroup search
};

}  // namespace maxclass
