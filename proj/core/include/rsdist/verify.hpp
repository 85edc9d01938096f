#pragma once

#include <string>
#include <vector>

#include "rsdist/scalar.hpp"

namespace rsdist {

// One acceptance check: a certified verdict plus a human-readable account of
// what was measured (grid sizes, violation counts, side measurements).
struct CheckResult {
  std::string name;
  Trilean verdict;
  std::string detail;
};

// 1. The sixteen pinned inequality margins, certified strictly.
CheckResult check_region_margins();
// 2. Exact-count formula against exhaustive enumeration (full grid).
CheckResult check_count_oracle();
// 3. Factorial-moment formula against the exhaustive moment.
CheckResult check_moment_oracle();
// 4. |W_j - main| and |N - main| against their error bounds; both main-term
//    truncation limits measured against the brute-force counts.
CheckResult check_error_bounds();
// 5. Three-way A_j evaluator agreement, exact and high-precision numeric.
CheckResult check_aj_agreement();
// 6. Certified chain ln A_j <= general <= simplified bound; the p = 2 saddle
//    refinement; comparison against the older binomial factor.
CheckResult check_bound_chain();
// 7. Exhaustive deep-hole scans: distance bounds and boundary-degree words.
CheckResult check_deep_hole_scans();
// 8. Sign-certified root brackets of f(p, .) and monotonicity at c = 1/2.
CheckResult check_figure_brackets();

// All eight, in order.
std::vector<CheckResult> run_all_checks();

}  // namespace rsdist
