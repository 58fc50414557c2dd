#ifndef DUFLO_VERIFY_HPP
#define DUFLO_VERIFY_HPP

#include <string>
#include <vector>

namespace duflo {

struct CheckResult {
  std::string name;
  bool ran = false;      // false when gated out by rank or suite
  bool passed = false;   // meaningful only when ran
  std::string detail;    // counts, or the first failure found
};

bool all_passed(const std::vector<CheckResult>& results);

// Differential and invariant suites for a fixed rank n (1 <= n <= 7).
// `full` additionally enables the checks that are too heavy for the fast
// suite at large n.  Checks whose stated bound excludes n are reported with
// ran = false.
std::vector<CheckResult> run_verification(int n, bool full);

// The eight release criteria, one result each.  `full` extends the
// differential ranges to their maximal rank.
std::vector<CheckResult> run_acceptance(bool full);

}  // namespace duflo

#endif  // DUFLO_VERIFY_HPP
