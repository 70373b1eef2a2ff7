#ifndef REVPREF_SELFCHECK_HPP
#define REVPREF_SELFCHECK_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace revpref {

/// One acceptance criterion: a deterministic check with a pinned tolerance,
/// runnable both from the acceptance test binary and from `revpref selfcheck`.
struct CriterionResult {
  int index = 0;
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

/// Runs the nine acceptance criteria. Deterministic under a fixed seed.
std::vector<CriterionResult> run_acceptance(std::uint64_t seed = 20240101);

/// Prints one pass/fail line per criterion; returns the failure count.
int print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results);

}  // namespace revpref

#endif
