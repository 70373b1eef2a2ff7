// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Also reachable as `revpref selfcheck`.
#include <cstdlib>
#include <iostream>

#include "revpref/selfcheck.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20240101;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  auto results = revpref::run_acceptance(seed);
  int failures = revpref::print_acceptance(std::cout, results);
  return failures == 0 ? 0 : 1;
}
