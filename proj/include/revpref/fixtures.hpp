#ifndef REVPREF_FIXTURES_HPP
#define REVPREF_FIXTURES_HPP

#include "revpref/dataset.hpp"

namespace revpref::fixtures {

/// Three-good, three-observation data set with a strict revealed-preference
/// 3-cycle: WGARP holds while GARP fails. Ships as fixtures/example1.csv.
inline Dataset example1() {
  Matrix p(3, 3), x(3, 3);
  double pv[3][3] = {{4, 1, 5}, {5, 4, 1}, {1, 5, 4}};
  double xv[3][3] = {{4, 1, 1}, {1, 4, 1}, {1, 1, 4}};
  for (std::size_t t = 0; t < 3; ++t)
    for (std::size_t l = 0; l < 3; ++l) {
      p(t, l) = pv[t][l];
      x(t, l) = xv[t][l];
    }
  return Dataset(std::move(p), std::move(x));
}

/// Two observations obeying the law of demand (and WARP/SARP).
/// Ships as fixtures/lawofdemand2.csv.
inline Dataset law_of_demand_pair() {
  Matrix p(2, 2), x(2, 2);
  p(0, 0) = 1; p(0, 1) = 2; x(0, 0) = 2; x(0, 1) = 1;
  p(1, 0) = 2; p(1, 1) = 1; x(1, 0) = 1; x(1, 1) = 2;
  return Dataset(std::move(p), std::move(x));
}

}  // namespace revpref::fixtures

#endif
