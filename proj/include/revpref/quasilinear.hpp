#ifndef REVPREF_QUASILINEAR_HPP
#define REVPREF_QUASILINEAR_HPP

#include "revpref/dataset.hpp"
#include "revpref/game.hpp"
#include "revpref/types.hpp"

namespace revpref {

/// Quasilinear utility levels with U^t - U^s >= p^t(x^t - x^s).
struct QuasilinearNumbers {
  Vec U;
};

/// Skew-symmetric pairwise gaps with R(t,s) >= p^t(x^t - x^s).
struct QLPairwiseNumbers {
  Matrix R;
};

/// Shortest-path potentials over edge weights c(j -> k) = p^j(x^k - x^j),
/// Bellman-Ford from a virtual zero-weight source into every node.
/// Requires the strong law of demand; throws StrongLawViolation.
QuasilinearNumbers quasilinear_numbers(const Dataset& d, double tol = kDefaultTol);

/// min_s { U^s + p^s(z - x^s) }.
double quasilinear_utility(const Dataset& d, const QuasilinearNumbers& n, const Vec& z);

/// Closed form R(s,t) = (p^s(x^s - x^t) - p^t(x^t - x^s)) / 2.
/// Requires the law of demand; throws LawOfDemandViolation.
QLPairwiseNumbers ql_pairwise_numbers(const Dataset& d, double tol = kDefaultTol);

/// Same closed form without the gate (for equivalence testing).
QLPairwiseNumbers ql_pairwise_numbers_raw(const Dataset& d);

bool validate_quasilinear(const QuasilinearNumbers& n, const Dataset& d, double tol = 1e-7);
bool validate_ql_pairwise(const QLPairwiseNumbers& n, const Dataset& d, double tol = 1e-7);

/// The maximin quasilinear preference value: game value of the payoff
/// matrix M[s][t] = R(s,t) + p^s(x - x^s) - p^t(y - x^t).
struct QlPreferenceResult {
  double value = 0.0;
  GameSolution game;
};

QlPreferenceResult eval_ql_preference(const Dataset& d, const Vec& x, const Vec& y,
                                      double tol = kDefaultTol);

/// Existence of skew-symmetric R and a single positive multiplier vector
/// lambda with R(t,s) >= lambda^t p^t(x^t - x^s): after eliminating R by
/// skew-symmetry, a linear feasibility problem in lambda alone, normalized
/// to sum T, decided by maximizing the smallest coordinate.
struct TheoremDResult {
  bool feasible = false;
  Vec lambda;
  double minLambda = 0.0;
};

TheoremDResult check_theorem_d_feasibility(const Dataset& d, double tol = kDefaultTol);

}  // namespace revpref

#endif
