#ifndef REVPREF_AFRIAT_HPP
#define REVPREF_AFRIAT_HPP

#include <functional>

#include "revpref/dataset.hpp"
#include "revpref/types.hpp"

namespace revpref {

/// Utility levels U^t and income multipliers lambda^t > 0 certifying GARP
/// (weak form) or SARP (strict form) through the Afriat inequalities
///   U^t - U^s >= lambda^t p^t (x^t - x^s).
struct AfriatNumbers {
  Vec U;
  Vec lambda;
};

/// Pairwise certificate numbers of the WGARP characterization.
/// R(t,s) = -R(s,t) is the utility gap of observation t over s inside the
/// two-observation data set {t,s}; lambdaPair(t,s) is observation t's income
/// multiplier inside that same pair, so the defining inequalities read
///   R(t,s) >= lambdaPair(t,s) p^t (x^t - x^s)  for all ordered (t,s).
struct PairwiseNumbers {
  Matrix R;
  Matrix lambdaPair;
};

/// Skew-symmetric numbers W(t,s) = -W(s,t) with
///   p^t(x^t - x^s) >= 0  =>  W(t,s) >= 0,  strict => strict.
struct WNumbers {
  Matrix W;
};

using PenaltyFn = std::function<double(const Vec&)>;

/// Layered max-element sweep over the revealed-preference order.
/// Requires GARP; throws GarpViolation (with the witness cycle) otherwise.
AfriatNumbers afriat_numbers(const Dataset& d, double tol = kDefaultTol);

/// Strict variant with the eps*g penalty; requires SARP. g must be
/// continuous with g(z) = 0 iff z = 0. Defaults: g = squared Euclidean
/// norm, eps = 1e-6 * max expenditure.
AfriatNumbers strict_afriat_numbers(const Dataset& d, double eps = -1.0,
                                    const PenaltyFn& g = nullptr, double tol = kDefaultTol);

/// Utility levels V^t satisfying the ordinal (Varian) inequalities; requires
/// GARP. Implemented as the U component of afriat_numbers.
Vec varian_numbers(const Dataset& d, double tol = kDefaultTol);

/// Runs the sweep on every two-observation data set O^2_{st}; requires WGARP.
PairwiseNumbers pairwise_numbers(const Dataset& d, double tol = kDefaultTol);

/// Closed form W(t,s) = p^t(x^t - x^s) - p^s(x^s - x^t); requires WGARP.
WNumbers w_numbers(const Dataset& d, double tol = kDefaultTol);

/// Same closed form without the WGARP gate (for equivalence testing).
WNumbers w_numbers_raw(const Dataset& d);

/// min_t { U^t + lambda^t p^t (z - x^t) }.
double afriat_utility(const AfriatNumbers& n, const Dataset& d, const Vec& z);

/// Residual certificates: entry (t,s) is the slack of the corresponding
/// inequality; all entries must be >= -tol for a valid system.
Matrix afriat_residuals(const AfriatNumbers& n, const Dataset& d);
Matrix pairwise_residuals(const PairwiseNumbers& n, const Dataset& d);

bool validate_afriat(const AfriatNumbers& n, const Dataset& d, double tol = 1e-7);
bool validate_strict_afriat(const AfriatNumbers& n, const Dataset& d, double tol = kDefaultTol);
bool validate_pairwise(const PairwiseNumbers& n, const Dataset& d, double tol = 1e-7);
bool validate_w(const WNumbers& n, const Dataset& d, double tol = kDefaultTol);

}  // namespace revpref

#endif
