#ifndef REVPREF_MAXIMIN_HPP
#define REVPREF_MAXIMIN_HPP

#include <cstdint>
#include <random>

#include "revpref/afriat.hpp"
#include "revpref/dataset.hpp"
#include "revpref/game.hpp"

namespace revpref {

/// The family of pairwise local utilities
///   u_{st}(z) = min_{k in {s,t}} { U^k + lambda^k p^k (z - x^k) },
/// one per unordered observation pair, plus the diagonal rule. Assembling
/// the payoff matrix M[s][t] = r_{st}(x, y) and solving the induced zero-sum
/// game evaluates the maximin preference function r(x, y).
class LocalUtilityFamily {
 public:
  enum class Mode : std::uint8_t {
    Weak,    // pairwise afriat numbers; diagonal r_tt = p^t(x - y)
    Strict,  // strict pairwise numbers; diagonal gets the eps*g penalty
    Global,  // single global Afriat utility everywhere (GARP degeneration)
  };

  static LocalUtilityFamily build(const Dataset& d, double tol = kDefaultTol);
  static LocalUtilityFamily build_strict(const Dataset& d, double eps = -1.0,
                                         double tol = kDefaultTol);
  static LocalUtilityFamily build_global(const Dataset& d, double tol = kDefaultTol);

  /// u_{st}; for Mode::Global this is the one shared utility.
  double local_utility(std::size_t s, std::size_t t, const Vec& z) const;

  /// r_{st}(x, y): utility difference off the diagonal, p^t(x - y) on it.
  double local_payoff(std::size_t s, std::size_t t, const Vec& x, const Vec& y) const;

  Matrix payoff_matrix(const Vec& x, const Vec& y) const;

  const Dataset& data() const { return d_; }
  Mode mode() const { return mode_; }
  double epsilon() const { return eps_; }

  /// Pairwise numbers in pairwise-numbers layout (diagnostics).
  const Matrix& pairU() const { return pairU_; }
  const Matrix& pairLambda() const { return pairLambda_; }

 private:
  Dataset d_;
  Mode mode_ = Mode::Weak;
  double eps_ = 0.0;
  // Entry (s,t): U and lambda of observation s inside the pair {s,t}.
  Matrix pairU_, pairLambda_;
  AfriatNumbers global_;  // Mode::Global only
};

struct PreferenceResult {
  double value = 0.0;
  GameSolution game;
  std::size_t iStar = 0, jStar = 0;  // modal reference pair (argmax strategies)
};

/// The maximin preference value r(x, y) = game value of [r_{st}(x,y)].
PreferenceResult eval_preference(const LocalUtilityFamily& f, const Vec& x, const Vec& y,
                                 double tol = 1e-9);

/// Monte-Carlo audit of Definition-style rationalization: samples
/// budget-feasible z per observation and checks r(x^t, z) >= -tol
/// (strict mode: > 0 when z != x^t). Deterministic under a fixed seed.
struct RationalizationReport {
  std::size_t samplesPerObservation = 0;
  std::size_t failures = 0;
  double worstMargin = 0.0;
  std::size_t worstObservation = 0;
  Vec worstBundle;
  bool passed() const { return failures == 0; }
};

RationalizationReport check_rationalization(const LocalUtilityFamily& f, const Dataset& d,
                                            std::size_t samplesPerObservation = 200,
                                            std::uint64_t seed = 1, double tol = 1e-6);

}  // namespace revpref

#endif
