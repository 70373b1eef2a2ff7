#include "revpref/maximin.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"
#include "revpref/relations.hpp"

namespace revpref {

namespace {

// Pairwise numbers of both family modes, stored per ordered index:
// entry (s,t) holds observation s's (U, lambda) within pair {s,t}.
void fill_pair_tables(const Dataset& d, bool strict, double eps, double tol, Matrix& pairU,
                      Matrix& pairLambda) {
  const std::size_t T = d.T();
  pairU = Matrix(T, T, 1.0);
  pairLambda = Matrix(T, T, 1.0);
  const std::size_t nPairs = T * (T + 1) / 2;
#pragma omp parallel for schedule(dynamic) if (nPairs > 16)
  for (std::size_t k = 0; k < nPairs; ++k) {
    std::size_t s = 0, acc = 0;
    while (acc + (T - s) <= k) acc += (T - s++);
    std::size_t t = s + (k - acc);
    if (s == t) continue;
    Dataset pd = pair_dataset(d, s, t);
    AfriatNumbers n =
        strict ? strict_afriat_numbers(pd, eps, nullptr, tol) : afriat_numbers(pd, tol);
    pairU(s, t) = n.U[0];
    pairU(t, s) = n.U[1];
    pairLambda(s, t) = n.lambda[0];
    pairLambda(t, s) = n.lambda[1];
  }
}

double default_eps(const Dataset& d) {
  double maxExp = 0.0;
  auto E = expenditure_matrix(d).E;
  for (double v : E.data()) maxExp = std::max(maxExp, v);
  return 1e-6 * std::max(1.0, maxExp);
}

}  // namespace

LocalUtilityFamily LocalUtilityFamily::build(const Dataset& d, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);
  LocalUtilityFamily f;
  f.d_ = d;
  f.mode_ = Mode::Weak;
  fill_pair_tables(d, false, 0.0, tol, f.pairU_, f.pairLambda_);
  return f;
}

LocalUtilityFamily LocalUtilityFamily::build_strict(const Dataset& d, double eps, double tol) {
  auto warp = check_warp(d, tol);
  if (!warp.holds) throw WarpViolation(*warp.witness);
  LocalUtilityFamily f;
  f.d_ = d;
  f.mode_ = Mode::Strict;
  f.eps_ = eps > 0.0 ? eps : default_eps(d);
  fill_pair_tables(d, true, f.eps_, tol, f.pairU_, f.pairLambda_);
  return f;
}

LocalUtilityFamily LocalUtilityFamily::build_global(const Dataset& d, double tol) {
  LocalUtilityFamily f;
  f.d_ = d;
  f.mode_ = Mode::Global;
  f.global_ = afriat_numbers(d, tol);  // throws GarpViolation when GARP fails
  return f;
}

double LocalUtilityFamily::local_utility(std::size_t s, std::size_t t, const Vec& z) const {
  if (mode_ == Mode::Global) return afriat_utility(global_, d_, z);
  if (s == t) {
    // the diagonal has no pairwise utility; callers use local_payoff
    return d_.cost(t, z);
  }
  double us = pairU_(s, t) + pairLambda_(s, t) * (d_.cost(s, z) - d_.wealth(s));
  double ut = pairU_(t, s) + pairLambda_(t, s) * (d_.cost(t, z) - d_.wealth(t));
  return std::min(us, ut);
}

double LocalUtilityFamily::local_payoff(std::size_t s, std::size_t t, const Vec& x,
                                        const Vec& y) const {
  if (mode_ == Mode::Global) return local_utility(s, t, x) - local_utility(s, t, y);
  if (s != t) return local_utility(s, t, x) - local_utility(s, t, y);
  double base = d_.cost(t, x) - d_.cost(t, y);
  if (mode_ == Mode::Strict)
    base -= eps_ * (squared_norm(sub(x, d_.bundle(t))) - squared_norm(sub(y, d_.bundle(t))));
  return base;
}

Matrix LocalUtilityFamily::payoff_matrix(const Vec& x, const Vec& y) const {
  const std::size_t T = d_.T();
  Matrix M(T, T, 0.0);
  for (std::size_t s = 0; s < T; ++s)
    for (std::size_t t = 0; t < T; ++t) M(s, t) = local_payoff(s, t, x, y);
  return M;
}

PreferenceResult eval_preference(const LocalUtilityFamily& f, const Vec& x, const Vec& y,
                                 double tol) {
  if (f.data().T() == 0) throw InputError("preference evaluation needs at least one observation");
  PreferenceResult res;
  Matrix M = f.payoff_matrix(x, y);
  res.game = solve_matrix_game(M, tol);
  res.value = res.game.value;
  res.iStar = std::max_element(res.game.rowStrategy.begin(), res.game.rowStrategy.end()) -
              res.game.rowStrategy.begin();
  res.jStar = std::max_element(res.game.colStrategy.begin(), res.game.colStrategy.end()) -
              res.game.colStrategy.begin();
  return res;
}

RationalizationReport check_rationalization(const LocalUtilityFamily& f, const Dataset& d,
                                            std::size_t samplesPerObservation, std::uint64_t seed,
                                            double tol) {
  RationalizationReport rep;
  rep.samplesPerObservation = samplesPerObservation;
  rep.worstMargin = std::numeric_limits<double>::infinity();
  const std::size_t T = d.T(), L = d.L();
  const bool strict = f.mode() == LocalUtilityFamily::Mode::Strict;

  std::vector<std::size_t> failuresPerObs(T, 0);
  Vec worstPerObs(T, std::numeric_limits<double>::infinity());
  std::vector<Vec> worstBundlePerObs(T);

// observations are independent; per-observation results merge by index below
#pragma omp parallel for schedule(dynamic) if (T > 1)
  for (std::size_t t = 0; t < T; ++t) {
    const Vec xt = d.bundle(t);
    const Vec pt = d.price(t);
    const double wt = d.wealth(t);
    std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * (t + 1));
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    for (std::size_t k = 0; k < samplesPerObservation; ++k) {
      Vec z(L, 0.0);
      if (k == 0) {
        z = xt;  // the chosen bundle itself
      } else if (k <= L) {
        z[k - 1] = wt / pt[k - 1];  // budget-face vertices
      } else {
        // random expenditure shares, scaled into the budget set
        double sumShare = 0.0;
        Vec share(L);
        for (std::size_t l = 0; l < L; ++l) {
          share[l] = -std::log(1.0 - unif(rng));
          sumShare += share[l];
        }
        double depth = (k % 3 == 0) ? 1.0 : unif(rng);  // mix boundary and interior
        for (std::size_t l = 0; l < L; ++l) z[l] = depth * wt * share[l] / (sumShare * pt[l]);
        bool allZero = true;
        for (double v : z)
          if (v > 0.0) allZero = false;
        if (allZero) z = xt;
      }

      double r = eval_preference(f, xt, z).value;
      bool fail;
      if (strict && !vec_equal(z, xt, 1e-12)) {
        fail = !(r > 0.0);
      } else {
        fail = r < -tol;
      }
      if (fail) ++failuresPerObs[t];
      if (r < worstPerObs[t]) {
        worstPerObs[t] = r;
        worstBundlePerObs[t] = z;
      }
    }
  }

  for (std::size_t t = 0; t < T; ++t) {
    rep.failures += failuresPerObs[t];
    if (worstPerObs[t] < rep.worstMargin) {
      rep.worstMargin = worstPerObs[t];
      rep.worstObservation = t;
      rep.worstBundle = worstBundlePerObs[t];
    }
  }
  if (T == 0) rep.worstMargin = 0.0;
  return rep;
}

}  // namespace revpref
