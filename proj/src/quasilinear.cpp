#include "revpref/quasilinear.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"
#include "revpref/relations.hpp"
#include "revpref/simplex.hpp"

namespace revpref {

QuasilinearNumbers quasilinear_numbers(const Dataset& d, double tol) {
  auto slod = check_strong_law(d, tol);
  if (!slod.holds) throw StrongLawViolation(*slod.witness);

  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  QuasilinearNumbers out;
  out.U.assign(T, 0.0);
  for (std::size_t round = 0; round + 1 < T; ++round) {
    bool changed = false;
    for (std::size_t j = 0; j < T; ++j)
      for (std::size_t k = 0; k < T; ++k) {
        if (j == k) continue;
        double cand = out.U[j] + (E(j, k) - E(j, j));  // p^j(x^k - x^j)
        if (cand < out.U[k]) {
          out.U[k] = cand;
          changed = true;
        }
      }
    if (!changed) break;
  }
  return out;
}

double quasilinear_utility(const Dataset& d, const QuasilinearNumbers& n, const Vec& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < d.T(); ++s)
    best = std::min(best, n.U[s] + d.cost(s, z) - d.wealth(s));
  return best;
}

QLPairwiseNumbers ql_pairwise_numbers_raw(const Dataset& d) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  QLPairwiseNumbers out{Matrix(T, T, 0.0)};
  for (std::size_t s = 0; s < T; ++s)
    for (std::size_t t = 0; t < T; ++t)
      out.R(s, t) = 0.5 * ((E(s, s) - E(s, t)) - (E(t, t) - E(t, s)));
  return out;
}

QLPairwiseNumbers ql_pairwise_numbers(const Dataset& d, double tol) {
  auto lod = check_law_of_demand(d, tol);
  if (!lod.holds) throw LawOfDemandViolation(*lod.witness);
  return ql_pairwise_numbers_raw(d);
}

bool validate_quasilinear(const QuasilinearNumbers& n, const Dataset& d, double tol) {
  if (n.U.size() != d.T()) return false;
  const Matrix E = expenditure_matrix(d).E;
  double scale = 1.0;
  for (double u : n.U) scale = std::max(scale, std::fabs(u));
  for (std::size_t t = 0; t < d.T(); ++t)
    for (std::size_t s = 0; s < d.T(); ++s)
      if (n.U[t] - n.U[s] < (E(t, t) - E(t, s)) - tol * scale) return false;
  return true;
}

bool validate_ql_pairwise(const QLPairwiseNumbers& n, const Dataset& d, double tol) {
  if (n.R.rows() != d.T()) return false;
  const Matrix E = expenditure_matrix(d).E;
  double scale = 1.0;
  for (double v : n.R.data()) scale = std::max(scale, std::fabs(v));
  for (std::size_t t = 0; t < d.T(); ++t)
    for (std::size_t s = 0; s < d.T(); ++s) {
      if (std::fabs(n.R(t, s) + n.R(s, t)) > tol * scale) return false;
      if (n.R(t, s) < (E(t, t) - E(t, s)) - tol * scale) return false;
    }
  return true;
}

QlPreferenceResult eval_ql_preference(const Dataset& d, const Vec& x, const Vec& y, double tol) {
  if (d.T() == 0) throw InputError("preference evaluation needs at least one observation");
  QLPairwiseNumbers R = ql_pairwise_numbers(d, tol);
  const std::size_t T = d.T();
  Matrix M(T, T, 0.0);
  for (std::size_t s = 0; s < T; ++s) {
    double xs = d.cost(s, x) - d.wealth(s);  // p^s(x - x^s)
    for (std::size_t t = 0; t < T; ++t)
      M(s, t) = R.R(s, t) + xs - (d.cost(t, y) - d.wealth(t));
  }
  QlPreferenceResult res;
  res.game = solve_matrix_game(M);
  res.value = res.game.value;
  return res;
}

TheoremDResult check_theorem_d_feasibility(const Dataset& d, double tol) {
  (void)tol;
  const std::size_t T = d.T();
  TheoremDResult res;
  if (T == 0) {
    res.feasible = true;
    return res;
  }
  const Matrix E = expenditure_matrix(d).E;

  // Variables (lambda_1..lambda_T, m): maximize m subject to
  //   lambda_t - m >= 0, sum lambda = T,
  //   lambda_t a(t,s) + lambda_s a(s,t) <= 0 with a(t,s) = p^t(x^t - x^s).
  LpProblem lp;
  lp.c.assign(T + 1, 0.0);
  lp.c[T] = -1.0;
  Vec sumRow(T + 1, 1.0);
  sumRow[T] = 0.0;
  lp.add_row(std::move(sumRow), RowSense::EQ, double(T));
  for (std::size_t t = 0; t < T; ++t) {
    Vec row(T + 1, 0.0);
    row[t] = 1.0;
    row[T] = -1.0;
    lp.add_row(std::move(row), RowSense::GE, 0.0);
  }
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = t + 1; s < T; ++s) {
      Vec row(T + 1, 0.0);
      row[t] = E(t, t) - E(t, s);
      row[s] = E(s, s) - E(s, t);
      lp.add_row(std::move(row), RowSense::LE, 0.0);
    }

  LpResult r = solve_lp(lp);
  if (r.status != LpStatus::Optimal) return res;  // empty polytope: infeasible
  res.minLambda = -r.objective;
  res.feasible = res.minLambda > 1e-9;
  if (res.feasible) res.lambda.assign(r.x.begin(), r.x.begin() + T);
  return res;
}

}  // namespace revpref
