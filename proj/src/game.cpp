#include "revpref/game.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "revpref/errors.hpp"

namespace revpref {

GameSolution solve_matrix_game(const Matrix& M, double tol) {
  const std::size_t nr = M.rows(), nc = M.cols();
  if (nr == 0 || nc == 0) throw SolverError("empty payoff matrix");
  for (double v : M.data())
    if (!std::isfinite(v)) throw SolverError("payoff matrix has non-finite entry");

  double lo = M(0, 0), hi = M(0, 0);
  for (double v : M.data()) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  const double shift = 1.0 - lo;  // all shifted entries >= 1
  const double scale = std::max(1.0, hi - lo);

  // Column player: min sum(y) s.t. sum_t M'[s][t] y_t >= 1 for every row s.
  LpProblem colLp;
  colLp.c.assign(nc, 1.0);
  for (std::size_t s = 0; s < nr; ++s) {
    Vec row(nc);
    for (std::size_t t = 0; t < nc; ++t) row[t] = M(s, t) + shift;
    colLp.add_row(std::move(row), RowSense::GE, 1.0);
  }
  LpResult colRes = solve_lp(colLp, tol);
  if (colRes.status != LpStatus::Optimal) throw SolverError("column-player LP did not solve");

  // Row player: min -sum(z) s.t. sum_s M'[s][t] z_s <= 1 for every column t.
  LpProblem rowLp;
  rowLp.c.assign(nr, -1.0);
  for (std::size_t t = 0; t < nc; ++t) {
    Vec row(nr);
    for (std::size_t s = 0; s < nr; ++s) row[s] = M(s, t) + shift;
    rowLp.add_row(std::move(row), RowSense::LE, 1.0);
  }
  LpResult rowRes = solve_lp(rowLp, tol);
  if (rowRes.status != LpStatus::Optimal) throw SolverError("row-player LP did not solve");

  GameSolution g;
  double ySum = colRes.objective;
  double zSum = -rowRes.objective;
  if (ySum <= 0.0 || zSum <= 0.0) throw SolverError("degenerate game transformation");
  g.valueMaximin = 1.0 / ySum - shift;
  g.valueMinimax = 1.0 / zSum - shift;
  g.value = g.valueMaximin;

  g.colStrategy.assign(nc, 0.0);
  for (std::size_t t = 0; t < nc; ++t) g.colStrategy[t] = colRes.x[t] / ySum;
  g.rowStrategy.assign(nr, 0.0);
  for (std::size_t s = 0; s < nr; ++s) g.rowStrategy[s] = rowRes.x[s] / zSum;

  if (std::fabs(g.valueMaximin - g.valueMinimax) > 64.0 * tol * scale) {
    std::ostringstream os;
    os << "minimax gap " << (g.valueMaximin - g.valueMinimax) << " exceeds tolerance";
    throw SolverError(os.str());
  }
  return g;
}

}  // namespace revpref
