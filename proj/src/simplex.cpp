#include "revpref/simplex.hpp"

#include <cmath>
#include <cstddef>
#include <limits>

#include "revpref/errors.hpp"

namespace revpref {

namespace {

class Tableau {
 public:
  Tableau(const LpProblem& p, double tol) : tol_(tol), n_(p.c.size()), m_(p.A.size()) {
    // Columns: n originals, then one slack/surplus per inequality row,
    // then one artificial per row that needs one.
    nslack_ = 0;
    for (auto s : p.sense)
      if (s != RowSense::EQ) ++nslack_;
    ncols_ = n_ + nslack_;
    firstArtificial_ = ncols_;

    rows_.assign(m_, Vec(ncols_, 0.0));
    rhs_.assign(m_, 0.0);
    basis_.assign(m_, std::size_t(-1));

    std::size_t slackCol = n_;
    std::vector<std::size_t> needArtificial;
    for (std::size_t i = 0; i < m_; ++i) {
      double sign = 1.0;
      RowSense sense = p.sense[i];
      if (p.b[i] < 0.0) {  // normalize to rhs >= 0
        sign = -1.0;
        if (sense == RowSense::LE)
          sense = RowSense::GE;
        else if (sense == RowSense::GE)
          sense = RowSense::LE;
      }
      for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign * p.A[i][j];
      rhs_[i] = sign * p.b[i];
      if (p.sense[i] != RowSense::EQ) {
        rows_[i][slackCol] = (sense == RowSense::LE) ? 1.0 : -1.0;
        if (sense == RowSense::LE)
          basis_[i] = slackCol;  // slack starts basic
        else
          needArtificial.push_back(i);
        ++slackCol;
      } else {
        needArtificial.push_back(i);
      }
    }

    nart_ = needArtificial.size();
    ncols_ += nart_;
    for (auto& r : rows_) r.resize(ncols_, 0.0);
    std::size_t artCol = firstArtificial_;
    for (std::size_t i : needArtificial) {
      rows_[i][artCol] = 1.0;
      basis_[i] = artCol;
      ++artCol;
    }
  }

  LpStatus run_phase1() {
    if (nart_ == 0) return LpStatus::Optimal;
    Vec cost(ncols_, 0.0);
    for (std::size_t j = firstArtificial_; j < ncols_; ++j) cost[j] = 1.0;
    LpStatus st = optimize(cost, ncols_);
    if (st != LpStatus::Optimal) return st;  // phase 1 is always bounded below by 0
    if (objective(cost) > tol_ * std::max<std::size_t>(1, m_)) return LpStatus::Infeasible;
    purge_artificials();
    return LpStatus::Optimal;
  }

  LpStatus run_phase2(const Vec& c) {
    Vec cost(ncols_, 0.0);
    for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
    return optimize(cost, firstArtificial_);
  }

  Vec solution() const {
    Vec x(n_, 0.0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    return x;
  }

 private:
  double objective(const Vec& cost) const {
    double v = 0.0;
    for (std::size_t i = 0; i < m_; ++i) v += cost[basis_[i]] * rhs_[i];
    return v;
  }

  // Bland's rule on both the entering and the leaving choice.
  LpStatus optimize(const Vec& cost, std::size_t allowedCols) {
    for (;;) {
      Vec y(m_);
      for (std::size_t i = 0; i < m_; ++i) y[i] = cost[basis_[i]];

      std::size_t enter = ncols_;
      for (std::size_t j = 0; j < allowedCols && enter == ncols_; ++j) {
        double r = cost[j];
        for (std::size_t i = 0; i < m_; ++i) r -= y[i] * rows_[i][j];
        if (r < -tol_) enter = j;
      }
      if (enter == ncols_) return LpStatus::Optimal;

      std::size_t leave = m_;
      double bestRatio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < m_; ++i) {
        double a = rows_[i][enter];
        if (a > tol_) {
          double ratio = rhs_[i] / a;
          if (ratio < bestRatio - tol_ ||
              (ratio < bestRatio + tol_ && (leave == m_ || basis_[i] < basis_[leave]))) {
            bestRatio = ratio;
            leave = i;
          }
        }
      }
      if (leave == m_) return LpStatus::Unbounded;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    double piv = rows_[r][c];
    for (double& v : rows_[r]) v /= piv;
    rhs_[r] /= piv;
    rows_[r][c] = 1.0;
    basis_[r] = c;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      double f = rows_[i][c];
      if (f == 0.0) continue;
      for (std::size_t j = 0; j < ncols_; ++j) rows_[i][j] -= f * rows_[r][j];
      rows_[i][c] = 0.0;
      rhs_[i] -= f * rhs_[r];
      if (rhs_[i] < 0.0 && rhs_[i] > -1e-12) rhs_[i] = 0.0;
    }
  }

  // After phase 1, pivot any basic artificial (at level ~0) out; a row with
  // no eligible pivot column is redundant and is blanked instead.
  void purge_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < firstArtificial_) continue;
      std::size_t col = ncols_;
      for (std::size_t j = 0; j < firstArtificial_ && col == ncols_; ++j)
        if (std::fabs(rows_[i][j]) > tol_) col = j;
      if (col != ncols_) {
        pivot(i, col);
      } else {
        for (auto& v : rows_[i]) v = 0.0;
        rows_[i][basis_[i]] = 1.0;
        rhs_[i] = 0.0;
      }
    }
  }

  double tol_;
  std::size_t n_, m_, nslack_ = 0, nart_ = 0, ncols_ = 0, firstArtificial_ = 0;
  std::vector<Vec> rows_;
  Vec rhs_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult solve_lp(const LpProblem& p, double tol) {
  for (const auto& row : p.A)
    if (row.size() != p.c.size()) throw SolverError("LP row length mismatch");

  LpResult res;
  Tableau tab(p, tol);
  LpStatus st = tab.run_phase1();
  if (st != LpStatus::Optimal) {
    res.status = st;
    return res;
  }
  st = tab.run_phase2(p.c);
  res.status = st;
  if (st == LpStatus::Optimal) {
    res.x = tab.solution();
    res.objective = dot(res.x, p.c);
  }
  return res;
}

bool lp_feasible(const LpProblem& p, Vec* point, double tol) {
  LpProblem q = p;
  q.c.assign(p.c.size(), 0.0);
  LpResult r = solve_lp(q, tol);
  if (r.status == LpStatus::Optimal && point) *point = r.x;
  return r.status == LpStatus::Optimal;
}

}  // namespace revpref
