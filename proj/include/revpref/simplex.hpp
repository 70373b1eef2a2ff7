#ifndef REVPREF_SIMPLEX_HPP
#define REVPREF_SIMPLEX_HPP

#include <vector>

#include "revpref/types.hpp"

namespace revpref {

enum class LpStatus { Optimal, Infeasible, Unbounded };

enum class RowSense { LE, EQ, GE };

/// minimize c.x  subject to  A[i].x (sense[i]) b[i],  x >= 0.
struct LpProblem {
  Vec c;
  std::vector<Vec> A;
  std::vector<RowSense> sense;
  Vec b;

  void add_row(Vec row, RowSense s, double rhs) {
    A.push_back(std::move(row));
    sense.push_back(s);
    b.push_back(rhs);
  }
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vec x;
  double objective = 0.0;
};

/// Dense two-phase tableau simplex with Bland's rule (anti-cycling).
/// Sized for the small systems this project builds (tens of variables).
LpResult solve_lp(const LpProblem& p, double tol = 1e-9);

/// Phase-1 only: is the constraint set nonempty?
bool lp_feasible(const LpProblem& p, Vec* point = nullptr, double tol = 1e-9);

}  // namespace revpref

#endif
