#ifndef REVPREF_GAME_HPP
#define REVPREF_GAME_HPP

#include "revpref/simplex.hpp"
#include "revpref/types.hpp"

namespace revpref {

/// Solution of the zero-sum matrix game where the row player mixes lambda to
/// minimize and the column player mixes mu to maximize lambda' M mu.
struct GameSolution {
  double value = 0.0;          // = valueMaximin
  Vec rowStrategy, colStrategy;  // lambda, mu
  double valueMaximin = 0.0;   // max_mu min_s (M mu)_s
  double valueMinimax = 0.0;   // min_lambda max_t (lambda' M)_t
};

/// Solves both players' linear programs (after the standard positive-shift
/// transformation) and checks the two values agree within tol.
GameSolution solve_matrix_game(const Matrix& M, double tol = 1e-9);

}  // namespace revpref

#endif
