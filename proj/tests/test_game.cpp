#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/game.hpp"
#include "revpref/oracles.hpp"
#include "revpref/simplex.hpp"

using namespace revpref;

TEST_CASE("simplex solves a small textbook LP") {
  // min -3x - 5y s.t. x <= 4, 2y <= 12, 3x + 2y <= 18
  LpProblem p;
  p.c = {-3, -5};
  p.add_row({1, 0}, RowSense::LE, 4);
  p.add_row({0, 2}, RowSense::LE, 12);
  p.add_row({3, 2}, RowSense::LE, 18);
  auto r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-36.0));
  CHECK(r.x[0] == doctest::Approx(2.0));
  CHECK(r.x[1] == doctest::Approx(6.0));
}

TEST_CASE("simplex handles equalities, GE rows, infeasibility, unboundedness") {
  LpProblem eq;
  eq.c = {1, 1};
  eq.add_row({1, 1}, RowSense::EQ, 2);
  eq.add_row({1, -1}, RowSense::GE, 0);
  auto r = solve_lp(eq);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(2.0));

  LpProblem inf;
  inf.c = {0};
  inf.add_row({1}, RowSense::GE, 2);
  inf.add_row({1}, RowSense::LE, 1);
  CHECK(solve_lp(inf).status == LpStatus::Infeasible);

  LpProblem unb;
  unb.c = {-1};
  unb.add_row({-1}, RowSense::LE, 0);
  CHECK(solve_lp(unb).status == LpStatus::Unbounded);
}

TEST_CASE("degenerate LP terminates (Bland)") {
  // classic cycling-prone instance
  LpProblem p;
  p.c = {-0.75, 150, -0.02, 6};
  p.add_row({0.25, -60, -0.04, 9}, RowSense::LE, 0);
  p.add_row({0.5, -90, -0.02, 3}, RowSense::LE, 0);
  p.add_row({0, 0, 1, 0}, RowSense::LE, 1);
  auto r = solve_lp(p);
  REQUIRE(r.status == LpStatus::Optimal);
  CHECK(r.objective == doctest::Approx(-0.05));
}

TEST_CASE("singleton game") {
  Matrix M(1, 1);
  M(0, 0) = 3.25;
  auto g = solve_matrix_game(M);
  CHECK(g.value == doctest::Approx(3.25).epsilon(1e-12));
  CHECK(g.rowStrategy[0] == doctest::Approx(1.0));
  CHECK(g.colStrategy[0] == doctest::Approx(1.0));
}

TEST_CASE("rock paper scissors has value zero and uniform strategies") {
  Matrix M(3, 3, 0.0);
  M(0, 1) = -1; M(0, 2) = 1;
  M(1, 0) = 1;  M(1, 2) = -1;
  M(2, 0) = -1; M(2, 1) = 1;
  auto g = solve_matrix_game(M);
  CHECK(std::fabs(g.value) <= 1e-9);
  for (int i = 0; i < 3; ++i) {
    CHECK(g.rowStrategy[i] == doctest::Approx(1.0 / 3));
    CHECK(g.colStrategy[i] == doctest::Approx(1.0 / 3));
  }
}

TEST_CASE("strategies are simplex points and the value is certified by the oracle") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> entry(-5.0, 5.0);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
    Matrix M(n, m);
    for (auto& v : M.data()) v = entry(rng);

    auto g = solve_matrix_game(M);
    double sumRow = 0.0, sumCol = 0.0;
    for (double v : g.rowStrategy) {
      CHECK(v >= -1e-12);
      sumRow += v;
    }
    for (double v : g.colStrategy) {
      CHECK(v >= -1e-12);
      sumCol += v;
    }
    CHECK(sumRow == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(sumCol == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::fabs(g.valueMaximin - g.valueMinimax) <= 1e-9);

    auto truth = oracle::brute_force_game_value(M);
    REQUIRE(truth.certified);
    CHECK(truth.value >= truth.gridLowerBound - 1e-9);
    CHECK(g.value == doctest::Approx(truth.value).epsilon(1e-6));
    CHECK(std::fabs(g.value - truth.value) <= 1e-3);
  }
}

TEST_CASE("game value is invariant under simultaneous row/column permutation") {
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> entry(-2.0, 2.0);
  for (int rep = 0; rep < 40; ++rep) {
    std::size_t n = 2 + rng() % 5;
    Matrix M(n, n);
    for (auto& v : M.data()) v = entry(rng);
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    Matrix P(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) P(i, j) = M(perm[i], perm[j]);
    CHECK(solve_matrix_game(M).value == doctest::Approx(solve_matrix_game(P).value).epsilon(1e-9));
  }
}
