#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/afriat.hpp"
#include "revpref/axioms.hpp"
#include "revpref/datagen.hpp"
#include "revpref/errors.hpp"
#include "revpref/fixtures.hpp"
#include "revpref/oracles.hpp"
#include "revpref/quasilinear.hpp"

using namespace revpref;

namespace {

Dataset single_obs() {
  Matrix p(1, 2), x(1, 2);
  p(0, 0) = 1; p(0, 1) = 2; x(0, 0) = 2; x(0, 1) = 1;
  return Dataset(std::move(p), std::move(x));
}

Dataset duplicated_obs() {
  Matrix p(2, 2), x(2, 2);
  for (int t = 0; t < 2; ++t) {
    p(t, 0) = 1; p(t, 1) = 2; x(t, 0) = 2; x(t, 1) = 1;
  }
  return Dataset(std::move(p), std::move(x));
}

}  // namespace

TEST_CASE("potentials: trivial, duplicated, and the two-observation fixture") {
  CHECK(quasilinear_numbers(single_obs()).U == Vec{0.0});

  auto dup = quasilinear_numbers(duplicated_obs());
  CHECK(dup.U[0] == dup.U[1]);

  Dataset d = fixtures::law_of_demand_pair();
  auto n = quasilinear_numbers(d);
  CHECK(validate_quasilinear(n, d));
  CHECK(n.U[0] - n.U[1] >= -1.0 - 1e-12);  // U^1-U^2 >= p^1(x^1-x^2) = -1
  CHECK(n.U[1] - n.U[0] >= -1.0 - 1e-12);

  Vec truth = oracle::brute_force_path_potentials(d);
  for (std::size_t t = 0; t < 2; ++t) CHECK(n.U[t] == doctest::Approx(truth[t]).epsilon(1e-12));
}

TEST_CASE("potentials match exhaustive path enumeration and are gauge-shiftable") {
  std::mt19937_64 rng(606);
  std::size_t matched = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 6, 1 + rng() % 3);
    if (!check_strong_law(d).holds) continue;
    auto n = quasilinear_numbers(d);
    Vec truth = oracle::brute_force_path_potentials(d);
    for (std::size_t t = 0; t < d.T(); ++t)
      CHECK(std::fabs(n.U[t] - truth[t]) <= 1e-9);
    QuasilinearNumbers shifted{n.U};
    for (auto& u : shifted.U) u += 17.25;
    CHECK(validate_quasilinear(shifted, d));
    ++matched;
  }
  CHECK(matched > 20);
}

TEST_CASE("quasilinear construction succeeds exactly on strong-law data") {
  std::mt19937_64 rng(607);
  std::size_t holds = 0, fails = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 6, 2);
    bool slod = check_strong_law(d).holds;
    bool ok;
    try {
      ok = validate_quasilinear(quasilinear_numbers(d), d);
    } catch (const StrongLawViolation&) {
      ok = false;
    }
    CHECK(ok == slod);
    (slod ? holds : fails) += 1;
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}

TEST_CASE("quasilinear utility: envelope value, monotonicity, rationalization audit") {
  Dataset d = fixtures::law_of_demand_pair();
  auto n = quasilinear_numbers(d);

  for (std::size_t t = 0; t < 2; ++t)
    CHECK(quasilinear_utility(d, n, d.bundle(t)) == doctest::Approx(n.U[t]));

  CHECK(quasilinear_utility(d, n, Vec{0.5, 0.5}) < quasilinear_utility(d, n, Vec{1.0, 1.0}));

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> qty(0.01, 3.0);
  for (int k = 0; k < 1000; ++k) {
    Vec z{qty(rng), qty(rng)};
    for (std::size_t t = 0; t < 2; ++t) {
      double lhs = quasilinear_utility(d, n, d.bundle(t)) - d.wealth(t);
      double rhs = quasilinear_utility(d, n, z) - d.cost(t, z);
      CHECK(lhs >= rhs - 1e-9);
    }
  }
}

TEST_CASE("pairwise closed form validates and matches the formula") {
  Dataset d = fixtures::law_of_demand_pair();
  auto n = ql_pairwise_numbers(d);
  // R(0,1) = ((E00-E01) - (E11-E10))/2 = ((4-4) - (4-4))/2 = 0
  CHECK(n.R(0, 1) == 0.0);
  CHECK(n.R(1, 1) == 0.0);
  CHECK(validate_ql_pairwise(n, d));

  CHECK_THROWS_AS(ql_pairwise_numbers(fixtures::example1()), LawOfDemandViolation);
  try {
    ql_pairwise_numbers(fixtures::example1());
  } catch (const LawOfDemandViolation& e) {
    CHECK(e.witness == std::vector<std::size_t>{0, 1});
  }
}

TEST_CASE("closed form validates exactly on law-of-demand data") {
  std::mt19937_64 rng(608);
  std::size_t holds = 0, fails = 0;
  for (int rep = 0; rep < 200; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 5, 2);
    bool lod = check_law_of_demand(d).holds;
    CHECK(validate_ql_pairwise(ql_pairwise_numbers_raw(d), d) == lod);
    (lod ? holds : fails) += 1;
  }
  CHECK(holds > 0);
  CHECK(fails > 0);
}

TEST_CASE("quasilinear preference: skew-symmetry, rationalization, concavity in x") {
  Dataset d = fixtures::law_of_demand_pair();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> qty(0.05, 2.0);
  std::uniform_real_distribution<double> theta(0.0, 1.0);

  for (int k = 0; k < 60; ++k) {
    Vec x{qty(rng), qty(rng)}, y{qty(rng), qty(rng)}, z{qty(rng), qty(rng)};
    double fwd = eval_ql_preference(d, x, y).value;
    double bwd = eval_ql_preference(d, y, x).value;
    CHECK(std::fabs(fwd + bwd) <= 1e-9);
    CHECK(std::fabs(eval_ql_preference(d, x, x).value) <= 1e-9);

    // Definition-style rationalization: r(x^t, z) >= p^t(x^t - z)
    for (std::size_t t = 0; t < 2; ++t) {
      double lhs = eval_ql_preference(d, d.bundle(t), z).value;
      CHECK(lhs >= d.wealth(t) - d.cost(t, z) - 1e-9);
    }

    // concavity in the first argument
    double th = theta(rng);
    Vec mix(2);
    for (std::size_t l = 0; l < 2; ++l) mix[l] = th * x[l] + (1 - th) * z[l];
    double lhs = eval_ql_preference(d, mix, y).value;
    double rhs = th * fwd + (1 - th) * eval_ql_preference(d, z, y).value;
    CHECK(lhs >= rhs - 1e-9);
  }
}

TEST_CASE("constant-multiplier system: afriat multipliers certify GARP data") {
  std::mt19937_64 rng(610);
  for (int rep = 0; rep < 25; ++rep) {
    std::size_t T = 1 + rng() % 4;
    Dataset d = random_garp_dataset(rng, T, 2);
    auto res = check_theorem_d_feasibility(d);
    CHECK(res.feasible);
    if (res.feasible) {
      auto E = expenditure_matrix(d).E;
      for (std::size_t t = 0; t < T; ++t) {
        CHECK(res.lambda[t] > 0.0);
        for (std::size_t s = 0; s < T; ++s) {
          double v = res.lambda[t] * (E(t, t) - E(t, s)) + res.lambda[s] * (E(s, s) - E(s, t));
          CHECK(v <= 1e-7);
        }
      }
    }
  }
}

TEST_CASE("constant-multiplier system: T=1, the cyclic fixture, and the grid oracle") {
  CHECK(check_theorem_d_feasibility(single_obs()).feasible);

  // the 3-cycle forces lambda_1 <= 0: infeasible, and the grid agrees
  auto res = check_theorem_d_feasibility(fixtures::example1());
  CHECK_FALSE(res.feasible);
  CHECK_FALSE(oracle::lambda_grid_feasible(fixtures::example1(), 60));

  std::mt19937_64 rng(611);
  std::size_t agreements = 0;
  for (int rep = 0; rep < 40; ++rep) {
    Dataset d = random_dataset(rng, 2 + rng() % 2, 2);
    bool lp = check_theorem_d_feasibility(d).feasible;
    bool grid = oracle::lambda_grid_feasible(d, 48, 1e-7);
    // the coarse grid can miss thin feasible cones but never invents one
    if (grid) CHECK(lp);
    if (grid == lp) ++agreements;
  }
  CHECK(agreements > 25);
}
