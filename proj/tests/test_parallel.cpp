#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/datagen.hpp"
#include "revpref/maximin.hpp"
#include "revpref/recover.hpp"
#include "revpref/reference.hpp"
#include "revpref/relations.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace revpref;

// The OpenMP kernels must be bit-identical to the serial references: every
// parallel loop writes disjoint slots or reduces with order-independent ops.

TEST_CASE("expenditure kernel matches the serial reference bit for bit") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    Dataset d = random_dataset(rng, 40 + rng() % 80, 1 + rng() % 8);
    CHECK(expenditure_matrix(d).E == reference::expenditure_matrix(d));
  }
}

TEST_CASE("closure kernel matches the serial reference") {
  std::mt19937_64 rng(2);
  for (int rep = 0; rep < 10; ++rep) {
    Dataset d = random_dataset(rng, 30 + rng() % 120, 2);
    auto base = direct_relations(d);
    auto par = transitive_closure(base);
    auto ser = reference::transitive_closure(base);
    CHECK(par.weakClosure == ser.weakClosure);
    CHECK(par.strictClosure == ser.strictClosure);
  }
}

TEST_CASE("pairwise kernel matches the serial reference bit for bit") {
  std::mt19937_64 rng(3);
  for (int rep = 0; rep < 6; ++rep) {
    Dataset d = random_wgarp_dataset(rng, 8 + rng() % 10, 2);
    auto par = pairwise_numbers(d);
    auto ser = reference::pairwise_numbers(d);
    CHECK(par.R == ser.R);
    CHECK(par.lambdaPair == ser.lambdaPair);
  }
}

TEST_CASE("results are independent of the thread count") {
  std::mt19937_64 rng(4);
  Dataset d = random_wgarp_dataset(rng, 6, 3);
  auto fam = LocalUtilityFamily::build(d);
  auto audit1 = check_rationalization(fam, d, 100, 9);
  auto sup1 = supporting_set_nonempty(d, Vec{1.0, 1.0, 1.0});

#ifdef _OPENMP
  int saved = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  auto fam2 = LocalUtilityFamily::build(d);
  auto audit2 = check_rationalization(fam2, d, 100, 9);
  auto sup2 = supporting_set_nonempty(d, Vec{1.0, 1.0, 1.0});
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif

  CHECK(fam.pairU() == fam2.pairU());
  CHECK(fam.pairLambda() == fam2.pairLambda());
  CHECK(audit1.failures == audit2.failures);
  CHECK(audit1.worstMargin == audit2.worstMargin);
  CHECK(audit1.worstObservation == audit2.worstObservation);
  CHECK(sup1.nonempty == sup2.nonempty);
  if (sup1.certificatePrice && sup2.certificatePrice)
    CHECK(*sup1.certificatePrice == *sup2.certificatePrice);
}
