#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/axioms.hpp"
#include "revpref/counterfactual.hpp"
#include "revpref/datagen.hpp"
#include "revpref/errors.hpp"
#include "revpref/fixtures.hpp"

using namespace revpref;

namespace {

Dataset example1_scaled() {
  // rescale each price vector so every observation's wealth equals 1
  Dataset d = fixtures::example1();
  Matrix p = d.prices();
  for (std::size_t t = 0; t < d.T(); ++t) {
    double w = d.wealth(t);
    for (std::size_t l = 0; l < d.L(); ++l) p(t, l) /= w;
  }
  return Dataset(std::move(p), d.bundles());
}

Vec normalized(const Vec& p, const Vec& x) {
  Vec out(x);
  double w = dot(p, x);
  for (auto& v : out) v /= w;
  return out;
}

}  // namespace

TEST_CASE("the average bundle is never W-demanded at any normalized price") {
  Dataset d = example1_scaled();
  Vec target{2, 2, 2};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> pr(0.1, 2.0);
  for (int k = 0; k < 60; ++k) {
    Vec pNew{pr(rng), pr(rng), pr(rng)};
    double w = dot(pNew, target);
    for (auto& v : pNew) v /= w;  // pNew . (2,2,2) = 1
    auto rep = in_wdemand(d, pNew, target);
    CHECK_FALSE(rep.member);
  }
}

TEST_CASE("re-observed choices are W-demanded") {
  Dataset d = example1_scaled();
  for (std::size_t t = 0; t < d.T(); ++t) {
    Vec p = d.price(t);
    Vec x = normalized(p, d.bundle(t));
    CHECK(in_wdemand(d, p, x).member);
  }

  Matrix p1(1, 2), x1(1, 2);
  p1(0, 0) = 2; p1(0, 1) = 3; x1(0, 0) = 1; x1(0, 1) = 1;
  Dataset one(std::move(p1), std::move(x1));
  CHECK(in_wdemand(one, one.price(0), normalized(one.price(0), one.bundle(0))).member);
}

TEST_CASE("a cheap-everywhere bundle passes vacuously") {
  Dataset d = example1_scaled();
  // expensive new price: every observed bundle costs more than 1 at pNew
  Vec pNew{10, 10, 10};
  Vec xNew{0.02, 0.04, 0.04};  // costs exactly 1
  REQUIRE(dot(pNew, xNew) == doctest::Approx(1.0));
  for (std::size_t t = 0; t < 3; ++t) CHECK(dot(pNew, d.bundle(t)) > 1.0);
  CHECK(in_wdemand(d, pNew, xNew).member);
}

TEST_CASE("normalization is a hard precondition") {
  Dataset d = example1_scaled();
  CHECK_THROWS_AS(in_wdemand(d, Vec{1, 1, 1}, Vec{2, 2, 2}), InputError);
}

TEST_CASE("wdemand box: single observation equals direct geometry") {
  Matrix p1(1, 2), x1(1, 2);
  p1(0, 0) = 1; p1(0, 1) = 1; x1(0, 0) = 2; x1(0, 1) = 2;  // wealth 4
  Dataset d(std::move(p1), std::move(x1));
  Vec pNew{2.0, 1.0};
  auto box = wdemand_box(d, pNew);
  REQUIRE(box.feasible);
  // pNew.x^1 = 6 > 1, so no demand condition binds: the box is the whole
  // budget face {2a + b = 1, a,b >= 0}
  CHECK(box.lo[0] == doctest::Approx(0.0));
  CHECK(box.hi[0] == doctest::Approx(0.5));
  CHECK(box.lo[1] == doctest::Approx(0.0));
  CHECK(box.hi[1] == doctest::Approx(1.0));
}

TEST_CASE("wdemand box: empty dataset gives the full budget face") {
  Matrix p0(0, 2), x0(0, 2);
  Dataset d(std::move(p0), std::move(x0));
  auto box = wdemand_box(d, Vec{4.0, 0.5});
  REQUIRE(box.feasible);
  CHECK(box.hi[0] == doctest::Approx(0.25));
  CHECK(box.hi[1] == doctest::Approx(2.0));
}

TEST_CASE("wdemand box contains every member found on a grid") {
  Dataset d = example1_scaled();
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> pr(0.1, 1.0);
  for (int k = 0; k < 10; ++k) {
    Vec pNew{pr(rng), pr(rng), pr(rng)};
    auto box = wdemand_box(d, pNew);
    std::uniform_real_distribution<double> qty(0.01, 3.0);
    for (int i = 0; i < 80; ++i) {
      Vec x{qty(rng), qty(rng), qty(rng)};
      double w = dot(pNew, x);
      for (auto& v : x) v /= w;
      if (in_wdemand(d, pNew, x).member) {
        REQUIRE(box.feasible);
        for (std::size_t l = 0; l < 3; ++l) {
          CHECK(x[l] >= box.lo[l] - 1e-7);
          CHECK(x[l] <= box.hi[l] + 1e-7);
        }
      }
    }
  }
}

TEST_CASE("binary system feasibility matches WGARP and replays") {
  CHECK(milp_feasible({fixtures::example1(), {}}).feasible);
  auto a = milp_feasible({fixtures::example1(), {}});
  CHECK(validate_milp(a, fixtures::example1()));

  Matrix p1(1, 2), x1(1, 2);
  p1(0, 0) = 1; p1(0, 1) = 1; x1(0, 0) = 1; x1(0, 1) = 1;
  Dataset one(std::move(p1), std::move(x1));
  auto b = milp_feasible({one, {}});
  CHECK(b.feasible);
  CHECK(b.R(0, 0) == 0.0);
  CHECK(b.B(0, 0));

  std::mt19937_64 rng(21);
  std::size_t feasibleSeen = 0, infeasibleSeen = 0;
  for (int rep = 0; rep < 150; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 5, 3);
    bool wgarp = check_wgarp(d).holds;
    auto m = milp_feasible({d, {}});
    CHECK(m.feasible == wgarp);
    if (m.feasible) CHECK(validate_milp(m, d));
    (wgarp ? feasibleSeen : infeasibleSeen) += 1;
  }
  CHECK(feasibleSeen > 0);
  CHECK(infeasibleSeen > 0);
}

TEST_CASE("appending the average bundle is infeasible for every candidate price") {
  Dataset d = fixtures::example1();
  CounterfactualQuery q{d, {CounterfactualSlot{}}};
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> pr(0.05, 3.0);
  for (int i = 0; i < 40; ++i)
    q.slots[0].candidates.push_back({Vec{pr(rng), pr(rng), pr(rng)}, Vec{2, 2, 2}});
  auto a = milp_feasible(q);
  CHECK_FALSE(a.feasible);
}

TEST_CASE("slot candidates that restore consistency are found deterministically") {
  Dataset d = fixtures::example1();
  CounterfactualQuery q{d, {CounterfactualSlot{}}};
  // a tiny bundle is affordable nowhere near the observed choices
  q.slots[0].candidates.push_back({Vec{1, 1, 1}, Vec{2, 2, 2}});          // breaks WGARP
  q.slots[0].candidates.push_back({Vec{1, 1, 1}, Vec{0.01, 0.01, 0.01}});  // harmless
  auto a = milp_feasible(q);
  REQUIRE(a.feasible);
  CHECK(a.chosenCandidates == std::vector<std::size_t>{1});
  CHECK(a.bigM.size() == 4);
}

TEST_CASE("combination cap raises") {
  Dataset d = fixtures::example1();
  CounterfactualQuery q{d, {CounterfactualSlot{}, CounterfactualSlot{}}};
  for (int i = 0; i < 40; ++i) {
    q.slots[0].candidates.push_back({Vec{1, 1, 1}, Vec{1, 1, 1}});
    q.slots[1].candidates.push_back({Vec{1, 1, 1}, Vec{1, 1, 1}});
  }
  CHECK_THROWS_AS(milp_feasible(q, kDefaultTol, 1000), PatternExplosion);
}
