#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/axioms.hpp"
#include "revpref/datagen.hpp"
#include "revpref/fixtures.hpp"
#include "revpref/relations.hpp"

using namespace revpref;

namespace {

Dataset single_obs() {
  Matrix p(1, 2), x(1, 2);
  p(0, 0) = 1; p(0, 1) = 1; x(0, 0) = 1; x(0, 1) = 1;
  return Dataset(std::move(p), std::move(x));
}

// boundary pair: each bundle exactly affordable at the other's prices
Dataset warp_boundary_pair() { return fixtures::law_of_demand_pair(); }

// Replays a reported witness against raw expenditures.
bool witness_replays(const Dataset& d, const AxiomReport& rep, double tol = kDefaultTol) {
  if (rep.holds || !rep.witness) return false;
  auto E = expenditure_matrix(d).E;
  const auto& w = *rep.witness;
  if (rep.axiom == "WARP") {
    auto [t, s] = std::pair(w[0], w[1]);
    return E(t, t) >= E(t, s) - tol && E(s, s) >= E(s, t) - tol &&
           !vec_equal(d.bundle(t), d.bundle(s), tol);
  }
  if (rep.axiom == "WGARP") {
    auto [t, s] = std::pair(w[0], w[1]);
    return E(t, t) >= E(t, s) - tol && E(s, s) > E(s, t) + tol;
  }
  if (rep.axiom == "SARP" || rep.axiom == "GARP") {
    // consecutive weak links around the chain, then the closing direct link
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (E(w[i], w[i]) < E(w[i], w[i + 1]) - tol) return false;
    std::size_t t = w.front(), s = w.back();
    if (rep.axiom == "GARP") return E(s, s) > E(s, t) + tol;
    return E(s, s) >= E(s, t) - tol && !vec_equal(d.bundle(t), d.bundle(s), tol);
  }
  if (rep.axiom == "law of demand") {
    auto [t, s] = std::pair(w[0], w[1]);
    return E(t, t) - E(t, s) - E(s, t) + E(s, s) > tol;
  }
  if (rep.axiom == "strong law of demand") {
    double total = 0.0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::size_t a = w[i], b = w[(i + 1) % w.size()];
      total += E(a, a) - E(a, b);
    }
    return total > tol;
  }
  return false;
}

}  // namespace

TEST_CASE("warp") {
  CHECK(check_warp(fixtures::example1()).holds);
  CHECK(check_warp(single_obs()).holds);

  auto rep = check_warp(warp_boundary_pair());
  CHECK_FALSE(rep.holds);  // E(0,1) = 4 = E(0,0), E(1,0) = 4 = E(1,1), bundles differ
  REQUIRE(rep.witness);
  CHECK(*rep.witness == std::vector<std::size_t>{0, 1});
}

TEST_CASE("wgarp") {
  CHECK(check_wgarp(fixtures::example1()).holds);
  CHECK(check_wgarp(single_obs()).holds);

  Dataset ext = fixtures::example1().extended(Vec{1.0 / 6, 1.0 / 6, 1.0 / 6}, Vec{2, 2, 2});
  auto rep = check_wgarp(ext);
  CHECK_FALSE(rep.holds);
  CHECK(witness_replays(ext, rep));
}

TEST_CASE("sarp and garp") {
  auto garp = check_garp(fixtures::example1());
  CHECK_FALSE(garp.holds);
  REQUIRE(garp.witness);
  CHECK(*garp.witness == std::vector<std::size_t>{0, 1, 2});
  CHECK(witness_replays(fixtures::example1(), garp));

  CHECK(check_sarp(single_obs()).holds);
  CHECK(check_garp(single_obs()).holds);

  auto sarp = check_sarp(warp_boundary_pair());
  CHECK_FALSE(sarp.holds);
  CHECK(witness_replays(warp_boundary_pair(), sarp));
}

TEST_CASE("law of demand") {
  CHECK(check_law_of_demand(warp_boundary_pair()).holds);  // (-1,1).(1,-1) = -2
  CHECK(check_law_of_demand(single_obs()).holds);

  auto rep = check_law_of_demand(fixtures::example1());
  CHECK_FALSE(rep.holds);
  REQUIRE(rep.witness);
  CHECK(*rep.witness == std::vector<std::size_t>{0, 1});
  CHECK(rep.slack == doctest::Approx(6.0));  // 22 - 13 - 25 + 22
}

TEST_CASE("strong law of demand") {
  CHECK(check_strong_law(warp_boundary_pair()).holds);
  CHECK(check_strong_law(single_obs()).holds);

  auto rep = check_strong_law(fixtures::example1());
  CHECK_FALSE(rep.holds);
  CHECK(witness_replays(fixtures::example1(), rep));
}

TEST_CASE("implication chains on random data") {
  std::mt19937_64 rng(1234);
  std::size_t warpSeen = 0, lodSeen = 0;
  for (int rep = 0; rep < 300; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 6, 1 + rng() % 4);
    bool warp = check_warp(d).holds, sarp = check_sarp(d).holds;
    bool wgarp = check_wgarp(d).holds, garp = check_garp(d).holds;
    bool lod = check_law_of_demand(d).holds, slod = check_strong_law(d).holds;
    if (sarp) CHECK(warp);
    if (garp) CHECK(wgarp);
    if (slod) CHECK(lod);
    if (warp) CHECK(wgarp);  // WARP forbids weak/weak reversals, so also weak/strict ones
    if (!warp) ++warpSeen;
    if (!lod) ++lodSeen;
  }
  CHECK(warpSeen > 0);
  CHECK(lodSeen > 0);
}

TEST_CASE("two-good equivalence and T=2 law equivalence") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    Dataset d = random_dataset(rng, 1 + rng() % 6, 2);
    CHECK(check_wgarp(d).holds == check_garp(d).holds);
    CHECK(check_warp(d).holds == check_sarp(d).holds);
  }
  for (int rep = 0; rep < 200; ++rep) {
    Dataset d = random_dataset(rng, 2, 1 + rng() % 4);
    CHECK(check_law_of_demand(d).holds == check_strong_law(d).holds);
  }
}

TEST_CASE("every witness replays with positive slack") {
  std::mt19937_64 rng(555);
  std::size_t replayed = 0;
  for (int rep = 0; rep < 400; ++rep) {
    Dataset d = random_dataset(rng, 2 + rng() % 5, 1 + rng() % 3);
    for (const auto& r : check_all(d)) {
      if (r.holds) continue;
      CHECK(witness_replays(d, r));
      CHECK(r.slack > kDefaultTol);
      ++replayed;
    }
  }
  CHECK(replayed > 100);
}
