#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "revpref/datagen.hpp"
#include "revpref/errors.hpp"
#include "revpref/fixtures.hpp"
#include "revpref/maximin.hpp"
#include "revpref/recover.hpp"

using namespace revpref;

TEST_CASE("supporting set of the average bundle is empty on the cyclic fixture") {
  Dataset d = fixtures::example1();
  auto sup = supporting_set_nonempty(d, Vec{2, 2, 2}, SupportAxiom::WGARP);
  CHECK_FALSE(sup.nonempty);
  CHECK(sup.patternsChecked == 27);
}

TEST_CASE("re-choosing an observed bundle is supported, with a replaying certificate") {
  Dataset d = fixtures::example1();
  auto sup = supporting_set_nonempty(d, d.bundle(0), SupportAxiom::WGARP);
  REQUIRE(sup.nonempty);
  REQUIRE(sup.certificatePrice);
  CHECK(is_supporting_price(d, d.bundle(0), *sup.certificatePrice, SupportAxiom::WGARP));
  // the observed price itself supports the observed bundle
  CHECK(is_supporting_price(d, d.bundle(0), d.price(0), SupportAxiom::WGARP));
}

TEST_CASE("single observation always has a supporting price") {
  Matrix p(1, 3), x(1, 3);
  p(0, 0) = 1; p(0, 1) = 2; p(0, 2) = 3;
  x(0, 0) = 3; x(0, 1) = 1; x(0, 2) = 1;
  Dataset d(std::move(p), std::move(x));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> qty(0.05, 3.0);
  for (int k = 0; k < 25; ++k) {
    Vec q{qty(rng), qty(rng), qty(rng)};
    auto sup = supporting_set_nonempty(d, q, SupportAxiom::GARP);
    CHECK(sup.nonempty);
    if (sup.certificatePrice) CHECK(is_supporting_price(d, q, *sup.certificatePrice, SupportAxiom::GARP));
  }
}

TEST_CASE("pattern cap raises instead of sampling silently") {
  std::mt19937_64 rng(6);
  Dataset d = random_dataset(rng, 5, 2);
  CHECK_THROWS_AS(supporting_set_nonempty(d, Vec{1, 1}, SupportAxiom::WGARP, kDefaultTol, 4),
                  PatternExplosion);
}

TEST_CASE("naive and robust bounds on the cyclic fixture") {
  Dataset d = fixtures::example1();
  Vec avg{2, 2, 2}, low{1, 1, 1};

  CHECK_FALSE(in_rp(d, avg, low).member);     // empty support excludes
  CHECK(in_nrw(d, low, avg).member);          // empty support rules nothing out
  CHECK(in_rp_robust(d, avg, low).member);    // dominance shows through every pair
  CHECK_FALSE(in_nrw_robust(d, low, avg).member);

  // self-membership is excluded for RP sets
  CHECK_FALSE(in_rp(d, d.bundle(0), d.bundle(0)).member);
  CHECK_FALSE(in_rp_robust(d, low, low).member);
}

TEST_CASE("negative RP verdicts carry a replaying price certificate") {
  Dataset d = fixtures::example1();
  auto m = in_rp(d, d.bundle(0), Vec{0.1, 0.1, 0.1});
  if (!m.member && m.certificatePrice) {
    // certificate supports the candidate and makes it weakly cheaper
    CHECK(is_supporting_price(d, d.bundle(0), *m.certificatePrice, SupportAxiom::WGARP));
    CHECK(dot(*m.certificatePrice, d.bundle(0)) <=
          dot(*m.certificatePrice, Vec{0.1, 0.1, 0.1}) + 1e-9);
  }
  auto n = in_nrw(d, d.bundle(1), d.bundle(0));
  if (n.member && n.certificatePrice) {
    CHECK(is_supporting_price(d, d.bundle(0), *n.certificatePrice, SupportAxiom::WGARP));
    CHECK(dot(*n.certificatePrice, d.bundle(0)) <=
          dot(*n.certificatePrice, d.bundle(1)) + 1e-9);
  }
}

TEST_CASE("sandwich: naive bounds are contained in the robust bounds") {
  std::mt19937_64 rng(11);
  std::size_t rpSeen = 0, nrwExcluded = 0;
  for (int rep = 0; rep < 12; ++rep) {
    std::size_t T = 1 + rng() % 4;
    Dataset d = random_wgarp_dataset(rng, T, 3);
    std::uniform_real_distribution<double> qty(0.05, 2.0);
    for (int k = 0; k < 6; ++k) {
      Vec x{qty(rng), qty(rng), qty(rng)}, y{qty(rng), qty(rng), qty(rng)};
      bool rp = in_rp(d, y, x).member;
      bool rpw = in_rp_robust(d, y, x).member;
      if (rp) {
        CHECK(rpw);
        ++rpSeen;
      }
      bool nrww = in_nrw_robust(d, y, x).member;
      bool nrw = in_nrw(d, y, x).member;
      if (nrww) CHECK(nrw);
      if (!nrww) ++nrwExcluded;
    }
  }
  CHECK(nrwExcluded > 0);
}

TEST_CASE("strict dominance never survives the robust worse bound") {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 10; ++rep) {
    std::size_t T = 1 + rng() % 4;
    Dataset d = random_wgarp_dataset(rng, T, 3);
    std::uniform_real_distribution<double> qty(0.3, 2.0);
    Vec x{qty(rng), qty(rng), qty(rng)};
    Vec y(x);
    for (auto& v : y) v *= 0.5;  // strictly dominated
    CHECK_FALSE(in_nrw_robust(d, y, x).member);
    CHECK(in_rp_robust(d, x, y).member);
  }
}

TEST_CASE("robust RP membership implies a strictly positive maximin value") {
  std::mt19937_64 rng(13);
  std::size_t implications = 0;
  for (int rep = 0; rep < 10; ++rep) {
    std::size_t T = 1 + rng() % 4;
    Dataset d = random_wgarp_dataset(rng, T, 3);
    auto fam = LocalUtilityFamily::build(d);
    std::uniform_real_distribution<double> qty(0.05, 2.0);
    for (int k = 0; k < 6; ++k) {
      Vec x{qty(rng), qty(rng), qty(rng)}, y{qty(rng), qty(rng), qty(rng)};
      if (in_rp_robust(d, y, x).member) {
        CHECK(eval_preference(fam, y, x).value > 0.0);
        ++implications;
      }
    }
  }
  CHECK(implications > 0);
}
