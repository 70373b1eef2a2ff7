#include "revpref/selfcheck.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "revpref/afriat.hpp"
#include "revpref/axioms.hpp"
#include "revpref/counterfactual.hpp"
#include "revpref/datagen.hpp"
#include "revpref/errors.hpp"
#include "revpref/fixtures.hpp"
#include "revpref/maximin.hpp"
#include "revpref/oracles.hpp"
#include "revpref/quasilinear.hpp"
#include "revpref/recover.hpp"

namespace revpref {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t item_seed(std::uint64_t base, std::uint64_t criterion, std::uint64_t i) {
  std::uint64_t z = base + criterion * 0x9e3779b97f4a7c15ULL + i * 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  return z;
}

CriterionResult cr1_example_reproduction(std::uint64_t) {
  CriterionResult r{1, "Example-1 reproduction (WGARP pass, GARP 3-cycle, exact margins)"};
  auto t0 = Clock::now();
  Dataset d = fixtures::example1();
  std::ostringstream detail;

  bool wgarp = check_wgarp(d).holds;
  auto garp = check_garp(d);
  bool cycleOk = !garp.holds && garp.witness && *garp.witness == std::vector<std::size_t>{0, 1, 2};
  bool marginsOk = true;
  Vec xNew{2.0, 2.0, 2.0};
  for (std::size_t t = 0; t < 3; ++t)
    if (d.wealth(t) - d.cost(t, xNew) != 2.0) marginsOk = false;

  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  bool fast = r.seconds < 1.0;
  r.passed = wgarp && cycleOk && marginsOk && fast;
  detail << "wgarp=" << wgarp << " garpCycle123=" << cycleOk << " exactMargins=" << marginsOk
         << " under1s=" << fast;
  r.detail = detail.str();
  return r;
}

CriterionResult cr2_empty_supporting_set(std::uint64_t) {
  CriterionResult r{2, "Empty supporting set of (2,2,2) under WGARP by pattern exhaustion"};
  auto t0 = Clock::now();
  Dataset d = fixtures::example1();
  auto sup = supporting_set_nonempty(d, Vec{2.0, 2.0, 2.0}, SupportAxiom::WGARP);
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  bool fast = r.seconds < 10.0;
  r.passed = !sup.nonempty && fast;
  std::ostringstream detail;
  detail << "nonempty=" << sup.nonempty << " patterns=" << sup.patternsChecked
         << " under10s=" << fast;
  r.detail = detail.str();
  return r;
}

CriterionResult cr3_bound_sharpness(std::uint64_t) {
  CriterionResult r{3, "Robust bounds are strictly sharper than the naive bounds on Example 1"};
  auto t0 = Clock::now();
  Dataset d = fixtures::example1();
  Vec big{2.0, 2.0, 2.0}, small{1.0, 1.0, 1.0};

  bool rpwIn = in_rp_robust(d, big, small).member;
  bool rpOut = !in_rp(d, big, small).member;
  bool nrwIn = in_nrw(d, small, big).member;
  bool nrwwOut = !in_nrw_robust(d, small, big).member;

  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = rpwIn && rpOut && nrwIn && nrwwOut;
  std::ostringstream detail;
  detail << "222inRPW=" << rpwIn << " 222notInRP=" << rpOut << " 111inNRW=" << nrwIn
         << " 111notInNRWW=" << nrwwOut;
  r.detail = detail.str();
  return r;
}

CriterionResult cr4_theorem_a(std::uint64_t seed) {
  CriterionResult r{4, "Two-good equivalences WGARP<->GARP and WARP<->SARP (1000 datasets)"};
  auto t0 = Clock::now();
  const std::size_t N = 1000;
  std::size_t bad = 0, holdCount = 0, failCount = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad, holdCount, failCount)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 4, i));
    std::size_t T = 1 + rng() % 6;
    Dataset d = random_dataset(rng, T, 2);
    bool wgarp = check_wgarp(d).holds, garp = check_garp(d).holds;
    bool warp = check_warp(d).holds, sarp = check_sarp(d).holds;
    if (wgarp != garp || warp != sarp) ++bad;
    if (garp) ++holdCount; else ++failCount;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  bool fast = r.seconds < 30.0;
  r.passed = bad == 0 && fast && holdCount > 0 && failCount > 0;
  std::ostringstream detail;
  detail << "discrepancies=" << bad << " garpHolds=" << holdCount << " garpFails=" << failCount
         << " under30s=" << fast;
  r.detail = detail.str();
  return r;
}

CriterionResult cr5_theorem1_equivalence(std::uint64_t seed) {
  CriterionResult r{5, "WGARP <-> pairwise numbers <-> W numbers <-> binary system (500 datasets)"};
  auto t0 = Clock::now();
  const std::size_t N = 500;
  std::size_t bad = 0, holdCount = 0;
#pragma omp parallel for schedule(dynamic) reduction(+ : bad, holdCount)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 5, i));
    std::size_t T = 1 + rng() % 5;
    Dataset d = random_dataset(rng, T, 3);
    bool wgarp = check_wgarp(d).holds;

    bool pairOk;
    try {
      pairOk = validate_pairwise(pairwise_numbers(d), d);
    } catch (const WgarpViolation&) {
      pairOk = false;
    }
    bool wOk = validate_w(w_numbers_raw(d), d);
    bool milpOk = milp_feasible({d, {}}).feasible;

    if (wgarp != pairOk || wgarp != wOk || wgarp != milpOk) ++bad;
    if (wgarp) ++holdCount;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = bad == 0 && holdCount > 0 && holdCount < N;
  std::ostringstream detail;
  detail << "discrepancies=" << bad << " wgarpHolds=" << holdCount << "/" << N;
  r.detail = detail.str();
  return r;
}

CriterionResult cr6_maximin_audit(std::uint64_t seed) {
  CriterionResult r{6, "Maximin rationalization, skew-symmetry and minimax agreement audits"};
  auto t0 = Clock::now();
  const std::size_t N = 100;
  std::size_t ratFailures = 0;
  double worstSkew = 0.0, worstGap = 0.0, worstMargin = 0.0;
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : ratFailures) reduction(max : worstSkew, worstGap)  \
    reduction(min : worstMargin)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 6, i));
    std::size_t T = 1 + rng() % 5;
    Dataset d = random_wgarp_dataset(rng, T, 3);
    auto fam = LocalUtilityFamily::build(d);

    auto rat = check_rationalization(fam, d, 200, item_seed(seed, 61, i));
    ratFailures += rat.failures;
    worstMargin = std::min(worstMargin, rat.worstMargin);

    std::uniform_real_distribution<double> qty(0.05, 2.0);
    for (std::size_t k = 0; k < 10; ++k) {
      Vec x(3), y(3);
      for (auto& v : x) v = qty(rng);
      for (auto& v : y) v = qty(rng);
      auto fwd = eval_preference(fam, x, y);
      auto bwd = eval_preference(fam, y, x);
      worstSkew = std::max(worstSkew, std::fabs(fwd.value + bwd.value));
      worstGap = std::max({worstGap, std::fabs(fwd.game.valueMaximin - fwd.game.valueMinimax),
                           std::fabs(bwd.game.valueMaximin - bwd.game.valueMinimax)});
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = ratFailures == 0 && worstMargin >= -1e-6 && worstSkew <= 1e-6 && worstGap <= 1e-9;
  std::ostringstream detail;
  detail << "rationalizationFailures=" << ratFailures << " worstMargin=" << worstMargin
         << " worstSkew=" << worstSkew << " worstMinimaxGap=" << worstGap;
  r.detail = detail.str();
  return r;
}

CriterionResult cr7_game_oracle(std::uint64_t seed) {
  CriterionResult r{7, "Game solver vs certified brute-force oracle; skew-symmetric value 0"};
  auto t0 = Clock::now();
  const std::size_t N = 200, NSkew = 50;
  std::size_t uncertified = 0, mismatches = 0;
  double worstErr = 0.0, worstSkewValue = 0.0;
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : uncertified, mismatches) reduction(max : worstErr)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 7, i));
    std::size_t n = 1 + rng() % 6, m = 1 + rng() % 6;
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    Matrix M(n, m);
    for (auto& v : M.data()) v = entry(rng);

    auto truth = oracle::brute_force_game_value(M);
    if (!truth.certified) {
      ++uncertified;
      continue;
    }
    double got = solve_matrix_game(M).value;
    double err = std::fabs(got - truth.value);
    worstErr = std::max(worstErr, err);
    if (err > 1e-3 || truth.value < truth.gridLowerBound - 1e-9) ++mismatches;
  }
  for (std::size_t i = 0; i < NSkew; ++i) {
    std::mt19937_64 rng(item_seed(seed, 71, i));
    std::size_t n = 2 + rng() % 5;
    std::uniform_real_distribution<double> entry(-5.0, 5.0);
    Matrix M(n, n, 0.0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        double v = entry(rng);
        M(a, b) = v;
        M(b, a) = -v;
      }
    worstSkewValue = std::max(worstSkewValue, std::fabs(solve_matrix_game(M).value));
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = uncertified == 0 && mismatches == 0 && worstSkewValue <= 1e-9;
  std::ostringstream detail;
  detail << "mismatches=" << mismatches << " uncertifiedOracle=" << uncertified
         << " worstAbsError=" << worstErr << " worstSkewGameValue=" << worstSkewValue;
  r.detail = detail.str();
  return r;
}

CriterionResult cr8_quasilinear_suite(std::uint64_t seed) {
  CriterionResult r{8, "Quasilinear equivalences and shortest-path potentials vs enumeration"};
  auto t0 = Clock::now();
  const std::size_t N = 500;
  std::size_t bad = 0, slodHolds = 0, lodHolds = 0;
  double worstPathGap = 0.0;
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : bad, slodHolds, lodHolds) reduction(max : worstPathGap)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 8, i));
    std::size_t T = 1 + rng() % 6, L = 1 + rng() % 3;
    Dataset d = random_dataset(rng, T, L);

    bool slod = check_strong_law(d).holds;
    bool qlOk;
    Vec U;
    try {
      auto n = quasilinear_numbers(d);
      qlOk = validate_quasilinear(n, d);
      U = n.U;
    } catch (const StrongLawViolation&) {
      qlOk = false;
    }
    if (slod != qlOk) ++bad;
    if (slod) {
      ++slodHolds;
      Vec truth = oracle::brute_force_path_potentials(d);
      for (std::size_t t = 0; t < T; ++t)
        worstPathGap = std::max(worstPathGap, std::fabs(U[t] - truth[t]));
    }

    bool lod = check_law_of_demand(d).holds;
    bool pairOk = validate_ql_pairwise(ql_pairwise_numbers_raw(d), d);
    if (lod != pairOk) ++bad;
    if (lod) ++lodHolds;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = bad == 0 && worstPathGap <= 1e-9 && slodHolds > 0 && slodHolds < N;
  std::ostringstream detail;
  detail << "discrepancies=" << bad << " worstPotentialGap=" << worstPathGap
         << " strongLawHolds=" << slodHolds << "/" << N << " lawHolds=" << lodHolds << "/" << N;
  r.detail = detail.str();
  return r;
}

CriterionResult cr9_garp_degeneration(std::uint64_t seed) {
  CriterionResult r{9, "GARP degeneration: global-utility evaluator returns u(x)-u(y) exactly"};
  auto t0 = Clock::now();
  const std::size_t N = 100;
  std::size_t bad = 0, ratFailures = 0;
  double worstDiff = 0.0;
#pragma omp parallel for schedule(dynamic) \
    reduction(+ : bad, ratFailures) reduction(max : worstDiff)
  for (std::size_t i = 0; i < N; ++i) {
    std::mt19937_64 rng(item_seed(seed, 9, i));
    std::size_t T = 1 + rng() % 5, L = 1 + rng() % 3;
    Dataset d = random_garp_dataset(rng, T, L);

    auto globalFam = LocalUtilityFamily::build_global(d);
    AfriatNumbers nums = afriat_numbers(d);
    std::uniform_real_distribution<double> qty(0.05, 2.0);
    for (std::size_t k = 0; k < 20; ++k) {
      Vec x(L), y(L);
      for (auto& v : x) v = qty(rng);
      for (auto& v : y) v = qty(rng);
      double want = afriat_utility(nums, d, x) - afriat_utility(nums, d, y);
      double got = eval_preference(globalFam, x, y).value;
      double diff = std::fabs(got - want);
      worstDiff = std::max(worstDiff, diff);
      if (diff > 1e-12 * std::max(1.0, std::fabs(want))) ++bad;
    }

    auto pairFam = LocalUtilityFamily::build(d);
    auto rat = check_rationalization(pairFam, d, 50, item_seed(seed, 91, i));
    if (rat.failures > 0 || rat.worstMargin < -1e-6) ++ratFailures;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  r.passed = bad == 0 && ratFailures == 0;
  std::ostringstream detail;
  detail << "exactnessViolations=" << bad << " worstDiff=" << worstDiff
         << " pairwiseRationalizationFailures=" << ratFailures;
  r.detail = detail.str();
  return r;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(std::uint64_t seed) {
  return {
      cr1_example_reproduction(seed), cr2_empty_supporting_set(seed), cr3_bound_sharpness(seed),
      cr4_theorem_a(seed),            cr5_theorem1_equivalence(seed), cr6_maximin_audit(seed),
      cr7_game_oracle(seed),          cr8_quasilinear_suite(seed),    cr9_garp_degeneration(seed),
  };
}

int print_acceptance(std::ostream& out, const std::vector<CriterionResult>& results) {
  int failures = 0;
  for (const auto& r : results) {
    out << (r.passed ? "PASS" : "FAIL") << " criterion " << r.index << ": " << r.name << " ["
        << r.detail << "] (" << r.seconds << "s)\n";
    if (!r.passed) ++failures;
  }
  out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
      << "\n";
  return failures;
}

}  // namespace revpref
