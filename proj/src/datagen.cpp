#include "revpref/datagen.hpp"

#include <cmath>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"

namespace revpref {

Dataset random_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L) {
  std::uniform_real_distribution<double> price(0.2, 2.0);
  std::uniform_real_distribution<double> qty(0.05, 2.0);
  Matrix p(T, L), x(T, L);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t l = 0; l < L; ++l) {
      p(t, l) = price(rng);
      x(t, l) = qty(rng);
    }
  return Dataset(std::move(p), std::move(x));
}

namespace {

template <typename Check>
Dataset rejection_sample(std::mt19937_64& rng, std::size_t T, std::size_t L, std::size_t maxTries,
                         Check check, const char* what) {
  for (std::size_t i = 0; i < maxTries; ++i) {
    Dataset d = random_dataset(rng, T, L);
    if (check(d)) return d;
  }
  throw SolverError(std::string("rejection sampling for ") + what + " exhausted");
}

}  // namespace

Dataset random_wgarp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                             std::size_t maxTries) {
  return rejection_sample(rng, T, L, maxTries,
                          [](const Dataset& d) { return check_wgarp(d).holds; }, "WGARP");
}

Dataset random_warp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                            std::size_t maxTries) {
  return rejection_sample(rng, T, L, maxTries,
                          [](const Dataset& d) { return check_warp(d).holds; }, "WARP");
}

Dataset random_garp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                            std::size_t maxTries) {
  return rejection_sample(rng, T, L, maxTries,
                          [](const Dataset& d) { return check_garp(d).holds; }, "GARP");
}

Vec random_budget_bundle(std::mt19937_64& rng, const Vec& p, double w, bool onBoundary) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const std::size_t L = p.size();
  Vec share(L);
  double sum = 0.0;
  for (std::size_t l = 0; l < L; ++l) {
    share[l] = -std::log(1.0 - unif(rng));
    sum += share[l];
  }
  double depth = onBoundary ? 1.0 : unif(rng);
  Vec z(L);
  for (std::size_t l = 0; l < L; ++l) z[l] = depth * w * share[l] / (sum * p[l]);
  return z;
}

}  // namespace revpref
