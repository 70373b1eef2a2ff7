#ifndef REVPREF_DATAGEN_HPP
#define REVPREF_DATAGEN_HPP

#include <cstdint>
#include <random>

#include "revpref/dataset.hpp"

namespace revpref {

/// Uniform random dataset: prices in [0.2, 2], bundles in [0.05, 2].
/// Continuous draws, so ties have probability zero.
Dataset random_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L);

/// Rejection sampling until the predicate-named axiom holds.
Dataset random_wgarp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                             std::size_t maxTries = 100000);
Dataset random_warp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                            std::size_t maxTries = 100000);
Dataset random_garp_dataset(std::mt19937_64& rng, std::size_t T, std::size_t L,
                            std::size_t maxTries = 100000);

/// Random bundle in the budget set {z >= 0 : p.z <= w}; boundary included.
Vec random_budget_bundle(std::mt19937_64& rng, const Vec& p, double w, bool onBoundary);

}  // namespace revpref

#endif
