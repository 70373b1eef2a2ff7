#ifndef REVPREF_AXIOMS_HPP
#define REVPREF_AXIOMS_HPP

#include <optional>
#include <string>
#include <vector>

#include "revpref/dataset.hpp"
#include "revpref/relations.hpp"

namespace revpref {

/// Pass/fail verdict for one axiom, with a replayable witness on failure.
/// For the pairwise axioms the witness is the pair (t, s); for the
/// transitive axioms it is the full violating cycle (t, ..., s), closed by
/// the offending direct link s -> t. Indices are 0-based.
struct AxiomReport {
  std::string axiom;
  bool holds = true;
  std::optional<std::vector<std::size_t>> witness;
  double slack = 0.0;  // magnitude of the violated inequality
};

AxiomReport check_warp(const Dataset& d, double tol = kDefaultTol);
AxiomReport check_wgarp(const Dataset& d, double tol = kDefaultTol);
AxiomReport check_sarp(const Dataset& d, double tol = kDefaultTol);
AxiomReport check_garp(const Dataset& d, double tol = kDefaultTol);
AxiomReport check_law_of_demand(const Dataset& d, double tol = kDefaultTol);
AxiomReport check_strong_law(const Dataset& d, double tol = kDefaultTol);

/// All six, in the fixed order warp, wgarp, sarp, garp, lod, slod.
std::vector<AxiomReport> check_all(const Dataset& d, double tol = kDefaultTol);

}  // namespace revpref

#endif
