#ifndef REVPREF_COUNTERFACTUAL_HPP
#define REVPREF_COUNTERFACTUAL_HPP

#include <optional>
#include <string>

#include "revpref/dataset.hpp"
#include "revpref/types.hpp"

namespace revpref {

/// Membership of a wealth-normalized bundle in the W-demand set D(pNew):
/// the extension (pNew, xNew) keeps WGARP and pNew.xNew = 1.
struct WDemandReport {
  bool member = false;
  std::string violated;  // empty when member
  std::optional<std::size_t> violatedObservation;
  double margin = 0.0;
};

/// Requires pNew.xNew = 1 within tol (throws InputError otherwise).
WDemandReport in_wdemand(const Dataset& d, const Vec& pNew, const Vec& xNew,
                         double tol = kDefaultTol);

/// Per-coordinate bounds of the W-demand set on the budget face pNew.x = 1,
/// from 2L linear programs over the demand conditions; the affordability
/// split of the observed bundles is fixed by the data once wealth is
/// normalized, so a single branch is exact.
struct DemandBox {
  bool feasible = false;
  Vec lo, hi;
  std::vector<Vec> vertices;  // the 2L coordinate-extremal bundles
};

DemandBox wdemand_box(const Dataset& d, const Vec& pNew, double tol = kDefaultTol);

/// One hypothetical observation; a slot lists the finite candidates it may
/// take (grids over prices and/or bundles are built by the caller).
struct SlotCandidate {
  Vec price, bundle;
};

struct CounterfactualSlot {
  std::vector<SlotCandidate> candidates;
};

struct CounterfactualQuery {
  Dataset base;
  std::vector<CounterfactualSlot> slots;
};

/// Feasibility certificate for the binary-variable system
///   R(t,s) in (-1,1), R(t,s) = -R(s,t), B(t,s) in {0,1},
///   R(t,s) < B(t,s),  B(t,s) - 1 <= R(t,s),
///   p^t(x^t - x^s) < B(t,s) A^t,  (B(t,s) - 1) A^s <= p^s(x^t - x^s).
struct MilpAssignment {
  bool feasible = false;
  Matrix R;
  BoolMatrix B;
  Vec bigM;                              // A^t = p^t x^t + max_s p^t x^s + 1
  std::vector<std::size_t> chosenCandidates;  // one index per slot
};

/// Decides feasibility by exhaustive search over the binary variables with
/// skew-symmetry pruning (the joint choice per unordered pair has three live
/// branches) and interval propagation for R, over every combination of slot
/// candidates. Throws PatternExplosion past the combination cap.
MilpAssignment milp_feasible(const CounterfactualQuery& q, double tol = kDefaultTol,
                             std::size_t comboCap = 1u << 20);

/// Replays an assignment against the four inequality families.
bool validate_milp(const MilpAssignment& a, const Dataset& combined, double tol = kDefaultTol);

}  // namespace revpref

#endif
