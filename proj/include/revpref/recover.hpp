#ifndef REVPREF_RECOVER_HPP
#define REVPREF_RECOVER_HPP

#include <optional>
#include <string>

#include "revpref/dataset.hpp"
#include "revpref/types.hpp"

namespace revpref {

enum class SupportAxiom { WGARP, GARP };

/// One sign branch of the enumeration over p.(x - x^t): -1 below, 0 tie,
/// +1 above, per observation. The p^t-side comparisons are fixed by the
/// data and are not part of the branch.
struct PricePattern {
  std::vector<int> sign;
};

struct SupportResult {
  bool nonempty = false;
  std::optional<Vec> certificatePrice;  // normalized to sum 1
  std::optional<PricePattern> certificatePattern;
  std::size_t patternsChecked = 0;
};

/// Decides S(x) != {} by exhaustive enumeration of the 3^T sign patterns,
/// checking the extended axiom combinatorially per branch and branch
/// realizability by LP feasibility over strictly positive prices.
/// Throws PatternExplosion when 3^T exceeds the cap (default T <= 12).
SupportResult supporting_set_nonempty(const Dataset& d, const Vec& x,
                                      SupportAxiom axiom = SupportAxiom::WGARP,
                                      double tol = kDefaultTol,
                                      std::size_t maxObservations = 12);

/// Certificate replay: does appending (p, x) keep the axiom?
bool is_supporting_price(const Dataset& d, const Vec& x, const Vec& p,
                         SupportAxiom axiom = SupportAxiom::WGARP, double tol = kDefaultTol);

struct BoundMembership {
  std::string setName;
  Vec query, candidate;  // x and y of "y in SET(x)"
  bool member = false;
  /// For a negative RP / positive NRW verdict: a supporting price under
  /// which the required revelation fails. Absent when the verdict rests on
  /// exhausted patterns or an empty supporting set.
  std::optional<Vec> certificatePrice;
  std::size_t patternsChecked = 0;
  std::string note;
};

/// y in RP(x): the supporting set of y is nonempty and every supporting
/// price makes y directly dearer than x. An empty S(y) excludes y.
BoundMembership in_rp(const Dataset& d, const Vec& y, const Vec& x,
                      SupportAxiom axiom = SupportAxiom::WGARP, double tol = kDefaultTol,
                      std::size_t maxObservations = 12);

/// y in NRW(x): complement of the revealed-worse set of x.
BoundMembership in_nrw(const Dataset& d, const Vec& y, const Vec& x,
                       SupportAxiom axiom = SupportAxiom::WGARP, double tol = kDefaultTol,
                       std::size_t maxObservations = 12);

/// Robust bounds assembled from the pairwise (never empty) supporting sets:
/// RP^W(x) = union over s of the intersection over t of RP_st(x);
/// NRW^W(x) = intersection over s of the union over t of NRW_st(x).
/// Requires WGARP.
BoundMembership in_rp_robust(const Dataset& d, const Vec& y, const Vec& x,
                             double tol = kDefaultTol);
BoundMembership in_nrw_robust(const Dataset& d, const Vec& y, const Vec& x,
                              double tol = kDefaultTol);

}  // namespace revpref

#endif
