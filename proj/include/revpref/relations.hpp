#ifndef REVPREF_RELATIONS_HPP
#define REVPREF_RELATIONS_HPP

#include "revpref/dataset.hpp"
#include "revpref/types.hpp"

namespace revpref {

/// E[t][s] = p^t.x^s, strictly positive everywhere.
struct ExpenditureMatrix {
  Matrix E;
};

/// Direct revealed-preference relations and their transitive closures.
///
/// weakDirect[t][s]   : x^t is directly revealed preferred to x^s
///                      (p^t.x^t >= p^t.x^s, up to tol)
/// strictDirect[t][s] : the strict version (>)
/// weakClosure        : reflexive-transitive reachability of weakDirect
/// strictClosure[t][s]: some weak chain t -> ... -> s has a strict link
struct RelationMatrices {
  BoolMatrix weakDirect, strictDirect;
  BoolMatrix weakClosure, strictClosure;
  bool closuresFilled = false;
};

ExpenditureMatrix expenditure_matrix(const Dataset& d);

/// Fills the direct matrices from E; closures stay empty.
/// Comparison convention: weak iff E[t][t] >= E[t][s] - tol,
/// strict iff E[t][t] > E[t][s] + tol, so a boundary pair is weak both
/// ways and strict neither way.
RelationMatrices direct_relations(const Dataset& d, double tol = kDefaultTol);

/// Warshall closure; fills weakClosure/strictClosure.
RelationMatrices transitive_closure(RelationMatrices r);

}  // namespace revpref

#endif
