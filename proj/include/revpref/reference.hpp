#ifndef REVPREF_REFERENCE_HPP
#define REVPREF_REFERENCE_HPP

#include "revpref/afriat.hpp"
#include "revpref/dataset.hpp"
#include "revpref/relations.hpp"

// Plain serial implementations of the parallel kernels. Kept for the
// equivalence tests (the production kernels must match them bit for bit)
// and as the baseline of the benchmark target.
namespace revpref::reference {

Matrix expenditure_matrix(const Dataset& d);

RelationMatrices transitive_closure(RelationMatrices r);

PairwiseNumbers pairwise_numbers(const Dataset& d, double tol = kDefaultTol);

}  // namespace revpref::reference

#endif
