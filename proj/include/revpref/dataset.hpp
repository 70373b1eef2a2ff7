#ifndef REVPREF_DATASET_HPP
#define REVPREF_DATASET_HPP

#include <cstddef>
#include <iosfwd>
#include <string>

#include "revpref/types.hpp"

namespace revpref {

/// A finite consumer-choice data set: T observations of strictly positive
/// price vectors p^t and nonnegative, nonzero bundles x^t, all of length L.
/// Wealth at t is the Walras expenditure p^t.x^t and is strictly positive.
class Dataset {
 public:
  Dataset() = default;

  /// Builds and validates. Throws InputError on any invariant breach.
  Dataset(Matrix prices, Matrix bundles);

  std::size_t T() const { return T_; }
  std::size_t L() const { return L_; }

  const Matrix& prices() const { return prices_; }
  const Matrix& bundles() const { return bundles_; }

  Vec price(std::size_t t) const;
  Vec bundle(std::size_t t) const;

  /// Walras wealth w^t = p^t.x^t.
  double wealth(std::size_t t) const;

  /// p^t.z for an arbitrary bundle z.
  double cost(std::size_t t, const Vec& z) const;

  /// Sub-dataset restricted to the given observation indices (with repetition
  /// allowed; used for the pairwise constructions).
  Dataset subset(const std::vector<std::size_t>& idx) const;

  /// Dataset extended by one observation.
  Dataset extended(const Vec& p, const Vec& x) const;

 private:
  std::size_t T_ = 0, L_ = 0;
  Matrix prices_, bundles_;
};

/// The 2-observation data set O^2_{st} (collapsed to one observation when
/// s == t; a duplicated row adds nothing to any relation).
Dataset pair_dataset(const Dataset& d, std::size_t s, std::size_t t);

/// Parses the CSV schema `p1,...,pL,x1,...,xL`, one observation per row,
/// '.' decimal separator. A header-only file yields an empty (T = 0) dataset.
Dataset load_csv(std::istream& in);
Dataset load_csv_file(const std::string& path);

void write_csv(std::ostream& out, const Dataset& d);

}  // namespace revpref

#endif
