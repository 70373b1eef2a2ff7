#include "revpref/relations.hpp"

namespace revpref {

ExpenditureMatrix expenditure_matrix(const Dataset& d) {
  const std::size_t T = d.T(), L = d.L();
  Matrix E(T, T);
#pragma omp parallel for collapse(2) if (T > 32)
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      double sum = 0.0;
      for (std::size_t l = 0; l < L; ++l) sum += d.prices()(t, l) * d.bundles()(s, l);
      E(t, s) = sum;
    }
  return {std::move(E)};
}

RelationMatrices direct_relations(const Dataset& d, double tol) {
  const std::size_t T = d.T();
  Matrix E = expenditure_matrix(d).E;
  RelationMatrices r;
  r.weakDirect = BoolMatrix(T, T);
  r.strictDirect = BoolMatrix(T, T);
  for (std::size_t t = 0; t < T; ++t) {
    double own = E(t, t);
    for (std::size_t s = 0; s < T; ++s) {
      r.weakDirect.set(t, s, own >= E(t, s) - tol);
      r.strictDirect.set(t, s, t != s && own > E(t, s) + tol);
    }
  }
  return r;
}

RelationMatrices transitive_closure(RelationMatrices r) {
  const std::size_t T = r.weakDirect.rows();
  BoolMatrix weak = r.weakDirect;
  for (std::size_t t = 0; t < T; ++t) weak.set(t, t, true);

  // Warshall; the row loop for a fixed pivot k is data parallel.
  for (std::size_t k = 0; k < T; ++k) {
#pragma omp parallel for if (T > 64)
    for (std::size_t i = 0; i < T; ++i) {
      if (!weak(i, k)) continue;
      for (std::size_t j = 0; j < T; ++j)
        if (weak(k, j)) weak.set(i, j, true);
    }
  }

  // strictClosure = weakClosure o strictDirect o weakClosure: a weak chain
  // from t to s containing at least one strict link. Two boolean products.
  BoolMatrix reach(T, T);  // reach[t][b]: weak chain to some a, then a strict step to b
#pragma omp parallel for if (T > 64)
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t a = 0; a < T; ++a) {
      if (!weak(t, a)) continue;
      for (std::size_t b = 0; b < T; ++b)
        if (r.strictDirect(a, b)) reach.set(t, b, true);
    }
  BoolMatrix strictOut(T, T);
#pragma omp parallel for if (T > 64)
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t b = 0; b < T; ++b) {
      if (!reach(t, b)) continue;
      for (std::size_t s = 0; s < T; ++s)
        if (weak(b, s)) strictOut.set(t, s, true);
    }

  r.weakClosure = std::move(weak);
  r.strictClosure = std::move(strictOut);
  r.closuresFilled = true;
  return r;
}

}  // namespace revpref
