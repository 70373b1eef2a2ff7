#include "revpref/reference.hpp"

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"

namespace revpref::reference {

Matrix expenditure_matrix(const Dataset& d) {
  const std::size_t T = d.T(), L = d.L();
  Matrix E(T, T);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      double sum = 0.0;
      for (std::size_t l = 0; l < L; ++l) sum += d.prices()(t, l) * d.bundles()(s, l);
      E(t, s) = sum;
    }
  return E;
}

RelationMatrices transitive_closure(RelationMatrices r) {
  const std::size_t T = r.weakDirect.rows();
  BoolMatrix weak = r.weakDirect;
  for (std::size_t t = 0; t < T; ++t) weak.set(t, t, true);
  for (std::size_t k = 0; k < T; ++k)
    for (std::size_t i = 0; i < T; ++i) {
      if (!weak(i, k)) continue;
      for (std::size_t j = 0; j < T; ++j)
        if (weak(k, j)) weak.set(i, j, true);
    }

  BoolMatrix strictOut(T, T);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t a = 0; a < T; ++a) {
      if (!weak(t, a)) continue;
      for (std::size_t b = 0; b < T; ++b) {
        if (!r.strictDirect(a, b)) continue;
        for (std::size_t s = 0; s < T; ++s)
          if (weak(b, s)) strictOut.set(t, s, true);
      }
    }

  r.weakClosure = std::move(weak);
  r.strictClosure = std::move(strictOut);
  r.closuresFilled = true;
  return r;
}

PairwiseNumbers pairwise_numbers(const Dataset& d, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);
  const std::size_t T = d.T();
  PairwiseNumbers out{Matrix(T, T, 0.0), Matrix(T, T, 1.0)};
  for (std::size_t s = 0; s < T; ++s)
    for (std::size_t t = s + 1; t < T; ++t) {
      Dataset pd = pair_dataset(d, s, t);
      AfriatNumbers n = afriat_numbers(pd, tol);
      out.R(s, t) = n.U[0] - n.U[1];
      out.R(t, s) = n.U[1] - n.U[0];
      out.lambdaPair(s, t) = n.lambda[0];
      out.lambdaPair(t, s) = n.lambda[1];
    }
  return out;
}

}  // namespace revpref::reference
