#include "revpref/afriat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"
#include "revpref/relations.hpp"

namespace revpref {

namespace {

// The layered sweep. Processes the revealed-preference order from its
// maximal elements downward: each round picks a maximal element m of the
// unprocessed set I, forms its indifference class E (everything in I that is
// revealed preferred to x^m), and assigns the whole class one (U, lambda):
//   U_E      = min over i in E, j processed of
//                U^j + lambda^j p^j(x^i - x^j) - eps g(x^i - x^j)
//   lambda_E = max(1, max over i in E, j processed of
//                (U^j - U_E + eps g(x^j - x^i)) / p^i(x^j - x^i))
// The first class gets U = lambda = 1. The denominator is strictly positive
// because j left I in an earlier round, so x^i is not revealed preferred to
// x^j and in particular p^i x^i < p^i x^j.
AfriatNumbers sweep(const Dataset& d, const RelationMatrices& rel, double eps,
                    const PenaltyFn& g) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  AfriatNumbers out;
  out.U.assign(T, 1.0);
  out.lambda.assign(T, 1.0);

  std::vector<char> inI(T, 1);
  std::vector<std::size_t> processed;
  std::size_t remaining = T;

  while (remaining > 0) {
    // smallest-index maximal element of I
    std::size_t m = T;
    for (std::size_t cand = 0; cand < T && m == T; ++cand) {
      if (!inI[cand]) continue;
      bool maximal = true;
      for (std::size_t i = 0; i < T && maximal; ++i)
        if (inI[i] && rel.weakClosure(i, cand) && !rel.weakClosure(cand, i)) maximal = false;
      if (maximal) m = cand;
    }

    std::vector<std::size_t> cls;
    for (std::size_t i = 0; i < T; ++i)
      if (inI[i] && rel.weakClosure(i, m)) cls.push_back(i);

    double Ue = 1.0, le = 1.0;
    if (!processed.empty()) {
      Ue = std::numeric_limits<double>::infinity();
      for (std::size_t i : cls)
        for (std::size_t j : processed) {
          double pen = eps > 0.0 ? eps * g(sub(d.bundle(i), d.bundle(j))) : 0.0;
          Ue = std::min(Ue, out.U[j] + out.lambda[j] * (E(j, i) - E(j, j)) - pen);
        }
      le = 1.0;
      for (std::size_t i : cls)
        for (std::size_t j : processed) {
          double pen = eps > 0.0 ? eps * g(sub(d.bundle(j), d.bundle(i))) : 0.0;
          le = std::max(le, (out.U[j] - Ue + pen) / (E(i, j) - E(i, i)));
        }
    }
    for (std::size_t i : cls) {
      out.U[i] = Ue;
      out.lambda[i] = le;
      inI[i] = 0;
    }
    processed.insert(processed.end(), cls.begin(), cls.end());
    remaining -= cls.size();
  }
  return out;
}

}  // namespace

AfriatNumbers afriat_numbers(const Dataset& d, double tol) {
  auto garp = check_garp(d, tol);
  if (!garp.holds) throw GarpViolation(*garp.witness);
  auto rel = transitive_closure(direct_relations(d, tol));
  return sweep(d, rel, 0.0, nullptr);
}

AfriatNumbers strict_afriat_numbers(const Dataset& d, double eps, const PenaltyFn& g, double tol) {
  auto sarp = check_sarp(d, tol);
  if (!sarp.holds) throw SarpViolation(*sarp.witness);
  if (eps <= 0.0) {
    double maxExp = 0.0;
    auto E = expenditure_matrix(d).E;
    for (double v : E.data()) maxExp = std::max(maxExp, v);
    eps = 1e-6 * std::max(1.0, maxExp);
  }
  PenaltyFn pen = g ? g : PenaltyFn(&squared_norm);
  auto rel = transitive_closure(direct_relations(d, tol));
  return sweep(d, rel, eps, pen);
}

Vec varian_numbers(const Dataset& d, double tol) { return afriat_numbers(d, tol).U; }

PairwiseNumbers pairwise_numbers(const Dataset& d, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);

  const std::size_t T = d.T();
  PairwiseNumbers out{Matrix(T, T, 0.0), Matrix(T, T, 1.0)};

  // Unordered pairs are independent; flattened loop for the parallel sweep.
  const std::size_t nPairs = T * (T + 1) / 2;
#pragma omp parallel for schedule(dynamic) if (nPairs > 16)
  for (std::size_t k = 0; k < nPairs; ++k) {
    // unflatten k -> (s, t) with s <= t
    std::size_t s = 0, acc = 0;
    while (acc + (T - s) <= k) acc += (T - s++);
    std::size_t t = s + (k - acc);
    if (s == t) continue;  // diagonal: R = 0, lambda = 1

    Dataset pd = pair_dataset(d, s, t);  // observation 0 = s, 1 = t
    auto rel = transitive_closure(direct_relations(pd, tol));
    AfriatNumbers n = sweep(pd, rel, 0.0, nullptr);
    out.R(s, t) = n.U[0] - n.U[1];
    out.R(t, s) = n.U[1] - n.U[0];
    out.lambdaPair(s, t) = n.lambda[0];
    out.lambdaPair(t, s) = n.lambda[1];
  }
  return out;
}

WNumbers w_numbers_raw(const Dataset& d) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  WNumbers out{Matrix(T, T, 0.0)};
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s)
      out.W(t, s) = (E(t, t) - E(t, s)) - (E(s, s) - E(s, t));
  return out;
}

WNumbers w_numbers(const Dataset& d, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);
  return w_numbers_raw(d);
}

double afriat_utility(const AfriatNumbers& n, const Dataset& d, const Vec& z) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t t = 0; t < d.T(); ++t)
    best = std::min(best, n.U[t] + n.lambda[t] * (d.cost(t, z) - d.wealth(t)));
  return best;
}

Matrix afriat_residuals(const AfriatNumbers& n, const Dataset& d) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  Matrix r(T, T, 0.0);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s)
      r(t, s) = n.U[t] - n.U[s] - n.lambda[t] * (E(t, t) - E(t, s));
  return r;
}

Matrix pairwise_residuals(const PairwiseNumbers& n, const Dataset& d) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  Matrix r(T, T, 0.0);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s)
      r(t, s) = n.R(t, s) - n.lambdaPair(t, s) * (E(t, t) - E(t, s));
  return r;
}

bool validate_afriat(const AfriatNumbers& n, const Dataset& d, double tol) {
  if (n.U.size() != d.T() || n.lambda.size() != d.T()) return false;
  for (double l : n.lambda)
    if (!(l > 0.0)) return false;
  double scale = 1.0;
  for (std::size_t t = 0; t < d.T(); ++t)
    scale = std::max({scale, std::fabs(n.U[t]), n.lambda[t]});
  Matrix r = afriat_residuals(n, d);
  for (double v : r.data())
    if (v < -tol * scale) return false;
  return true;
}

bool validate_strict_afriat(const AfriatNumbers& n, const Dataset& d, double tol) {
  if (!validate_afriat(n, d, 1e2 * tol)) return false;
  for (std::size_t t = 0; t < d.T(); ++t)
    for (std::size_t s = 0; s < d.T(); ++s) {
      if (t == s) continue;
      double resid = n.U[t] - n.U[s] - n.lambda[t] * (d.wealth(t) - d.cost(t, d.bundle(s)));
      if (vec_equal(d.bundle(t), d.bundle(s), tol)) {
        if (std::fabs(n.U[t] - n.U[s]) > tol) return false;
      } else if (!(resid > 0.0)) {
        return false;
      }
    }
  return true;
}

bool validate_pairwise(const PairwiseNumbers& n, const Dataset& d, double tol) {
  const std::size_t T = d.T();
  if (n.R.rows() != T || n.lambdaPair.rows() != T) return false;
  double scale = 1.0;
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (!(n.lambdaPair(t, s) > 0.0)) return false;
      if (std::fabs(n.R(t, s) + n.R(s, t)) > tol) return false;
      scale = std::max({scale, std::fabs(n.R(t, s)), n.lambdaPair(t, s)});
    }
  Matrix r = pairwise_residuals(n, d);
  for (double v : r.data())
    if (v < -tol * scale) return false;
  return true;
}

bool validate_w(const WNumbers& n, const Dataset& d, double tol) {
  const std::size_t T = d.T();
  if (n.W.rows() != T || n.W.cols() != T) return false;
  const Matrix E = expenditure_matrix(d).E;
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (std::fabs(n.W(t, s) + n.W(s, t)) > tol) return false;
      double gap = E(t, t) - E(t, s);  // p^t(x^t - x^s)
      if (gap >= 0.0 && n.W(t, s) < -tol) return false;
      if (gap > tol && !(n.W(t, s) > 0.0)) return false;
    }
  return true;
}

}  // namespace revpref
