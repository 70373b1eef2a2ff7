#ifndef REVPREF_ORACLES_HPP
#define REVPREF_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "revpref/dataset.hpp"
#include "revpref/relations.hpp"
#include "revpref/types.hpp"

// Independent brute-force verifiers backing the acceptance suite and the
// property tests. Nothing here calls the simplex/LP code paths it audits:
// games are certified by support enumeration over Gaussian-eliminated
// square systems seeded by a simplex-grid scan, shortest-path potentials by
// exhaustive simple-path enumeration, and feasibility questions by grids.
namespace revpref::oracle {

/// Gaussian elimination with partial pivoting; empty result when singular.
inline std::optional<Vec> solve_linear(std::vector<Vec> A, Vec b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(A[r][col]) > std::fabs(A[piv][col])) piv = r;
    if (std::fabs(A[piv][col]) < 1e-12) return std::nullopt;
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      double f = A[r][col] / A[col][col];
      if (f == 0.0) continue;
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  Vec x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

/// All compositions of k into n nonnegative parts, visited in fixed order.
inline void for_each_composition(std::size_t k, std::size_t n,
                                 const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> parts(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
    if (pos + 1 == n) {
      parts[pos] = left;
      fn(parts);
      return;
    }
    for (std::size_t v = 0; v <= left; ++v) {
      parts[pos] = v;
      rec(pos + 1, left - v);
    }
  };
  if (n > 0) rec(0, k);
}

/// max over the mu-grid of min over rows of (M mu)_s: a certified lower
/// bound of the game value (the column player maximizes).
inline double grid_game_lower_bound(const Matrix& M, std::size_t k) {
  double best = -std::numeric_limits<double>::infinity();
  const std::size_t nr = M.rows(), nc = M.cols();
  for_each_composition(k, nc, [&](const std::vector<std::size_t>& parts) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t s = 0; s < nr; ++s) {
      double v = 0.0;
      for (std::size_t t = 0; t < nc; ++t) v += M(s, t) * double(parts[t]);
      worst = std::min(worst, v / double(k));
    }
    best = std::max(best, worst);
  });
  return best;
}

struct GameOracleResult {
  double value = 0.0;
  bool certified = false;
  double gridLowerBound = 0.0;
};

/// Exact game value by enumeration of square support pairs: each candidate
/// support yields a linear system for the mixed strategies and the value;
/// a candidate whose strategies are nonnegative and whose value passes the
/// global equilibrium inequalities certifies the value. A square kernel
/// with these properties always exists, so the enumeration cannot miss.
inline GameOracleResult brute_force_game_value(const Matrix& M, std::size_t gridK = 10) {
  GameOracleResult res;
  res.gridLowerBound = grid_game_lower_bound(M, gridK);
  const std::size_t nr = M.rows(), nc = M.cols();
  const double slack = 1e-8;

  for (std::size_t m = 1; m <= std::min(nr, nc); ++m) {
    for (std::uint32_t rowsMask = 0; rowsMask < (1u << nr); ++rowsMask) {
      if (std::size_t(__builtin_popcount(rowsMask)) != m) continue;
      std::vector<std::size_t> S;
      for (std::size_t s = 0; s < nr; ++s)
        if (rowsMask & (1u << s)) S.push_back(s);
      for (std::uint32_t colsMask = 0; colsMask < (1u << nc); ++colsMask) {
        if (std::size_t(__builtin_popcount(colsMask)) != m) continue;
        std::vector<std::size_t> C;
        for (std::size_t t = 0; t < nc; ++t)
          if (colsMask & (1u << t)) C.push_back(t);

        // mu over C and v: (M mu)_s = v on S, sum mu = 1
        std::vector<Vec> A(m + 1, Vec(m + 1, 0.0));
        Vec b(m + 1, 0.0);
        for (std::size_t i = 0; i < m; ++i) {
          for (std::size_t j = 0; j < m; ++j) A[i][j] = M(S[i], C[j]);
          A[i][m] = -1.0;
        }
        for (std::size_t j = 0; j < m; ++j) A[m][j] = 1.0;
        b[m] = 1.0;
        auto muSol = solve_linear(A, b);
        if (!muSol) continue;

        // lambda over S and v: (lambda' M)_t = v on C, sum lambda = 1
        std::vector<Vec> A2(m + 1, Vec(m + 1, 0.0));
        Vec b2(m + 1, 0.0);
        for (std::size_t j = 0; j < m; ++j) {
          for (std::size_t i = 0; i < m; ++i) A2[j][i] = M(S[i], C[j]);
          A2[j][m] = -1.0;
        }
        for (std::size_t i = 0; i < m; ++i) A2[m][i] = 1.0;
        b2[m] = 1.0;
        auto laSol = solve_linear(A2, b2);
        if (!laSol) continue;

        double vMu = (*muSol)[m], vLa = (*laSol)[m];
        if (std::fabs(vMu - vLa) > slack) continue;
        double v = 0.5 * (vMu + vLa);

        bool ok = true;
        for (std::size_t j = 0; j < m && ok; ++j)
          if ((*muSol)[j] < -1e-9) ok = false;
        for (std::size_t i = 0; i < m && ok; ++i)
          if ((*laSol)[i] < -1e-9) ok = false;
        if (!ok) continue;

        Vec mu(nc, 0.0), la(nr, 0.0);
        for (std::size_t j = 0; j < m; ++j) mu[C[j]] = std::max(0.0, (*muSol)[j]);
        for (std::size_t i = 0; i < m; ++i) la[S[i]] = std::max(0.0, (*laSol)[i]);
        for (std::size_t s = 0; s < nr && ok; ++s) {
          double row = 0.0;
          for (std::size_t t = 0; t < nc; ++t) row += M(s, t) * mu[t];
          if (row < v - slack) ok = false;  // column player guarantees v
        }
        for (std::size_t t = 0; t < nc && ok; ++t) {
          double col = 0.0;
          for (std::size_t s = 0; s < nr; ++s) col += la[s] * M(s, t);
          if (col > v + slack) ok = false;  // row player caps v
        }
        if (!ok) continue;

        res.value = v;
        res.certified = true;
        return res;
      }
    }
  }
  res.value = res.gridLowerBound;  // uncertified fallback
  return res;
}

/// Exhaustive minimum over simple paths ending at each node of the edge
/// weights c(j -> k) = p^j(x^k - x^j); the trivial path contributes 0.
inline Vec brute_force_path_potentials(const Dataset& d) {
  const std::size_t T = d.T();
  const Matrix E = expenditure_matrix(d).E;
  Vec U(T, 0.0);
  std::vector<char> used(T, 0);
  std::function<void(std::size_t, double)> rec = [&](std::size_t last, double cost) {
    U[last] = std::min(U[last], cost);
    for (std::size_t nxt = 0; nxt < T; ++nxt) {
      if (used[nxt]) continue;
      used[nxt] = 1;
      rec(nxt, cost + E(last, nxt) - E(last, last));
      used[nxt] = 0;
    }
  };
  for (std::size_t start = 0; start < T; ++start) {
    used[start] = 1;
    rec(start, 0.0);
    used[start] = 0;
  }
  return U;
}

/// Grid search over the lambda simplex (scaled to sum T) for the constant-
/// multiplier system lambda^t p^t(x^t-x^s) + lambda^s p^s(x^s-x^t) <= eps.
inline bool lambda_grid_feasible(const Dataset& d, std::size_t k, double eps = 1e-9) {
  const std::size_t T = d.T();
  if (T == 0) return true;
  const Matrix E = expenditure_matrix(d).E;
  bool found = false;
  for_each_composition(k, T, [&](const std::vector<std::size_t>& parts) {
    if (found) return;
    for (std::size_t i = 0; i < T; ++i)
      if (parts[i] == 0) return;  // strict positivity
    Vec lam(T);
    for (std::size_t i = 0; i < T; ++i) lam[i] = double(T) * double(parts[i]) / double(k);
    for (std::size_t t = 0; t < T; ++t)
      for (std::size_t s = t + 1; s < T; ++s) {
        double v = lam[t] * (E(t, t) - E(t, s)) + lam[s] * (E(s, s) - E(s, t));
        if (v > eps) return;
      }
    found = true;
  });
  return found;
}

/// DFS reachability over a boolean relation (closure oracle).
inline bool dfs_reachable(const BoolMatrix& rel, std::size_t from, std::size_t to) {
  const std::size_t n = rel.rows();
  if (from == to) return true;
  std::vector<char> seen(n, 0);
  std::vector<std::size_t> stack{from};
  seen[from] = 1;
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v) {
      if (!rel(u, v) || seen[v]) continue;
      if (v == to) return true;
      seen[v] = 1;
      stack.push_back(v);
    }
  }
  return false;
}

}  // namespace revpref::oracle

#endif
