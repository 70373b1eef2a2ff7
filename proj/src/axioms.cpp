#include "revpref/axioms.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace revpref {

namespace {

// Shortest weakDirect path t -> ... -> s by BFS, for cycle witnesses.
std::vector<std::size_t> weak_path(const RelationMatrices& r, std::size_t t, std::size_t s) {
  const std::size_t T = r.weakDirect.rows();
  std::vector<std::size_t> pred(T, T);
  std::deque<std::size_t> queue{t};
  std::vector<char> seen(T, 0);
  seen[t] = 1;
  while (!queue.empty()) {
    std::size_t u = queue.front();
    queue.pop_front();
    if (u == s) break;
    for (std::size_t v = 0; v < T; ++v) {
      if (!seen[v] && r.weakDirect(u, v)) {
        seen[v] = 1;
        pred[v] = u;
        queue.push_back(v);
      }
    }
  }
  std::vector<std::size_t> path;
  for (std::size_t cur = s; cur != t; cur = pred[cur]) path.push_back(cur);
  path.push_back(t);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

AxiomReport check_warp(const Dataset& d, double tol) {
  AxiomReport rep{"WARP"};
  auto E = expenditure_matrix(d).E;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T && rep.holds; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (s == t) continue;
      double mt = E(t, t) - E(t, s);  // x^t >= x^s margin
      double ms = E(s, s) - E(s, t);
      if (mt >= -tol && ms >= -tol && !vec_equal(d.bundle(t), d.bundle(s), tol)) {
        rep.holds = false;
        rep.witness = {t, s};
        rep.slack = std::min(mt, ms);
        break;
      }
    }
  return rep;
}

AxiomReport check_wgarp(const Dataset& d, double tol) {
  AxiomReport rep{"WGARP"};
  auto E = expenditure_matrix(d).E;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T && rep.holds; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (s == t) continue;
      bool weak_ts = E(t, t) >= E(t, s) - tol;
      double strict_margin = E(s, s) - E(s, t);
      if (weak_ts && strict_margin > tol) {
        rep.holds = false;
        rep.witness = {t, s};
        rep.slack = strict_margin;
        break;
      }
    }
  return rep;
}

AxiomReport check_sarp(const Dataset& d, double tol) {
  AxiomReport rep{"SARP"};
  auto r = transitive_closure(direct_relations(d, tol));
  auto E = expenditure_matrix(d).E;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T && rep.holds; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (s == t) continue;
      if (r.weakClosure(t, s) && r.weakDirect(s, t) &&
          !vec_equal(d.bundle(t), d.bundle(s), tol)) {
        rep.holds = false;
        rep.witness = weak_path(r, t, s);
        rep.slack = E(s, s) - E(s, t);
        break;
      }
    }
  return rep;
}

AxiomReport check_garp(const Dataset& d, double tol) {
  AxiomReport rep{"GARP"};
  auto r = transitive_closure(direct_relations(d, tol));
  auto E = expenditure_matrix(d).E;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T && rep.holds; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      if (s == t) continue;
      if (r.weakClosure(t, s) && r.strictDirect(s, t)) {
        rep.holds = false;
        rep.witness = weak_path(r, t, s);
        rep.slack = E(s, s) - E(s, t);
        break;
      }
    }
  return rep;
}

AxiomReport check_law_of_demand(const Dataset& d, double tol) {
  AxiomReport rep{"law of demand"};
  auto E = expenditure_matrix(d).E;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T && rep.holds; ++t)
    for (std::size_t s = t + 1; s < T; ++s) {
      // (p^t - p^s).(x^t - x^s) expands over expenditures
      double v = E(t, t) - E(t, s) - E(s, t) + E(s, s);
      if (v > tol) {
        rep.holds = false;
        rep.witness = {t, s};
        rep.slack = v;
        break;
      }
    }
  return rep;
}

AxiomReport check_strong_law(const Dataset& d, double tol) {
  AxiomReport rep{"strong law of demand"};
  const std::size_t T = d.T();
  if (T < 2) return rep;
  auto E = expenditure_matrix(d).E;

  // Edge weight c(t -> s) = p^t(x^s - x^t); a cycle with sum < -tol is a
  // strong-law violation. Bellman-Ford from a virtual all-zero source.
  Vec dist(T, 0.0);
  std::vector<std::size_t> pred(T, T);
  std::size_t lastUpdated = T;
  auto relax_round = [&]() {
    bool changed = false;
    for (std::size_t t = 0; t < T; ++t)
      for (std::size_t s = 0; s < T; ++s) {
        if (s == t) continue;
        double w = E(t, s) - E(t, t);
        if (dist[t] + w < dist[s] - tol / (2.0 * double(T))) {
          dist[s] = dist[t] + w;
          pred[s] = t;
          lastUpdated = s;
          changed = true;
        }
      }
    return changed;
  };
  bool changed = true;
  for (std::size_t round = 0; round < T - 1 && changed; ++round) changed = relax_round();
  if (!changed || !relax_round()) return rep;

  // A relaxation still fires: the predecessor chain of the node updated in
  // the extra round leads into the negative cycle within T steps.
  std::size_t probe = lastUpdated;
  for (std::size_t i = 0; i < T; ++i) probe = pred[probe];
  std::vector<std::size_t> cycle;
  for (std::size_t cur = probe;; cur = pred[cur]) {
    cycle.push_back(cur);
    if (cur == probe && cycle.size() > 1) break;
  }
  cycle.pop_back();
  std::reverse(cycle.begin(), cycle.end());

  double total = 0.0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    std::size_t a = cycle[i], b = cycle[(i + 1) % cycle.size()];
    total += E(a, a) - E(a, b);  // p^a(x^a - x^b)
  }
  rep.holds = false;
  rep.witness = cycle;
  rep.slack = total;
  return rep;
}

std::vector<AxiomReport> check_all(const Dataset& d, double tol) {
  return {check_warp(d, tol),         check_wgarp(d, tol),      check_sarp(d, tol),
          check_garp(d, tol),         check_law_of_demand(d, tol), check_strong_law(d, tol)};
}

}  // namespace revpref
