#include "revpref/counterfactual.hpp"

#include <algorithm>
#include <cmath>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"
#include "revpref/relations.hpp"
#include "revpref/simplex.hpp"

namespace revpref {

namespace {
constexpr double kStrictMargin = 1e-7;
}

WDemandReport in_wdemand(const Dataset& d, const Vec& pNew, const Vec& xNew, double tol) {
  if (pNew.size() != d.L() || xNew.size() != d.L())
    throw InputError("new price/bundle has wrong length");
  for (double p : pNew)
    if (!(p > 0.0)) throw InputError("new prices must be strictly positive");
  double wNew = dot(pNew, xNew);
  if (std::fabs(wNew - 1.0) > std::max(tol, 1e-7))
    throw InputError("new bundle must cost exactly 1 at the new prices (got " +
                     std::to_string(wNew) + "); normalize the query first");

  WDemandReport rep;
  auto baseW = check_wgarp(d, tol);
  if (!baseW.holds) {
    rep.member = false;
    rep.violated = "base data set fails WGARP";
    return rep;
  }
  for (std::size_t t = 0; t < d.T(); ++t) {
    double affordNew = d.cost(t, xNew) - d.wealth(t);  // p^t xNew - p^t x^t
    double affordOld = dot(pNew, d.bundle(t));         // pNew x^t vs 1
    if (affordOld <= 1.0 + tol && affordNew < -tol) {
      rep.member = false;
      rep.violated = "observed bundle is affordable at the new prices but the new bundle is "
                     "cheaper than the observed choice at its prices";
      rep.violatedObservation = t;
      rep.margin = -affordNew;
      return rep;
    }
    if (affordOld < 1.0 - tol && affordNew <= tol) {
      rep.member = false;
      rep.violated = "observed bundle is strictly cheaper at the new prices but the new bundle "
                     "is weakly cheaper than the observed choice at its prices";
      rep.violatedObservation = t;
      rep.margin = -affordNew;
      return rep;
    }
  }
  rep.member = true;
  return rep;
}

DemandBox wdemand_box(const Dataset& d, const Vec& pNew, double tol) {
  if (pNew.size() != d.L() && d.T() > 0) throw InputError("new price has wrong length");
  for (double p : pNew)
    if (!(p > 0.0)) throw InputError("new prices must be strictly positive");
  const std::size_t L = pNew.size();

  DemandBox box;
  if (d.T() > 0 && !check_wgarp(d, tol).holds) return box;  // empty demand set

  LpProblem lp;
  lp.c.assign(L, 0.0);
  lp.add_row(pNew, RowSense::EQ, 1.0);
  for (std::size_t t = 0; t < d.T(); ++t) {
    double affordOld = dot(pNew, d.bundle(t));
    if (affordOld < 1.0 - tol)
      lp.add_row(d.price(t), RowSense::GE,
                 d.wealth(t) + kStrictMargin * std::max(1.0, d.wealth(t)));
    else if (affordOld <= 1.0 + tol)
      lp.add_row(d.price(t), RowSense::GE, d.wealth(t));
  }

  if (!lp_feasible(lp)) return box;
  box.feasible = true;
  box.lo.assign(L, 0.0);
  box.hi.assign(L, 0.0);
  for (std::size_t l = 0; l < L; ++l) {
    LpProblem q = lp;
    q.c[l] = 1.0;
    LpResult mn = solve_lp(q);
    q.c[l] = -1.0;
    LpResult mx = solve_lp(q);
    if (mn.status != LpStatus::Optimal || mx.status != LpStatus::Optimal)
      throw SolverError("demand box LP did not solve");
    box.lo[l] = mn.objective;
    box.hi[l] = -mx.objective;
    box.vertices.push_back(mn.x);
    box.vertices.push_back(mx.x);
  }
  return box;
}

namespace {

// Valid joint (B(t,s), B(s,t)) branches for one unordered pair; (0,0) dies
// by skew-symmetry (it would need R(t,s) and -R(t,s) both negative).
struct PairChoice {
  int bts, bst;
  double rts;  // R(t,s); R(s,t) = -R(t,s)
};

bool pair_choices(const Dataset& d, std::size_t t, std::size_t s, double tol,
                  std::vector<PairChoice>& out) {
  out.clear();
  double gainS = d.cost(s, d.bundle(t)) - d.wealth(s);  // p^s(x^t - x^s)
  double gainT = d.cost(t, d.bundle(s)) - d.wealth(t);  // p^t(x^s - x^t)
  if (gainS >= -tol && gainT >= -tol) out.push_back({1, 1, 0.0});
  if (gainS > tol) out.push_back({1, 0, 0.5});
  if (gainT > tol) out.push_back({0, 1, -0.5});
  return !out.empty();
}

MilpAssignment try_combined(const Dataset& data, double tol) {
  const std::size_t T = data.T();
  MilpAssignment a;
  a.R = Matrix(T, T, 0.0);
  a.B = BoolMatrix(T, T);
  a.bigM.assign(T, 1.0);
  for (std::size_t t = 0; t < T; ++t) {
    double maxCost = 0.0;
    for (std::size_t s = 0; s < T; ++s) maxCost = std::max(maxCost, data.cost(t, data.bundle(s)));
    a.bigM[t] = data.wealth(t) + maxCost + 1.0;
    a.B.set(t, t, true);  // forced: R(t,t) = 0 < B(t,t)
  }
  std::vector<PairChoice> choices;
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = t + 1; s < T; ++s) {
      if (!pair_choices(data, t, s, tol, choices)) return a;  // infeasible
      const PairChoice& c = choices.front();  // deterministic: first valid branch
      a.B.set(t, s, c.bts == 1);
      a.B.set(s, t, c.bst == 1);
      a.R(t, s) = c.rts;
      a.R(s, t) = -c.rts;
    }
  a.feasible = true;
  return a;
}

}  // namespace

bool validate_milp(const MilpAssignment& a, const Dataset& d, double tol) {
  if (!a.feasible) return false;
  const std::size_t T = d.T();
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      double R = a.R(t, s);
      double B = a.B(t, s) ? 1.0 : 0.0;
      if (std::fabs(R + a.R(s, t)) > tol) return false;
      if (!(R > -1.0 + tol && R < 1.0 - tol)) return false;
      if (!(R < B - tol)) return false;
      if (!(B - 1.0 <= R + tol)) return false;
      double lhs = d.wealth(t) - d.cost(t, d.bundle(s));  // p^t(x^t - x^s)
      if (!(lhs < B * a.bigM[t] - tol)) return false;
      double rhs = d.cost(s, d.bundle(t)) - d.wealth(s);  // p^s(x^t - x^s)
      if (!((B - 1.0) * a.bigM[s] <= rhs + tol)) return false;
    }
  return true;
}

MilpAssignment milp_feasible(const CounterfactualQuery& q, double tol, std::size_t comboCap) {
  std::size_t nCombos = 1;
  for (const auto& slot : q.slots) {
    if (slot.candidates.empty()) throw InputError("slot without candidates");
    if (nCombos > comboCap / slot.candidates.size())
      throw PatternExplosion(nCombos * slot.candidates.size(), comboCap);
    nCombos *= slot.candidates.size();
  }

  const std::size_t nSlots = q.slots.size();
  MilpAssignment best;
  std::size_t bestCombo = nCombos;

  const std::size_t chunk = 1024;
  for (std::size_t lo = 0; lo < nCombos && bestCombo == nCombos; lo += chunk) {
    const std::size_t hi = std::min(nCombos, lo + chunk);
#pragma omp parallel for schedule(dynamic) if (hi - lo > 16)
    for (std::size_t combo = lo; combo < hi; ++combo) {
      Dataset data = q.base;
      std::size_t code = combo;
      std::vector<std::size_t> picks(nSlots);
      for (std::size_t i = 0; i < nSlots; ++i) {
        picks[i] = code % q.slots[i].candidates.size();
        code /= q.slots[i].candidates.size();
        const auto& cand = q.slots[i].candidates[picks[i]];
        data = data.extended(cand.price, cand.bundle);
      }
      MilpAssignment a = try_combined(data, tol);
      if (!a.feasible) continue;
      a.chosenCandidates = picks;
#pragma omp critical
      if (combo < bestCombo) {
        bestCombo = combo;
        best = a;
      }
    }
  }
  if (bestCombo == nCombos) {
    // infeasible everywhere; return the big-M metadata of the bare base
    MilpAssignment a = try_combined(q.base, tol);
    if (q.slots.empty()) return a;
    a.feasible = false;
    return a;
  }
  return best;
}

}  // namespace revpref
