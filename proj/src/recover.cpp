#include "revpref/recover.hpp"

#include <algorithm>
#include <cmath>

#include "revpref/axioms.hpp"
#include "revpref/errors.hpp"
#include "revpref/relations.hpp"
#include "revpref/simplex.hpp"

namespace revpref {

namespace {

constexpr double kPriceMargin = 1e-7;  // strictness margin, relative to the sum-1 price scale

// Direct relations of O^T extended by (p, x) where only the sign pattern of
// p.(x - x^t) is known; the p^t side is fixed by the data.
RelationMatrices extended_relations(const Dataset& d, const RelationMatrices& base, const Vec& x,
                                    const std::vector<int>& sign, double tol) {
  const std::size_t T = d.T(), n = T + 1;
  RelationMatrices r;
  r.weakDirect = BoolMatrix(n, n);
  r.strictDirect = BoolMatrix(n, n);
  for (std::size_t t = 0; t < T; ++t)
    for (std::size_t s = 0; s < T; ++s) {
      r.weakDirect.set(t, s, base.weakDirect(t, s));
      r.strictDirect.set(t, s, base.strictDirect(t, s));
    }
  for (std::size_t t = 0; t < T; ++t) {
    r.weakDirect.set(T, t, sign[t] >= 0);   // p.x >= p.x^t
    r.strictDirect.set(T, t, sign[t] > 0);  // p.x >  p.x^t
    double own = d.wealth(t), cx = d.cost(t, x);
    r.weakDirect.set(t, T, own >= cx - tol);
    r.strictDirect.set(t, T, own > cx + tol);
  }
  r.weakDirect.set(T, T, true);
  return r;
}

bool wgarp_holds(const RelationMatrices& r) {
  const std::size_t n = r.weakDirect.rows();
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      if (s != t && r.weakDirect(t, s) && r.strictDirect(s, t)) return false;
  return true;
}

bool garp_holds(const RelationMatrices& r) {
  auto closed = transitive_closure(r);
  const std::size_t n = r.weakDirect.rows();
  for (std::size_t t = 0; t < n; ++t)
    for (std::size_t s = 0; s < n; ++s)
      if (s != t && closed.weakClosure(t, s) && closed.strictDirect(s, t)) return false;
  return true;
}

bool axiom_holds(const RelationMatrices& r, SupportAxiom a) {
  return a == SupportAxiom::WGARP ? wgarp_holds(r) : garp_holds(r);
}

// Realizability of a sign branch by a strictly positive price, optionally
// under one extra weak constraint extraRow . p <= 0. Prices normalized to
// sum 1; strict signs get a margin scaled by the bundle gap.
bool pattern_feasible(const Dataset& d, const Vec& x, const std::vector<int>& sign,
                      const Vec* extraRow, Vec* price) {
  const std::size_t T = d.T(), L = d.L();
  LpProblem lp;
  lp.c.assign(L, 0.0);

  Vec ones(L, 1.0);
  lp.add_row(ones, RowSense::EQ, 1.0);
  const double floor = kPriceMargin / double(L);
  for (std::size_t l = 0; l < L; ++l) {
    Vec e(L, 0.0);
    e[l] = 1.0;
    lp.add_row(std::move(e), RowSense::GE, floor);
  }
  for (std::size_t t = 0; t < T; ++t) {
    Vec gap = sub(x, d.bundle(t));
    double mag = 0.0;
    for (double v : gap) mag = std::max(mag, std::fabs(v));
    double margin = kPriceMargin * std::max(1.0, mag);
    if (sign[t] > 0)
      lp.add_row(std::move(gap), RowSense::GE, margin);
    else if (sign[t] < 0)
      lp.add_row(std::move(gap), RowSense::LE, -margin);
    else
      lp.add_row(std::move(gap), RowSense::EQ, 0.0);
  }
  if (extraRow) lp.add_row(*extraRow, RowSense::LE, 0.0);
  return lp_feasible(lp, price);
}

std::vector<int> unpack_pattern(std::size_t code, std::size_t T) {
  std::vector<int> sign(T);
  for (std::size_t t = 0; t < T; ++t) {
    sign[t] = int(code % 3) - 1;
    code /= 3;
  }
  return sign;
}

std::size_t pattern_count(std::size_t T, std::size_t maxObservations) {
  if (T > maxObservations) {
    std::size_t needed = 1;
    for (std::size_t i = 0; i < T && needed < std::size_t(1) << 62; ++i) needed *= 3;
    std::size_t cap = 1;
    for (std::size_t i = 0; i < maxObservations; ++i) cap *= 3;
    throw PatternExplosion(needed, cap);
  }
  std::size_t n = 1;
  for (std::size_t i = 0; i < T; ++i) n *= 3;
  return n;
}

}  // namespace

SupportResult supporting_set_nonempty(const Dataset& d, const Vec& x, SupportAxiom axiom,
                                      double tol, std::size_t maxObservations) {
  const std::size_t T = d.T();
  const std::size_t nPat = pattern_count(T, maxObservations);
  auto base = direct_relations(d, tol);

  SupportResult res;
  res.patternsChecked = nPat;

  // Deterministic first hit: scan chunks in increasing pattern order, the
  // branches inside a chunk in parallel, and keep the smallest feasible code.
  const std::size_t chunk = 2048;
  for (std::size_t lo = 0; lo < nPat; lo += chunk) {
    const std::size_t hi = std::min(nPat, lo + chunk);
    std::size_t found = nPat;
    Vec foundPrice;
#pragma omp parallel for schedule(dynamic) if (hi - lo > 64)
    for (std::size_t code = lo; code < hi; ++code) {
      auto sign = unpack_pattern(code, T);
      if (!axiom_holds(extended_relations(d, base, x, sign, tol), axiom)) continue;
      Vec p;
      if (!pattern_feasible(d, x, sign, nullptr, &p)) continue;
#pragma omp critical
      if (code < found) {
        found = code;
        foundPrice = p;
      }
    }
    if (found < nPat) {
      res.nonempty = true;
      res.certificatePrice = foundPrice;
      res.certificatePattern = PricePattern{unpack_pattern(found, T)};
      res.patternsChecked = found + 1;
      return res;
    }
  }
  return res;
}

bool is_supporting_price(const Dataset& d, const Vec& x, const Vec& p, SupportAxiom axiom,
                         double tol) {
  Dataset ext = d.extended(p, x);
  return axiom == SupportAxiom::WGARP ? check_wgarp(ext, tol).holds : check_garp(ext, tol).holds;
}

namespace {

// Shared engine for RP / RW membership. Quantifies "for every price in the
// supporting set of `anchor`, anchor is directly revealed over `other`":
// true iff some branch of S(anchor) is feasible and no branch stays feasible
// once p.anchor <= p.other is imposed.
struct QuantifierResult {
  bool supportNonempty = false;
  bool universallyRevealed = true;
  std::optional<Vec> witnessPrice;  // feasible p with p.anchor <= p.other
  std::size_t patterns = 0;
};

QuantifierResult revealed_over_all_support(const Dataset& d, const Vec& anchor, const Vec& other,
                                           SupportAxiom axiom, double tol,
                                           std::size_t maxObservations) {
  const std::size_t T = d.T();
  const std::size_t nPat = pattern_count(T, maxObservations);
  auto base = direct_relations(d, tol);
  Vec extra = sub(anchor, other);  // p.(anchor - other) <= 0

  QuantifierResult q;
  q.patterns = nPat;
  for (std::size_t code = 0; code < nPat; ++code) {
    auto sign = unpack_pattern(code, T);
    if (!axiom_holds(extended_relations(d, base, anchor, sign, tol), axiom)) continue;
    Vec p;
    if (pattern_feasible(d, anchor, sign, &extra, &p)) {
      q.supportNonempty = true;
      q.universallyRevealed = false;
      q.witnessPrice = p;
      return q;
    }
    if (!q.supportNonempty && pattern_feasible(d, anchor, sign, nullptr, nullptr))
      q.supportNonempty = true;
  }
  return q;
}

}  // namespace

BoundMembership in_rp(const Dataset& d, const Vec& y, const Vec& x, SupportAxiom axiom, double tol,
                      std::size_t maxObservations) {
  BoundMembership m;
  m.setName = "RP";
  m.query = x;
  m.candidate = y;
  auto q = revealed_over_all_support(d, y, x, axiom, tol, maxObservations);
  m.patternsChecked = q.patterns;
  if (!q.supportNonempty) {
    m.member = false;
    m.note = "supporting set of the candidate is empty";
  } else if (q.universallyRevealed) {
    m.member = true;
    m.note = "p.y > p.x for every supporting price (all branches exhausted)";
  } else {
    m.member = false;
    m.certificatePrice = q.witnessPrice;
    m.note = "a supporting price admits p.y <= p.x";
  }
  return m;
}

BoundMembership in_nrw(const Dataset& d, const Vec& y, const Vec& x, SupportAxiom axiom,
                       double tol, std::size_t maxObservations) {
  BoundMembership m;
  m.setName = "NRW";
  m.query = x;
  m.candidate = y;
  auto q = revealed_over_all_support(d, x, y, axiom, tol, maxObservations);
  m.patternsChecked = q.patterns;
  if (!q.supportNonempty) {
    m.member = true;  // RW(x) is empty when no price supports x
    m.note = "supporting set of the query is empty";
  } else if (q.universallyRevealed) {
    m.member = false;
    m.note = "x is revealed over y at every supporting price";
  } else {
    m.member = true;
    m.certificatePrice = q.witnessPrice;
    m.note = "a supporting price admits p.x <= p.y";
  }
  return m;
}

namespace {

// Pairwise membership tables for the robust combinators; entry (s,t) with
// s <= t is shared by both orders since O^2_{st} = O^2_{ts}.
enum class PairSet { RP, NRW };

std::vector<char> pairwise_membership(const Dataset& d, const Vec& y, const Vec& x, PairSet which,
                                      double tol) {
  const std::size_t T = d.T();
  const std::size_t nPairs = T * (T + 1) / 2;
  std::vector<char> member(nPairs, 0);
#pragma omp parallel for schedule(dynamic) if (nPairs > 4)
  for (std::size_t k = 0; k < nPairs; ++k) {
    std::size_t s = 0, acc = 0;
    while (acc + (T - s) <= k) acc += (T - s++);
    std::size_t t = s + (k - acc);
    Dataset pd = pair_dataset(d, s, t);
    BoundMembership bm = which == PairSet::RP
                             ? in_rp(pd, y, x, SupportAxiom::GARP, tol)
                             : in_nrw(pd, y, x, SupportAxiom::GARP, tol);
    member[k] = bm.member ? 1 : 0;
  }
  return member;
}

std::size_t pair_index(std::size_t T, std::size_t s, std::size_t t) {
  if (s > t) std::swap(s, t);
  return s * T - s * (s - 1) / 2 + (t - s);
}

}  // namespace

BoundMembership in_rp_robust(const Dataset& d, const Vec& y, const Vec& x, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);
  BoundMembership m;
  m.setName = "RPW";
  m.query = x;
  m.candidate = y;
  const std::size_t T = d.T();
  auto tab = pairwise_membership(d, y, x, PairSet::RP, tol);
  m.patternsChecked = tab.size() * 9;
  bool any = false;
  for (std::size_t s = 0; s < T && !any; ++s) {
    bool all = true;
    for (std::size_t t = 0; t < T && all; ++t)
      if (!tab[pair_index(T, s, t)]) all = false;
    any = all;
  }
  m.member = any;
  m.note = "union over s of intersection over t of pairwise RP";
  return m;
}

BoundMembership in_nrw_robust(const Dataset& d, const Vec& y, const Vec& x, double tol) {
  auto wgarp = check_wgarp(d, tol);
  if (!wgarp.holds) throw WgarpViolation(*wgarp.witness);
  BoundMembership m;
  m.setName = "NRWW";
  m.query = x;
  m.candidate = y;
  const std::size_t T = d.T();
  auto tab = pairwise_membership(d, y, x, PairSet::NRW, tol);
  m.patternsChecked = tab.size() * 9;
  bool all = true;
  for (std::size_t s = 0; s < T && all; ++s) {
    bool any = false;
    for (std::size_t t = 0; t < T && !any; ++t)
      if (tab[pair_index(T, s, t)]) any = true;
    all = any;
  }
  m.member = T == 0 ? true : all;
  m.note = "intersection over s of union over t of pairwise NRW";
  return m;
}

}  // namespace revpref
