#pragma once

#include <deque>
#include <functional>

#include "gallery.hpp"

namespace kmh {

// A piecewise-linear path of dominant spherical shape, stored untimed-normalized:
// breakpoints p_0..p_l, one lattice direction and one positive rational duration
// per segment, durations summing to 1, and the fold chain (a sequence of signed
// root forms) recorded at each interior breakpoint (empty = straight through).
struct HeckePath {
  IVec shape;
  LocalChamber base;
  std::vector<Point> breakpoints;
  std::vector<IVec> directions;
  std::vector<Rat> durations;
  std::vector<std::vector<IVec>> chains;

  const Point& endpoint() const { return breakpoints.back(); }
};

struct DecoratedHeckePath {
  HeckePath path;
  std::vector<LocalChamber> decorations;  // one chamber at p_{k-1} per segment k
};

// Strict order from the base point: total for classical systems, interior-cone
// membership otherwise.
inline bool base_order_lt(const System& S, const Point& x, const Point& p) {
  if (S.classical) return true;
  return classify_cone(S, q_sub(p, x)) == ConeClass::Interior;
}

namespace detail {

// Positive real roots gamma with gamma(v) <= 0 (the roots whose negatives can
// participate in folds at a point p with v = p - x).
inline std::vector<RealRoot> nonincreasing_roots(const System& S, const QVec& v) {
  std::vector<RealRoot> out;
  std::set<IVec> seen;
  auto push = [&](const RealRoot& r0) {
    RealRoot r = r0.positive() ? r0 : r0.negated();
    if (q_sign(pair_q(r.form, v)) > 0) return;
    if (seen.insert(r.form).second) out.push_back(r);
  };
  if (q_is_zero(v)) {
    if (!S.classical) fail("BasePointOnPath", "point coincides with the base point");
    std::vector<size_t> all(S.n);
    std::iota(all.begin(), all.end(), 0);
    for (const auto& r : inversion_set(S, longest_element(S, all))) push(r);
    return out;
  }
  auto d = dominantize(S, v);
  if (!d) fail("OrderViolation", "point is not above the base point");
  for (const auto& r : inversion_set(S, d->m.inverse())) push(r);
  if (!d->J.empty()) {
    if (!is_finite_type(S, d->J)) fail("OrderViolation", "boundary direction not spherical");
    WeylElt mi = d->m.inverse();
    for (const auto& r : inversion_set(S, longest_element(S, d->J))) push(act_root(S, mi, r));
  }
  return out;
}

// Positive real roots beta with beta(eta) < 0 (descending along eta); finite
// because they lie in the inversion set of the dominantizing element.
inline std::vector<RealRoot> descending_roots(const System& S, const QVec& eta) {
  auto d = dominantize(S, eta);
  if (!d) fail("NotLambdaPath", "direction outside the positive cone orbit");
  std::vector<RealRoot> out;
  for (const auto& r : inversion_set(S, d->m.inverse()))
    if (q_sign(pair_q(r.form, eta)) < 0) out.push_back(r);
  return out;
}

// Times t in (0, r) at which the open segment q + t*xi descends through a true
// wall whose level is at least the wall's level at x (the points where a fold
// may legally occur and which are therefore forced breakpoints).
inline std::set<Rat> segment_event_times(const System& S, const Point& x, const Point& q,
                                         const QVec& xi, const Rat& r) {
  std::set<Rat> times;
  auto add = [&](const RealRoot& beta) {  // pre: beta(xi) < 0
    Rat slope = pair_q(beta.form, xi);
    Rat a = pair_q(beta.form, q);
    Rat b = a + r * slope;
    Int hi = (a.denominator() == 1) ? a.numerator() - 1 : q_floor(a);
    Int lo = q_floor(b) + 1;
    Int lox = q_ceil(pair_q(beta.form, x));
    if (lo < lox) lo = lox;
    for (Int v = lo; v <= hi; ++v) times.insert((Rat(v) - a) / slope);
  };
  for (const auto& beta : descending_roots(S, xi)) add(beta);
  std::set<IVec> seen;
  const Point end = q_add(q, q_scale(r, xi));
  for (int which = 0; which < 2; ++which) {
    const Point& pt = (which == 0) ? q : end;
    std::vector<RealRoot> gammas;
    try {
      gammas = nonincreasing_roots(S, q_sub(pt, x));
    } catch (const MathError&) {
      if (which == 0) throw;  // the segment start must be valid; the far end may exit
      continue;
    }
    for (const auto& g : gammas) {
      if (q_sign(pair_q(g.form, xi)) <= 0) continue;
      if (!seen.insert(g.form).second) continue;
      add(g.negated());
    }
  }
  return times;
}

// Closure of {xi0} under one-step legal folds at p with respect to C_x, with
// the witnessing chain (sequence of signed root forms) per reachable direction.
inline std::map<IVec, std::vector<IVec>> fold_candidates_chains(const System& S, const Point& p,
                                                                const IVec& xi0,
                                                                const LocalChamber& Cx) {
  if (!base_order_lt(S, Cx.vertex, p)) fail("OrderViolation", "fold point not above the base");
  LocalChamber Cm = pr_point(S, p, Cx);
  auto gammas = nonincreasing_roots(S, q_sub(p, Cx.vertex));

  std::map<IVec, std::vector<IVec>> out;
  std::deque<IVec> queue;
  out.emplace(xi0, std::vector<IVec>{});
  queue.push_back(xi0);
  while (!queue.empty()) {
    IVec eta = queue.front();
    queue.pop_front();
    QVec etaq = to_q(eta);
    std::vector<RealRoot> cands = descending_roots(S, etaq);
    for (const auto& g : gammas)
      if (q_sign(pair_q(g.form, etaq)) > 0) cands.push_back(g.negated());
    for (const auto& beta : cands) {
      if (pair_q(beta.form, p).denominator() != 1) continue;       // not a true wall at p
      if (root_sign_on_chamber(S, beta.form, Cm) >= 0) continue;   // not centrifugal
      QVec next = reflection(S, beta).mat.apply(etaq);
      IVec nexti = to_i(next);
      if (out.count(nexti)) continue;
      std::vector<IVec> chain = out.at(eta);
      chain.push_back(beta.form);
      out.emplace(nexti, std::move(chain));
      queue.push_back(nexti);
    }
  }
  return out;
}

inline void check_shape(const System& S, const IVec& mu) {
  for (size_t i = 0; i < S.n; ++i)
    if (pair_i(S.forms[i], mu) < 0) fail("NotLambdaPath", "shape is not dominant");
  auto d = dominantize(S, to_q(mu));
  if (!d || !is_finite_type(S, d->J)) fail("NotLambdaPath", "shape is not spherical");
}

}  // namespace detail

// Directions reachable from xi by chains at p (always contains xi itself).
inline std::set<IVec> fold_candidates(const System& S, const Point& p, const IVec& xi,
                                      const LocalChamber& Cx) {
  std::set<IVec> out;
  for (const auto& [dir, chain] : detail::fold_candidates_chains(S, p, xi, Cx)) out.insert(dir);
  return out;
}

// All paths of the given shape from p_0 relative to C_x, optionally filtered by
// endpoint and by endpoint lattice membership; discarded non-lattice endpoints
// are reported through `discarded` when requested.
inline std::vector<HeckePath> enumerate_paths(const System& S, const IVec& mu, const Point& p0,
                                              const LocalChamber& Cx, const Point* end = nullptr,
                                              bool require_lattice = false,
                                              size_t budget = 1000000,
                                              std::vector<Point>* discarded = nullptr,
                                              const std::vector<IVec>* initial_dirs = nullptr) {
  detail::check_shape(S, mu);
  if (!base_order_lt(S, Cx.vertex, p0)) fail("OrderViolation", "p0 is not above the base point");

  // The full orbit is infinite when W^v is; callers in that regime must pass
  // the finite set of initial directions that can actually contribute.
  std::vector<IVec> orbit;
  if (initial_dirs) {
    std::set<IVec> uniq;
    for (const auto& xi : *initial_dirs) {
      auto d = dominantize(S, to_q(xi));
      if (!d || d->dom != to_q(mu)) fail("NotLambdaPath", "initial direction outside the shape orbit");
      uniq.insert(xi);
    }
    orbit.assign(uniq.begin(), uniq.end());
  } else {
    for (const auto& v : weyl_orbit(S, to_q(mu))) orbit.push_back(to_i(v));
    std::sort(orbit.begin(), orbit.end());
  }

  std::vector<HeckePath> out;
  size_t nodes = 0;

  std::vector<Point> bps{p0};
  std::vector<IVec> dirs;
  std::vector<Rat> durs;
  std::vector<std::vector<IVec>> chains;

  std::function<void(const IVec&, const Rat&)> rec = [&](const IVec& xi, const Rat& rem) {
    if (++nodes > budget) fail("SearchBudgetExceeded", "path enumeration exceeded its node cap");
    const Point q = bps.back();
    QVec xiq = to_q(xi);
    auto times = detail::segment_event_times(S, Cx.vertex, q, xiq, rem);
    if (times.empty()) {
      Point pe = q_add(q, q_scale(rem, xiq));
      if (!base_order_lt(S, Cx.vertex, pe)) return;
      if (end && pe != *end) return;
      if (require_lattice && !is_integral(pe)) {
        if (discarded) discarded->push_back(pe);
        return;
      }
      HeckePath hp;
      hp.shape = mu;
      hp.base = Cx;
      hp.breakpoints = bps;
      hp.breakpoints.push_back(std::move(pe));
      hp.directions = dirs;
      hp.directions.push_back(xi);
      hp.durations = durs;
      hp.durations.push_back(rem);
      hp.chains = chains;
      out.push_back(std::move(hp));
      return;
    }
    Rat t1 = *times.begin();
    Point qs = q_add(q, q_scale(t1, xiq));
    if (!base_order_lt(S, Cx.vertex, qs)) return;
    auto cands = detail::fold_candidates_chains(S, qs, xi, Cx);
    for (const auto& [xip, chain] : cands) {
      bps.push_back(qs);
      dirs.push_back(xi);
      durs.push_back(t1);
      chains.push_back(chain);
      rec(xip, rem - t1);
      bps.pop_back();
      dirs.pop_back();
      durs.pop_back();
      chains.pop_back();
    }
  };
  for (const auto& xi : orbit) rec(xi, Rat(1));

  std::sort(out.begin(), out.end(), [](const HeckePath& a, const HeckePath& b) {
    if (a.breakpoints != b.breakpoints) return a.breakpoints < b.breakpoints;
    return a.directions < b.directions;
  });
  return out;
}

// Checks a path candidate, normalizes it (merging reparametrization artifacts
// and splitting segments at every forced event), and annotates fold chains.
inline HeckePath validate_hecke(const System& S, const HeckePath& cand) {
  detail::check_shape(S, cand.shape);
  const LocalChamber& Cx = cand.base;
  size_t l = cand.directions.size();
  if (l == 0 || cand.breakpoints.size() != l + 1 || cand.durations.size() != l)
    fail("NotLambdaPath", "inconsistent path data");

  Rat total(0);
  QVec mu = to_q(cand.shape);
  for (size_t k = 0; k < l; ++k) {
    if (q_sign(cand.durations[k]) <= 0) fail("NotLambdaPath", "durations must be positive");
    total += cand.durations[k];
    auto d = dominantize(S, to_q(cand.directions[k]));
    if (!d || d->dom != mu) fail("NotLambdaPath", "segment direction outside the shape orbit");
    Point expect = q_add(cand.breakpoints[k],
                         q_scale(cand.durations[k], to_q(cand.directions[k])));
    if (expect != cand.breakpoints[k + 1]) fail("NotLambdaPath", "breakpoint mismatch");
  }
  if (total != Rat(1)) fail("NotLambdaPath", "durations must sum to 1");
  for (const auto& p : cand.breakpoints)
    if (!base_order_lt(S, Cx.vertex, p)) fail("BasePointOnPath", "path not above the base point");

  // Merge consecutive equal directions (reparametrization-equivalent inputs).
  std::vector<IVec> mdirs;
  std::vector<Rat> mdurs;
  for (size_t k = 0; k < l; ++k) {
    if (!mdirs.empty() && mdirs.back() == cand.directions[k]) {
      mdurs.back() += cand.durations[k];
    } else {
      mdirs.push_back(cand.directions[k]);
      mdurs.push_back(cand.durations[k]);
    }
  }

  HeckePath hp;
  hp.shape = cand.shape;
  hp.base = Cx;
  hp.breakpoints.push_back(cand.breakpoints.front());
  for (size_t k = 0; k < mdirs.size(); ++k) {
    const IVec& xi = mdirs[k];
    QVec xiq = to_q(xi);
    if (k > 0) {
      // direction change: require a legal chain at the joint
      const Point& p = hp.breakpoints.back();
      auto cands = detail::fold_candidates_chains(S, p, mdirs[k - 1], Cx);
      auto it = cands.find(xi);
      if (it == cands.end()) fail("ChainNotFound", "fold violates the local chain condition");
      hp.chains.push_back(it->second);
    }
    // split at every event inside the merged segment
    Rat done(0);
    for (const Rat& t : detail::segment_event_times(S, Cx.vertex, hp.breakpoints.back(), xiq,
                                                    mdurs[k])) {
      hp.breakpoints.push_back(q_add(hp.breakpoints.back(), q_scale(t - done, xiq)));
      hp.directions.push_back(xi);
      hp.durations.push_back(t - done);
      hp.chains.push_back({});
      done = t;
    }
    hp.breakpoints.push_back(q_add(hp.breakpoints.back(), q_scale(mdurs[k] - done, xiq)));
    hp.directions.push_back(xi);
    hp.durations.push_back(mdurs[k] - done);
  }
  // the per-joint chain pushed above precedes the splits of the next segment;
  // reorder is unnecessary because chains are indexed by interior breakpoints
  // in order of construction, which matches path order.
  return hp;
}

// All decorations: per segment, every local chamber at its start whose closure
// contains the outgoing germ; Cartesian product across segments.
inline std::vector<DecoratedHeckePath> enumerate_decorations(const System& S,
                                                             const HeckePath& pi) {
  auto d0 = dominantize(S, to_q(pi.shape));
  auto WJ = parabolic_elements(S, d0->J);
  std::vector<std::vector<LocalChamber>> options;
  for (size_t k = 0; k < pi.directions.size(); ++k) {
    auto dk = dominantize(S, to_q(pi.directions[k]));
    WeylElt g = dk->m.inverse();
    std::vector<LocalChamber> opts;
    for (const auto& wp : WJ)
      opts.push_back(LocalChamber{pi.breakpoints[k], +1, g.mul(wp)});
    options.push_back(std::move(opts));
  }
  std::vector<DecoratedHeckePath> out;
  std::vector<size_t> idx(options.size(), 0);
  for (;;) {
    DecoratedHeckePath d;
    d.path = pi;
    for (size_t k = 0; k < options.size(); ++k) d.decorations.push_back(options[k][idx[k]]);
    out.push_back(std::move(d));
    size_t k = options.size();
    while (k > 0) {
      --k;
      if (++idx[k] < options[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (options.empty()) return out;
  }
}

// Number of liftings of the path: the product over interior breakpoints of the
// folded-gallery sums ending against the outgoing germ, times the count of the
// minimal lifting of the trailing germ at the endpoint.
inline StructurePoly segment_lifting_count(const System& S, const HeckePath& pi) {
  size_t l = pi.directions.size();
  StructurePoly totalp = StructurePoly::constant(S, 1);
  for (size_t k = 1; k < l; ++k) {
    const Point& p = pi.breakpoints[k];
    LocalChamber Cm = pr_point(S, p, pi.base);
    QVec xik = to_q(pi.directions[k - 1]);
    QVec eta = to_q(pi.directions[k]);
    LocalChamber Cneg = pr_germ(S, SegmentGerm{p, q_neg(xik)}, Cm);
    GalleryType ik = minimal_gallery_type(S, Cm, Cneg);
    LocalChamber Omega = pr_germ(S, SegmentGerm{p, eta}, Cm);
    StructurePoly factor = StructurePoly::zero(S);
    for (const auto& g : enumerate_folded(S, Cm, Omega, ik))
      if (chamber_closure_contains(S, g.end, q_neg(eta))) factor = factor + g.monomial;
    totalp = totalp * factor;
  }
  const Point& y = pi.breakpoints.back();
  LocalChamber Cy = pr_point(S, y, pi.base);
  QVec xil = to_q(pi.directions.back());
  LocalChamber Cneg = pr_germ(S, SegmentGerm{y, q_neg(xil)}, Cy);
  totalp = totalp * minimal_lifting_count(S, Cy, minimal_gallery_type(S, Cy, Cneg));
  return totalp;
}

}  // namespace kmh
