#pragma once

#include "system.hpp"

namespace kmh {

constexpr size_t kDominanceCap = 10000;

// Element of W^v as its action matrix on V (Y-coordinates), together with the
// inverse matrix so both left and right descent tests stay matrix-local.
struct WeylElt {
  IMat mat;
  IMat inv;

  static WeylElt identity(const System& S) {
    WeylElt w;
    w.mat = IMat::identity(S.d);
    w.inv = w.mat;
    return w;
  }

  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.mat == b.mat; }
  friend bool operator!=(const WeylElt& a, const WeylElt& b) { return !(a.mat == b.mat); }
  friend bool operator<(const WeylElt& a, const WeylElt& b) { return a.mat < b.mat; }

  WeylElt mul(const WeylElt& o) const {
    WeylElt r;
    r.mat = mat.mul(o.mat);
    r.inv = o.inv.mul(inv);
    return r;
  }

  WeylElt inverse() const {
    WeylElt r;
    r.mat = inv;
    r.inv = mat;
    return r;
  }

  bool is_identity() const {
    for (size_t i = 0; i < mat.n; ++i)
      for (size_t j = 0; j < mat.n; ++j)
        if (mat.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }
};

inline WeylElt simple_reflection(const System& S, size_t i) {
  static std::map<size_t, std::vector<WeylElt>> cache;
  auto& v = cache[S.uid];
  if (v.empty()) {
    v.resize(S.n);
    for (size_t k = 0; k < S.n; ++k) {
      WeylElt w;
      w.mat = IMat::identity(S.d);
      for (size_t r = 0; r < S.d; ++r)
        for (size_t c = 0; c < S.d; ++c) w.mat.at(r, c) -= S.coroots[k][r] * S.forms[k][c];
      w.inv = w.mat;
      v[k] = w;
    }
  }
  return v[i];
}

// Sign of a covector that is +/- a nonnegative combination of the simple root
// covectors (i.e. the form of a real root): +1 positive root, -1 negative.
inline int root_form_sign(const System& S, const IVec& form) {
  auto c = S.form_solver.solve(form);
  if (!c) fail("Internal", "covector outside the root span");
  int sign = 0;
  for (const auto& x : *c) {
    if (q_sign(x) > 0) {
      if (sign < 0) fail("Internal", "mixed-sign root coordinates");
      sign = 1;
    } else if (q_sign(x) < 0) {
      if (sign > 0) fail("Internal", "mixed-sign root coordinates");
      sign = -1;
    }
  }
  if (sign == 0) fail("Internal", "zero root form");
  return sign;
}

// i is a left descent of w iff w^{-1}(alpha_i) < 0; alpha_i ∘ M_w is the form
// of w^{-1}(alpha_i), so no inversion is needed.
inline bool left_descent(const System& S, const WeylElt& w, size_t i) {
  return root_form_sign(S, w.mat.compose_form(S.forms[i])) < 0;
}

// i is a right descent of w iff w(alpha_i) < 0.
inline bool right_descent(const System& S, const WeylElt& w, size_t i) {
  return root_form_sign(S, w.inv.compose_form(S.forms[i])) < 0;
}

// Lexicographically smallest reduced word (letters are a left-to-right product).
inline std::vector<size_t> reduced_word(const System& S, WeylElt w) {
  std::vector<size_t> word;
  while (!w.is_identity()) {
    bool found = false;
    for (size_t i = 0; i < S.n; ++i) {
      if (left_descent(S, w, i)) {
        word.push_back(i);
        w = simple_reflection(S, i).mul(w);
        found = true;
        break;
      }
    }
    if (!found) fail("Internal", "no descent on a non-identity element");
  }
  return word;
}

inline size_t length(const System& S, const WeylElt& w) { return reduced_word(S, w).size(); }

inline WeylElt from_word(const System& S, const std::vector<size_t>& word) {
  WeylElt w = WeylElt::identity(S);
  for (size_t i : word) w = w.mul(simple_reflection(S, i));
  return w;
}

// A real root with all its incarnations tracked together.
struct RealRoot {
  QVec coords;  // in the simple-root basis (integers, uniform sign)
  IVec form;
  IVec coroot;
  size_t orbit = 0;

  bool positive() const {
    for (const auto& c : coords)
      if (q_sign(c) < 0) return false;
    return true;
  }

  RealRoot negated() const {
    RealRoot r = *this;
    for (auto& c : r.coords) c = -c;
    for (auto& x : r.form) x = -x;
    for (auto& x : r.coroot) x = -x;
    return r;
  }

  friend bool operator==(const RealRoot& a, const RealRoot& b) { return a.form == b.form; }
  friend bool operator<(const RealRoot& a, const RealRoot& b) { return a.form < b.form; }
};

inline RealRoot simple_root(const System& S, size_t i) {
  RealRoot r;
  r.coords.assign(S.n, Rat(0));
  r.coords[i] = 1;
  r.form = S.forms[i];
  r.coroot = S.coroots[i];
  r.orbit = i;
  return r;
}

inline RealRoot act_root(const System& S, const WeylElt& w, const RealRoot& beta) {
  RealRoot r;
  r.form = w.inv.compose_form(beta.form);  // (w beta)(v) = beta(w^{-1} v)
  r.coroot = w.mat.apply(beta.coroot);
  auto c = S.form_solver.solve(r.form);
  if (!c) fail("Internal", "image of a root outside the root span");
  r.coords = *c;
  r.orbit = beta.orbit;
  return r;
}

// Reflection r_beta as a Weyl element.
inline WeylElt reflection(const System& S, const RealRoot& beta) {
  WeylElt w;
  w.mat = IMat::identity(S.d);
  for (size_t r = 0; r < S.d; ++r)
    for (size_t c = 0; c < S.d; ++c) w.mat.at(r, c) -= beta.coroot[r] * beta.form[c];
  w.inv = w.mat;
  return w;
}

// Inv(w) = {beta > 0 : w^{-1} beta < 0}, walked along a reduced word of w.
inline std::vector<RealRoot> inversion_set(const System& S, const WeylElt& w) {
  std::vector<RealRoot> out;
  auto word = reduced_word(S, w);
  WeylElt prefix = WeylElt::identity(S);
  for (size_t k = 0; k < word.size(); ++k) {
    out.push_back(act_root(S, prefix, simple_root(S, word[k])));
    prefix = prefix.mul(simple_reflection(S, word[k]));
  }
  return out;
}

struct Dominantized {
  QVec dom;                // the dominant representative
  WeylElt m;               // minimal with m(lambda) = dom
  std::vector<size_t> J;   // {i : alpha_i(dom) = 0}
};

// Greedy dominance walk; nullopt = Undecided (cap exceeded, lambda possibly
// outside the Tits cone).
inline std::optional<Dominantized> dominantize(const System& S, QVec lambda,
                                               size_t cap = kDominanceCap) {
  for (const auto& f : S.null_forms)
    if (q_sign(pair_q(f, lambda)) < 0) return std::nullopt;
  std::vector<size_t> word;  // m = r_{word.back()} ... r_{word.front()}
  for (size_t it = 0; it <= cap; ++it) {
    std::optional<size_t> neg;
    Rat pairing;
    for (size_t i = 0; i < S.n; ++i) {
      pairing = pair_q(S.forms[i], lambda);
      if (q_sign(pairing) < 0) {
        neg = i;
        break;
      }
    }
    if (!neg) {
      Dominantized r;
      r.dom = lambda;
      r.m = WeylElt::identity(S);
      for (auto it2 = word.rbegin(); it2 != word.rend(); ++it2)
        r.m = r.m.mul(simple_reflection(S, *it2));
      for (size_t i = 0; i < S.n; ++i)
        if (q_sign(pair_q(S.forms[i], lambda)) == 0) r.J.push_back(i);
      return r;
    }
    for (size_t j = 0; j < S.d; ++j)
      lambda[j] -= pairing * Rat(S.coroots[*neg][j]);
    word.push_back(*neg);
  }
  return std::nullopt;
}

enum class ConeClass { Interior, V0, NonSphericalBoundary, NegativeCone, Undecided };

inline ConeClass classify_cone(const System& S, const QVec& lambda, size_t cap = kDominanceCap) {
  bool v0 = true;
  for (size_t i = 0; i < S.n; ++i)
    if (q_sign(pair_q(S.forms[i], lambda)) != 0) v0 = false;
  if (v0) return ConeClass::V0;
  if (auto d = dominantize(S, lambda, cap))
    return is_finite_type(S, d->J) ? ConeClass::Interior : ConeClass::NonSphericalBoundary;
  if (dominantize(S, q_neg(lambda), cap)) return ConeClass::NegativeCone;
  return ConeClass::Undecided;
}

inline WeylElt longest_element(const System& S, const std::vector<size_t>& J) {
  static std::map<std::pair<size_t, std::vector<size_t>>, WeylElt> memo;
  auto key = std::make_pair(S.uid, J);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  if (!is_finite_type(S, J)) fail("NotFinite", "longest element of an infinite parabolic");
  WeylElt w = WeylElt::identity(S);
  for (size_t guard = 0; guard < 100000; ++guard) {
    bool ascended = false;
    for (size_t i : J) {
      if (!right_descent(S, w, i)) {
        w = w.mul(simple_reflection(S, i));
        ascended = true;
        break;
      }
    }
    if (!ascended) {
      memo[key] = w;
      return w;
    }
  }
  fail("NotFinite", "longest-element walk did not terminate");
}

// w_lambda^+ = w_0(J_lambda) * w_lambda, the longest w with w(lambda) dominant.
inline WeylElt w_lambda_plus(const System& S, const QVec& lambda) {
  auto d = dominantize(S, lambda);
  if (!d || !is_finite_type(S, d->J)) fail("NotSpherical", "w_lambda_plus needs a spherical vector");
  return longest_element(S, d->J).mul(d->m);
}

// All elements of the (finite) parabolic W_J.
inline std::vector<WeylElt> parabolic_elements(const System& S, const std::vector<size_t>& J,
                                               size_t cap = 100000) {
  std::set<WeylElt> seen;
  std::vector<WeylElt> queue{WeylElt::identity(S)};
  seen.insert(queue[0]);
  for (size_t head = 0; head < queue.size(); ++head) {
    if (seen.size() > cap) fail("NotFinite", "parabolic enumeration exceeded cap");
    for (size_t i : J) {
      WeylElt next = queue[head].mul(simple_reflection(S, i));
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return queue;
}

// The W^v-orbit of a vector (classical systems, or any vector with finite orbit
// under the cap).
inline std::vector<QVec> weyl_orbit(const System& S, const QVec& v, size_t cap = 100000) {
  std::set<std::vector<std::pair<Int, Int>>> seen;
  auto key = [](const QVec& x) {
    std::vector<std::pair<Int, Int>> k;
    for (const auto& c : x) k.emplace_back(c.numerator(), c.denominator());
    return k;
  };
  std::vector<QVec> queue{v};
  seen.insert(key(v));
  for (size_t head = 0; head < queue.size(); ++head) {
    if (seen.size() > cap) fail("NotFinite", "orbit enumeration exceeded cap");
    for (size_t i = 0; i < S.n; ++i) {
      QVec next = simple_reflection(S, i).mat.apply(queue[head]);
      if (seen.insert(key(next)).second) queue.push_back(next);
    }
  }
  return queue;
}

}  // namespace kmh
