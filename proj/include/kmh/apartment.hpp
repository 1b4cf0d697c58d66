#pragma once

#include "poly.hpp"
#include "weyl.hpp"

namespace kmh {

using Point = QVec;

// lambda . w  in  W = W^v ⋉ Y, acting by v -> lambda + w(v).
struct AffineWeylElt {
  IVec lambda;
  WeylElt w;

  static AffineWeylElt identity(const System& S) {
    return AffineWeylElt{IVec(S.d, 0), WeylElt::identity(S)};
  }

  AffineWeylElt mul(const AffineWeylElt& o) const {
    IVec l = lambda;
    IVec wl = w.mat.apply(o.lambda);
    for (size_t i = 0; i < l.size(); ++i) l[i] += wl[i];
    return AffineWeylElt{l, w.mul(o.w)};
  }

  QVec apply(const QVec& v) const {
    QVec r = w.mat.apply(v);
    for (size_t i = 0; i < r.size(); ++i) r[i] += Rat(lambda[i]);
    return r;
  }

  friend bool operator==(const AffineWeylElt& a, const AffineWeylElt& b) {
    return a.lambda == b.lambda && a.w == b.w;
  }
  friend bool operator<(const AffineWeylElt& a, const AffineWeylElt& b) {
    if (a.lambda != b.lambda) return a.lambda < b.lambda;
    return a.w < b.w;
  }
};

// Germ at `vertex` of vertex + sign·dir·C_f^v.
struct LocalChamber {
  Point vertex;
  int sign = +1;  // +1 or -1
  WeylElt dir;
};

// In classical systems -C_f^v = w_0 C_f^v, so the sign can be normalized away.
inline LocalChamber canonical(const System& S, LocalChamber c) {
  if (c.sign < 0 && S.classical) {
    std::vector<size_t> all(S.n);
    std::iota(all.begin(), all.end(), 0);
    c.dir = c.dir.mul(longest_element(S, all));
    c.sign = +1;
  }
  return c;
}

inline bool chambers_equal(const System& S, const LocalChamber& a, const LocalChamber& b) {
  LocalChamber ca = canonical(S, a), cb = canonical(S, b);
  return ca.vertex == cb.vertex && ca.sign == cb.sign && ca.dir == cb.dir;
}

inline LocalChamber opposite(const LocalChamber& c) {
  LocalChamber r = c;
  r.sign = -r.sign;
  return r;
}

inline LocalChamber translate(const LocalChamber& c, Point vertex) {
  LocalChamber r = c;
  r.vertex = std::move(vertex);
  return r;
}

// Sign of a real-root form on the open cone sign·dir·C_f^v (never zero).
inline int root_sign_on_chamber(const System& S, const IVec& form, const LocalChamber& c) {
  return c.sign * root_form_sign(S, c.dir.mat.compose_form(form));
}

// Whether the closed cone of the chamber contains the direction vector.
inline bool chamber_closure_contains(const System& S, const LocalChamber& c, const QVec& dirvec) {
  QVec pulled = c.dir.inv.apply(dirvec);
  if (c.sign < 0) pulled = q_neg(pulled);
  for (size_t i = 0; i < S.n; ++i)
    if (q_sign(pair_q(S.forms[i], pulled)) < 0) return false;
  return true;
}

// --- symbolic classification with an infinitesimal chamber perturbation ---

namespace detail {

// Finds w with q + eps·(pert cone) ⊂ w·C_f^v strictly; maintains the transform T.
inline std::optional<WeylElt> classify_positive(const System& S, QVec q, int pert_sign,
                                                const WeylElt& pert_dir, size_t cap) {
  for (const auto& f : S.null_forms)
    if (q_sign(pair_q(f, q)) < 0) return std::nullopt;
  // H_i = alpha_i ∘ T ∘ pert_dir, updated covector-wise per descent step;
  // T itself is materialized from the recorded word only on success.
  std::vector<IVec> H(S.n);
  for (size_t i = 0; i < S.n; ++i) H[i] = pert_dir.mat.compose_form(S.forms[i]);
  std::vector<size_t> word;  // T = r_{word.back()} ... r_{word.front()}
  for (size_t it = 0; it <= cap; ++it) {
    std::optional<size_t> desc;
    Rat pairing;
    for (size_t i = 0; i < S.n; ++i) {
      pairing = pair_q(S.forms[i], q);
      if (q_sign(pairing) < 0) {
        desc = i;
        break;
      }
      if (q_sign(pairing) == 0) {
        // tie broken by the perturbation: alpha_i on T·(pert cone)
        if (pert_sign * root_form_sign(S, H[i]) < 0) {
          desc = i;
          break;
        }
      }
    }
    if (!desc) {
      WeylElt Tinv = WeylElt::identity(S);
      for (size_t j : word) Tinv = Tinv.mul(simple_reflection(S, j));
      return Tinv;
    }
    size_t j = *desc;
    for (size_t k = 0; k < S.d; ++k) q[k] -= pairing * Rat(S.coroots[j][k]);
    IVec Hj = H[j];
    for (size_t i = 0; i < S.n; ++i)
      for (size_t k = 0; k < S.d; ++k) H[i][k] -= S.gcm[j][i] * Hj[k];
    word.push_back(j);
  }
  return std::nullopt;
}

}  // namespace detail

// Classify q perturbed into the germ of `pert`: the unique (sign, g) with
// q + eps·pert-cone ⊂ sign·g·C_f^v.
inline std::optional<std::pair<int, WeylElt>> classify_direction(const System& S, const QVec& q,
                                                                 int pert_sign,
                                                                 const WeylElt& pert_dir,
                                                                 size_t cap = kDominanceCap) {
  // Positive attempt classifies q relative to T; the perturbation cone must be
  // transformed consistently, so the descent test above applies alpha_i∘T to it.
  if (auto g = detail::classify_positive(S, q, pert_sign, pert_dir, cap))
    return std::make_pair(+1, *g);
  if (auto g = detail::classify_positive(S, q_neg(q), -pert_sign, pert_dir, cap))
    return std::make_pair(-1, *g);
  return std::nullopt;
}

// Projection of the chamber C to the point x (the germ at x of the segment
// toward C, thickened into C). Degenerate convention: pr_x(C) = C at x = vertex.
inline LocalChamber pr_point(const System& S, const Point& x, const LocalChamber& C) {
  if (x == C.vertex) return C;
  QVec q = q_sub(C.vertex, x);
  auto r = classify_direction(S, q, C.sign, C.dir);
  if (!r) fail("OrderViolation", "pr_point classification undecided");
  return LocalChamber{x, r->first, r->second};
}

// W-distance between positive local chambers at lattice-comparable vertices.
inline AffineWeylElt w_distance(const System& S, const LocalChamber& Cx, const LocalChamber& Cy) {
  LocalChamber a = canonical(S, Cx), b = canonical(S, Cy);
  if (a.sign < 0 || b.sign < 0) fail("NotPreordered", "w_distance needs positive chambers");
  QVec diff = q_sub(b.vertex, a.vertex);
  if (!S.classical) {
    ConeClass cc = classify_cone(S, diff);
    if (cc == ConeClass::Undecided) fail("Undecidable", "cone classification cap");
    if (cc == ConeClass::NegativeCone || cc == ConeClass::NonSphericalBoundary)
      fail("NotPreordered", "vertices not increasing for the preorder");
  }
  QVec lam = a.dir.inv.apply(diff);
  if (!is_integral(lam)) fail("NotPreordered", "vertex difference not in Y");
  return AffineWeylElt{to_i(lam), a.dir.inverse().mul(b.dir)};
}

// Codistance d^{*W}(C, C') for chambers at the same vertex with opposite signs
// (after classical canonicalization, either argument may be stored positive).
inline WeylElt codistance(const System& S, const LocalChamber& C, const LocalChamber& Cp) {
  if (C.vertex != Cp.vertex) fail("VertexMismatch", "codistance needs a common vertex");
  WeylElt neg_dir, pos_dir;
  std::vector<size_t> all(S.n);
  std::iota(all.begin(), all.end(), 0);
  if (C.sign < 0) {
    neg_dir = C.dir;
  } else if (S.classical) {
    neg_dir = C.dir.mul(longest_element(S, all));
  } else {
    fail("VertexMismatch", "codistance needs one negative chamber");
  }
  if (Cp.sign > 0) {
    pos_dir = Cp.dir;
  } else if (S.classical) {
    pos_dir = Cp.dir.mul(longest_element(S, all));
  } else {
    fail("VertexMismatch", "codistance needs one positive chamber");
  }
  return neg_dir.inverse().mul(pos_dir);
}

// Right star action: the unique chamber with d^W(C, C*w) = w.
inline LocalChamber star(const System& S, const LocalChamber& C, const AffineWeylElt& w) {
  LocalChamber c = canonical(S, C);
  if (c.sign < 0) fail("NotPreordered", "star needs a positive chamber");
  QVec v = q_add(c.vertex, c.dir.mat.apply(to_q(w.lambda)));
  return LocalChamber{v, +1, c.dir.mul(w.w)};
}

// Residue distance between chambers at the same vertex and sign.
inline WeylElt residue_distance(const System& S, const LocalChamber& C, const LocalChamber& Cp) {
  LocalChamber a = canonical(S, C), b = canonical(S, Cp);
  if (a.vertex != b.vertex || a.sign != b.sign)
    fail("VertexMismatch", "residue distance needs same vertex and sign");
  return a.dir.inverse().mul(b.dir);
}

struct SegmentGerm {
  Point vertex;
  QVec direction;  // nonzero, up to positive scaling
};

// Projection of C to the germ delta via the prism construction.  The germ's
// residue lives on the sign side whose cone contains the direction; projecting
// from the same side takes the minimal coset representative, projecting from
// the opposite side additionally twists by the longest element of the
// stabilizer (the gate of the opposed residue).
inline LocalChamber pr_germ(const System& S, const SegmentGerm& delta, const LocalChamber& C) {
  if (q_is_zero(delta.direction)) fail("NotGeneric", "zero germ direction");
  LocalChamber Cx = canonical(S, pr_point(S, delta.vertex, C));

  int sigma = +1;
  auto d = dominantize(S, delta.direction);
  if (!d) {
    sigma = -1;
    d = dominantize(S, q_neg(delta.direction));
    if (!d) fail("NotGeneric", "germ direction outside both cones");
  }
  if (!is_finite_type(S, d->J)) fail("NotGeneric", "germ direction not spherical");

  // Minimal coset representative of (a^{-1} m^{-1}) W_J.
  WeylElt c = Cx.dir.inverse().mul(d->m.inverse());
  for (size_t guard = 0; guard < 100000; ++guard) {
    bool stripped = false;
    for (size_t i : d->J) {
      if (right_descent(S, c, i)) {
        c = c.mul(simple_reflection(S, i));
        stripped = true;
        break;
      }
    }
    if (!stripped) break;
  }
  WeylElt g = Cx.dir.mul(c);
  if (Cx.sign != sigma) g = g.mul(longest_element(S, d->J));
  return canonical(S, LocalChamber{delta.vertex, sigma, g});
}

// Whether the hyperplane of direction ker beta through p is a true wall.
inline bool is_true_wall(const System& /*S*/, const RealRoot& beta, const Point& p) {
  return pair_q(beta.form, p).denominator() == 1;
}

// Canonical variable for the wall {beta = value} (beta positive, value in Z).
inline size_t wall_parameter_var(const System& S, const RealRoot& beta, const Int& value) {
  bool odd = (value % 2) != 0;
  size_t symbol = odd ? S.n + beta.orbit : beta.orbit;
  return S.var_index(symbol);
}

inline StructurePoly wall_parameter(const System& S, const RealRoot& beta, const Int& value) {
  return StructurePoly::variable(S, wall_parameter_var(S, beta, value));
}

}  // namespace kmh
