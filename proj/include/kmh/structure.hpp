#pragma once

#include <random>

#include "hecke_path.hpp"

namespace kmh {

using ProductResult = std::map<AffineWeylElt, StructurePoly>;

// Coarse classification of the translation part of a basis element.
enum class ElemClass { V0, Spherical, Outside, Undecided };

inline ElemClass element_class(const System& S, const IVec& lambda) {
  bool v0 = true;
  for (size_t i = 0; i < S.n; ++i)
    if (pair_i(S.forms[i], lambda) != 0) v0 = false;
  if (v0) return ElemClass::V0;
  if (S.classical) return ElemClass::Spherical;
  switch (classify_cone(S, to_q(lambda))) {
    case ConeClass::Interior: return ElemClass::Spherical;
    case ConeClass::Undecided: return ElemClass::Undecided;
    default: return ElemClass::Outside;
  }
}

// Uniformly random reduced word (used by the choice-independence checks).
inline std::vector<size_t> random_reduced_word(const System& S, WeylElt w, std::mt19937& rng) {
  std::vector<size_t> word;
  for (size_t guard = 0; guard < 100000; ++guard) {
    std::vector<size_t> descents;
    for (size_t i = 0; i < S.n; ++i)
      if (left_descent(S, w, i)) descents.push_back(i);
    if (descents.empty()) return word;
    size_t i = descents[std::uniform_int_distribution<size_t>(0, descents.size() - 1)(rng)];
    word.push_back(i);
    w = simple_reflection(S, i).mul(w);
  }
  fail("NotFinite", "reduced word walk did not terminate");
}

namespace detail {

inline std::vector<size_t> choose_word(const System& S, const WeylElt& w, std::mt19937* rng) {
  return rng ? random_reduced_word(S, w, *rng) : reduced_word(S, w);
}

inline GalleryType choose_gallery_type(const System& S, const LocalChamber& C,
                                       const LocalChamber& Cp, std::mt19937* rng) {
  return GalleryType{choose_word(S, residue_distance(S, C, Cp), rng)};
}

// Direction of the negative-side representative of a local chamber.
inline WeylElt neg_rep_dir(const System& S, const LocalChamber& c) {
  if (c.sign < 0) return c.dir;
  if (!S.classical) fail("VertexMismatch", "expected a negative chamber");
  std::vector<size_t> all(S.n);
  std::iota(all.begin(), all.end(), 0);
  return c.dir.mul(longest_element(S, all));
}

// Shared data for one (w, v) product computation.
struct ProductContext {
  AffineWeylElt w, v;
  LocalChamber Cx;           // (0, +, e)
  QVec mu_pp;                // dominant representative of the right translation
  IVec mu_pp_i;
  std::vector<size_t> Jmu;   // stabilizer generators of mu_pp
  WeylElt w_vinvmu;          // minimal m with m(v_w^{-1} mu) dominant
  WeylElt target_y;          // w_0(Jmu) * w_vinvmu
  WeylElt target_0;          // w_lambda^+ * w_w  (left factor spherical only)
  std::mt19937* rng = nullptr;
};

inline ProductContext make_context(const System& S, const AffineWeylElt& w,
                                   const AffineWeylElt& v, bool left_spherical,
                                   std::mt19937* rng) {
  ProductContext ctx;
  ctx.w = w;
  ctx.v = v;
  ctx.Cx = LocalChamber{Point(S.d, Rat(0)), +1, WeylElt::identity(S)};
  auto dmu = dominantize(S, to_q(v.lambda));
  if (!dmu || !is_finite_type(S, dmu->J)) fail("NotSpherical", "right translation not spherical");
  ctx.mu_pp = dmu->dom;
  ctx.mu_pp_i = to_i(dmu->dom);
  auto dpp = dominantize(S, ctx.mu_pp);
  ctx.Jmu = dpp->J;
  auto dv = dominantize(S, v.w.inv.apply(to_q(v.lambda)));
  if (!dv) fail("Undecidable", "dominantization cap");
  ctx.w_vinvmu = dv->m;
  ctx.target_y = longest_element(S, ctx.Jmu).mul(ctx.w_vinvmu);
  if (left_spherical) ctx.target_0 = w_lambda_plus(S, to_q(w.lambda)).mul(w.w);
  ctx.rng = rng;
  return ctx;
}

// Sum of monomials of the galleries from `start` of type `type`, folded with
// respect to Omega, ending exactly at `end`.
inline StructurePoly gallery_sum(const System& S, const LocalChamber& start,
                                 const LocalChamber& Omega, const GalleryType& type,
                                 const LocalChamber& end) {
  StructurePoly total = StructurePoly::zero(S);
  for (const auto& g : enumerate_folded(S, start, Omega, type, &end)) total = total + g.monomial;
  return total;
}

// Factor a(0): galleries from the first decoration, folded toward the base.
inline StructurePoly factor_a0(const System& S, const ProductContext& ctx,
                               const DecoratedHeckePath& dec) {
  const Point& p0 = dec.path.breakpoints.front();
  const LocalChamber& D1 = dec.decorations.front();
  LocalChamber Omega = pr_point(S, p0, ctx.Cx);
  GalleryType type{choose_word(S, ctx.w_vinvmu.mul(ctx.v.w.inverse()), ctx.rng)};
  LocalChamber endc{p0, +1, neg_rep_dir(S, Omega).mul(ctx.target_0)};
  return gallery_sum(S, D1, Omega, type, endc);
}

// Factor a(k), 1 <= k <= l-1, at interior breakpoint p_k.
inline StructurePoly factor_ak(const System& S, const ProductContext& ctx,
                               const DecoratedHeckePath& dec, size_t k) {
  const HeckePath& pi = dec.path;
  const Point& p = pi.breakpoints[k];
  LocalChamber Cm = pr_point(S, p, ctx.Cx);
  LocalChamber Dk = translate(dec.decorations[k - 1], p);
  LocalChamber Cstar = pr_germ(S, SegmentGerm{p, q_neg(to_q(pi.directions[k - 1]))}, Dk);
  GalleryType ik = choose_gallery_type(S, Cm, Cstar, ctx.rng);
  const LocalChamber& Omega = dec.decorations[k];  // C^+_{p_k}, already at p_k
  LocalChamber endc = pr_germ(S, SegmentGerm{p, q_neg(to_q(pi.directions[k]))}, Omega);
  return gallery_sum(S, Cm, Omega, ik, endc);
}

// Gallery type of the trailing factor a(l) (depends on the decoration only).
inline GalleryType trailing_type(const System& S, const ProductContext& ctx,
                                 const DecoratedHeckePath& dec, const LocalChamber& Cy_minus) {
  const HeckePath& pi = dec.path;
  const Point& y = pi.breakpoints.back();
  LocalChamber Dl = translate(dec.decorations.back(), y);
  LocalChamber Cstar = pr_germ(S, SegmentGerm{y, q_neg(to_q(pi.directions.back()))}, Dl);
  return choose_gallery_type(S, Cy_minus, Cstar, ctx.rng);
}

// Factor a(l) for a specific right chamber direction u' at y.
inline StructurePoly factor_al(const System& S, const ProductContext& ctx, const Point& y,
                               const LocalChamber& Cy_minus, const GalleryType& il,
                               const WeylElt& uprime) {
  LocalChamber Cy{y, +1, uprime};
  LocalChamber endc{y, -1, uprime.mul(ctx.target_y.inverse())};
  return gallery_sum(S, Cy_minus, Cy, il, endc);
}

// Theorem-style computation when both translation parts are spherical.  When
// `target_u` is set, only that term is evaluated.
inline ProductResult product_spherical(const System& S, const AffineWeylElt& w,
                                       const AffineWeylElt& v, const AffineWeylElt* target_u,
                                       std::mt19937* rng) {
  ProductContext ctx = make_context(S, w, v, /*left_spherical=*/true, rng);
  Point p0 = to_q(w.lambda);
  const Point* endpt = nullptr;
  Point endv;
  if (target_u) {
    endv = to_q(target_u->lambda);
    endpt = &endv;
  }
  ProductResult out;
  // Only first decorations within gallery reach of the fixed end chamber of
  // a(0) can contribute, which pins the initial direction to a finite set;
  // this is what keeps enumeration finite beyond the classical case.
  std::vector<IVec> init_dirs;
  {
    LocalChamber Omega0 = pr_point(S, p0, ctx.Cx);
    WeylElt end0 = neg_rep_dir(S, Omega0).mul(ctx.target_0);
    GalleryType t0{reduced_word(S, ctx.w_vinvmu.mul(ctx.v.w.inverse()))};
    std::set<IVec> uniq;
    for (const auto& r : reach_set(S, WeylElt::identity(S), t0.word))
      uniq.insert(to_i(end0.mul(r.inverse()).mat.apply(ctx.mu_pp)));
    init_dirs.assign(uniq.begin(), uniq.end());
  }
  auto paths = enumerate_paths(S, ctx.mu_pp_i, p0, ctx.Cx, endpt, /*require_lattice=*/true,
                               1000000, nullptr, &init_dirs);
  for (const auto& pi : paths) {
    const Point& y = pi.endpoint();
    IVec nu = to_i(y);
    LocalChamber Cym = canonical(S, pr_point(S, y, ctx.Cx));
    for (const auto& dec : enumerate_decorations(S, pi)) {
      StructurePoly base = factor_a0(S, ctx, dec);
      if (base == StructurePoly::zero(S)) continue;
      bool dead = false;
      for (size_t k = 1; k < pi.directions.size(); ++k) {
        base = base * factor_ak(S, ctx, dec, k);
        if (base == StructurePoly::zero(S)) {
          dead = true;
          break;
        }
      }
      if (dead) continue;
      GalleryType il = trailing_type(S, ctx, dec, Cym);
      std::set<WeylElt> ups;
      for (const auto& e : reach_set(S, Cym.dir, il.word)) {
        WeylElt dneg = (Cym.sign < 0) ? e : neg_rep_dir(S, LocalChamber{y, Cym.sign, e});
        ups.insert(dneg.mul(ctx.target_y));
      }
      for (const auto& up : ups) {
        if (target_u && !(up == target_u->w)) continue;
        StructurePoly al = factor_al(S, ctx, y, Cym, il, up);
        if (al == StructurePoly::zero(S)) continue;
        AffineWeylElt u{nu, up};
        auto it = out.find(u);
        if (it == out.end())
          out.emplace(u, base * al);
        else
          it->second = it->second + base * al;
      }
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = (it->second == StructurePoly::zero(S)) ? out.erase(it) : std::next(it);
  return out;
}

// Case mu in V_0 (right factor translates along the wall-free directions).
inline ProductResult product_mu_zero(const System& S, const AffineWeylElt& w,
                                     const AffineWeylElt& v, const AffineWeylElt* target_u,
                                     std::mt19937* rng) {
  ElemClass lc = element_class(S, w.lambda);
  LocalChamber Cx{Point(S.d, Rat(0)), +1, WeylElt::identity(S)};
  IVec nu = w.lambda;
  {
    IVec wl = w.w.mat.apply(v.lambda);
    for (size_t i = 0; i < nu.size(); ++i) nu[i] += wl[i];
  }
  Point z0 = to_q(w.lambda);
  Point y = to_q(nu);
  LocalChamber Czm = canonical(S, pr_point(S, z0, Cx));
  // target end chamber at z0, independent of u'
  LocalChamber endc{};
  if (lc == ElemClass::V0) {
    if (Czm.sign < 0) fail("Internal", "backward projection not positive in the V0 case");
    endc = LocalChamber{z0, +1, Czm.dir.mul(w.w)};
  } else {
    endc = LocalChamber{z0, +1,
                        neg_rep_dir(S, Czm).mul(w_lambda_plus(S, to_q(w.lambda)).mul(w.w))};
  }
  GalleryType type{detail::choose_word(S, v.w.inverse(), rng)};
  ProductResult out;
  std::set<WeylElt> ups;
  for (const auto& g : reach_set(S, WeylElt::identity(S), type.word))
    ups.insert(endc.dir.mul(g.inverse()));
  for (const auto& up : ups) {
    AffineWeylElt u{nu, up};
    if (target_u && !(u == *target_u)) continue;
    LocalChamber Cy{y, +1, up};
    LocalChamber Czp = pr_point(S, z0, Cy);
    StructurePoly c = gallery_sum(S, Czp, Czm, type, endc);
    if (!(c == StructurePoly::zero(S))) out.emplace(u, std::move(c));
  }
  return out;
}

// Case lambda in V_0, mu spherical.
inline ProductResult product_lambda_zero(const System& S, const AffineWeylElt& w,
                                         const AffineWeylElt& v, const AffineWeylElt* target_u,
                                         std::mt19937* rng) {
  ProductContext ctx = make_context(S, w, v, /*left_spherical=*/false, rng);
  Point z0 = to_q(w.lambda);
  LocalChamber Czm = canonical(S, pr_point(S, z0, ctx.Cx));
  if (Czm.sign < 0) fail("Internal", "backward projection not positive in the V0 case");
  LocalChamber endc{z0, +1, Czm.dir.mul(w.w)};
  GalleryType type{detail::choose_word(S, ctx.w_vinvmu.mul(v.w.inverse()), rng)};
  std::set<WeylElt> gs;
  for (const auto& g : reach_set(S, WeylElt::identity(S), type.word))
    gs.insert(endc.dir.mul(g.inverse()));
  ProductResult out;
  for (const auto& g : gs) {
    // condition (b): the start chamber direction determines the endpoint
    QVec ymz = g.mat.apply(ctx.mu_pp);
    Point y = q_add(z0, ymz);
    if (!is_integral(y)) continue;
    IVec nu = to_i(y);
    LocalChamber Czp{z0, +1, g};
    // condition (c) pins u'
    LocalChamber Cyy = pr_point(S, y, Czp);
    WeylElt up = neg_rep_dir(S, canonical(S, Cyy)).mul(ctx.target_y);
    AffineWeylElt u{nu, up};
    if (target_u && !(u == *target_u)) continue;
    // re-verify (b) against the actual projection from C_y
    LocalChamber Cy{y, +1, up};
    LocalChamber CzpFromY = pr_point(S, z0, Cy);
    QVec dist = CzpFromY.dir.inv.apply(q_sub(y, z0));
    if (!(dist == ctx.mu_pp)) continue;
    StructurePoly c = gallery_sum(S, CzpFromY, Czm, type, endc);
    if (c == StructurePoly::zero(S)) continue;
    auto it = out.find(u);
    if (it == out.end())
      out.emplace(u, std::move(c));
    else
      it->second = it->second + c;
  }
  return out;
}

inline ProductResult product_dispatch(const System& S, const AffineWeylElt& w,
                                      const AffineWeylElt& v, const AffineWeylElt* target_u,
                                      std::mt19937* rng) {
  ElemClass lc = element_class(S, w.lambda);
  ElemClass rc = element_class(S, v.lambda);
  if (lc == ElemClass::Undecided || rc == ElemClass::Undecided)
    fail("Undecidable", "cone classification cap reached");
  if (lc == ElemClass::Outside || rc == ElemClass::Outside)
    fail("OutsideProvenCases", "translation part outside the generic cone");
  if (rc == ElemClass::V0) return product_mu_zero(S, w, v, target_u, rng);
  if (lc == ElemClass::V0) return product_lambda_zero(S, w, v, target_u, rng);
  return product_spherical(S, w, v, target_u, rng);
}

}  // namespace detail

inline StructurePoly constant_spherical(const System& S, const AffineWeylElt& w,
                                        const AffineWeylElt& v, const AffineWeylElt& u,
                                        std::mt19937* rng = nullptr) {
  if (element_class(S, w.lambda) != ElemClass::Spherical ||
      element_class(S, v.lambda) != ElemClass::Spherical)
    fail("NotSpherical", "both translation parts must be spherical");
  ElemClass uc = element_class(S, u.lambda);
  if (uc == ElemClass::Undecided) fail("Undecidable", "cone classification cap reached");
  if (!S.classical && uc != ElemClass::Spherical) return StructurePoly::zero(S);
  auto r = detail::product_spherical(S, w, v, &u, rng);
  auto it = r.find(u);
  return it == r.end() ? StructurePoly::zero(S) : it->second;
}

inline StructurePoly constant_mu_zero(const System& S, const AffineWeylElt& w,
                                      const AffineWeylElt& v, const AffineWeylElt& u,
                                      std::mt19937* rng = nullptr) {
  if (element_class(S, v.lambda) != ElemClass::V0)
    fail("WrongCase", "right translation part must lie in V0");
  auto r = detail::product_mu_zero(S, w, v, &u, rng);
  auto it = r.find(u);
  return it == r.end() ? StructurePoly::zero(S) : it->second;
}

inline StructurePoly constant_lambda_zero(const System& S, const AffineWeylElt& w,
                                          const AffineWeylElt& v, const AffineWeylElt& u,
                                          std::mt19937* rng = nullptr) {
  if (element_class(S, w.lambda) != ElemClass::V0)
    fail("WrongCase", "left translation part must lie in V0");
  if (element_class(S, v.lambda) != ElemClass::Spherical)
    fail("WrongCase", "right translation part must be spherical");
  auto r = detail::product_lambda_zero(S, w, v, &u, rng);
  auto it = r.find(u);
  return it == r.end() ? StructurePoly::zero(S) : it->second;
}

inline StructurePoly structure_constant(const System& S, const AffineWeylElt& w,
                                        const AffineWeylElt& v, const AffineWeylElt& u,
                                        std::mt19937* rng = nullptr) {
  auto r = detail::product_dispatch(S, w, v, &u, rng);
  auto it = r.find(u);
  return it == r.end() ? StructurePoly::zero(S) : it->second;
}

inline ProductResult product(const System& S, const AffineWeylElt& w, const AffineWeylElt& v,
                             std::mt19937* rng = nullptr) {
  return detail::product_dispatch(S, w, v, nullptr, rng);
}

}  // namespace kmh
