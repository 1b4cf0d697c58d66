#pragma once

#include <functional>

#include "apartment.hpp"

namespace kmh {

struct GalleryType {
  std::vector<size_t> word;  // must be reduced in W^v
};

inline void check_reduced(const System& S, const std::vector<size_t>& word) {
  WeylElt w = WeylElt::identity(S);
  for (size_t i : word) {
    if (i >= S.n) fail("NotReduced", "letter out of range");
    if (right_descent(S, w, i)) fail("NotReduced", "gallery type word is not reduced");
    w = w.mul(simple_reflection(S, i));
  }
}

// Deterministic minimal gallery type: the lexicographically smallest reduced
// word of the residue distance.
inline GalleryType minimal_gallery_type(const System& S, const LocalChamber& C,
                                        const LocalChamber& Cp) {
  return GalleryType{reduced_word(S, residue_distance(S, C, Cp))};
}

// One enumerated centrifugally folded gallery.
struct FoldedGallery {
  Point base;
  LocalChamber start;
  std::vector<bool> folds;        // true = stall at step j
  std::vector<int> step_class;    // 0 = crossing factor 1, 1 = J1 (fold), 2 = J2
  LocalChamber end;
  StructurePoly monomial;
};

// All galleries of the given reduced type from `start`, centrifugally folded
// with respect to Omega; optionally filtered by end chamber. Canonical order:
// lexicographic in the fold vector (cross < fold).
inline std::vector<FoldedGallery> enumerate_folded(const System& S, const LocalChamber& start,
                                                   const LocalChamber& Omega,
                                                   const GalleryType& type,
                                                   const LocalChamber* end = nullptr) {
  check_reduced(S, type.word);
  if (Omega.vertex != start.vertex) fail("VertexMismatch", "Omega must share the vertex");
  if (end && end->vertex != start.vertex) fail("VertexMismatch", "end must share the vertex");

  const size_t r = type.word.size();
  std::vector<FoldedGallery> out;

  struct Frame {
    WeylElt g;  // accumulated product of the c_j
    StructurePoly mono;
    std::vector<bool> folds;
    std::vector<int> classes;
  };

  // Depth-first, branching cross (c_j = r_i) before fold (c_j = 1).
  Frame init{WeylElt::identity(S), StructurePoly::constant(S, 1), {}, {}};

  auto step_root = [&](const WeylElt& g_after, size_t letter) {
    // beta_j = sign(start) * start.dir * g_after (alpha_letter): positive on C_j.
    RealRoot root = act_root(S, start.dir.mul(g_after), simple_root(S, letter));
    if (start.sign < 0) root = root.negated();
    return root;
  };

  auto emit = [&](Frame& f) {
    LocalChamber endch{start.vertex, start.sign, start.dir.mul(f.g)};
    if (end && !chambers_equal(S, endch, *end)) return;
    out.push_back(FoldedGallery{start.vertex, start, f.folds, f.classes, endch, f.mono});
  };

  // Recursive lambda via explicit stack to keep lexicographic emission order.
  std::function<void(Frame, size_t)> rec = [&](Frame f, size_t j) {
    if (j == r) {
      emit(f);
      return;
    }
    size_t letter = type.word[j];
    {
      // crossing
      Frame g = f;
      g.g = f.g.mul(simple_reflection(S, letter));
      RealRoot beta = step_root(g.g, letter);
      RealRoot bpos = beta.positive() ? beta : beta.negated();
      Rat val = pair_q(bpos.form, start.vertex);
      bool true_wall = (val.denominator() == 1);
      bool separates = root_sign_on_chamber(S, beta.form, Omega) < 0;
      g.folds.push_back(false);
      if (true_wall && separates) {
        g.classes.push_back(2);
        g.mono = g.mono * wall_parameter(S, bpos, val.numerator());
      } else {
        g.classes.push_back(0);
      }
      rec(std::move(g), j + 1);
    }
    {
      // fold (stall): legal only at a true wall separating Omega from C_j
      RealRoot beta = step_root(f.g, letter);
      RealRoot bpos = beta.positive() ? beta : beta.negated();
      Rat val = pair_q(bpos.form, start.vertex);
      if (val.denominator() == 1 && root_sign_on_chamber(S, beta.form, Omega) < 0) {
        Frame g = f;
        g.folds.push_back(true);
        g.classes.push_back(1);
        g.mono = g.mono * (wall_parameter(S, bpos, val.numerator()) -
                           StructurePoly::constant(S, 1));
        rec(std::move(g), j + 1);
      }
    }
  };
  rec(std::move(init), 0);
  return out;
}

// Sum of monomials per end-chamber direction (the common consumption pattern).
inline std::map<WeylElt, StructurePoly> folded_end_sums(const System& S,
                                                        const LocalChamber& start,
                                                        const LocalChamber& Omega,
                                                        const GalleryType& type) {
  std::map<WeylElt, StructurePoly> sums;
  for (auto& g : enumerate_folded(S, start, Omega, type)) {
    LocalChamber e = canonical(S, g.end);
    auto it = sums.find(e.dir);
    if (it == sums.end())
      sums.emplace(e.dir, g.monomial);
    else
      it->second = it->second + g.monomial;
  }
  return sums;
}

// Number of liftings of the minimal gallery of the given type: the product of
// parameters over the true walls it crosses.
inline StructurePoly minimal_lifting_count(const System& S, const LocalChamber& start,
                                           const GalleryType& type) {
  check_reduced(S, type.word);
  StructurePoly mono = StructurePoly::constant(S, 1);
  WeylElt g = WeylElt::identity(S);
  for (size_t letter : type.word) {
    g = g.mul(simple_reflection(S, letter));
    RealRoot root = act_root(S, start.dir.mul(g), simple_root(S, letter));
    if (start.sign < 0) root = root.negated();
    RealRoot bpos = root.positive() ? root : root.negated();
    Rat val = pair_q(bpos.form, start.vertex);
    if (val.denominator() == 1) mono = mono * wall_parameter(S, bpos, val.numerator());
  }
  return mono;
}

// All directions g·(subword product of the type): the chamber directions a
// gallery of this type can end with, relative to start direction g.
inline std::set<WeylElt> reach_set(const System& S, const WeylElt& g,
                                   const std::vector<size_t>& word) {
  std::set<WeylElt> cur{g};
  for (size_t letter : word) {
    std::set<WeylElt> next = cur;
    for (const auto& w : cur) next.insert(w.mul(simple_reflection(S, letter)));
    cur = std::move(next);
  }
  return cur;
}

}  // namespace kmh
