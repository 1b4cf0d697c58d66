#pragma once

#include "structure.hpp"

namespace kmh {

// A reduced word over the affine generator set.  Letters 1..n are the simple
// reflections; letter -c (c >= 0, written 0 for the first component) is the
// affine reflection of the c-th irreducible component, acting by
// v -> r_theta(v) + theta^vee.
struct AffineCoxeterElt {
  std::vector<long> word;
  AffineWeylElt coords;
};

namespace detail {

// Solve rows * p = rhs for square nonsingular integer rows.
inline QVec solve_linear(std::vector<QVec> m, QVec rhs) {
  size_t k = m.size();
  for (size_t c = 0; c < k; ++c) {
    size_t p = c;
    while (p < k && q_sign(m[p][c]) == 0) ++p;
    if (p == k) fail("Internal", "singular linear system");
    std::swap(m[p], m[c]);
    std::swap(rhs[p], rhs[c]);
    Rat inv = Rat(1) / m[c][c];
    m[c] = q_scale(inv, m[c]);
    rhs[c] *= inv;
    for (size_t r = 0; r < k; ++r) {
      if (r == c || q_sign(m[r][c]) == 0) continue;
      Rat f = m[r][c];
      m[r] = q_sub(m[r], q_scale(f, m[c]));
      rhs[r] -= f * rhs[c];
    }
  }
  return rhs;
}

}  // namespace detail

// Ground-truth affine Hecke algebra for a classical system with Y = Q^vee.
class Oracle {
public:
  explicit Oracle(const System& S) : S_(S) {
    if (!S.classical) fail("NotClassical", "the oracle needs a finite Weyl group");
    if (S.d != S.n) fail("NotCoroot", "the oracle needs Y = Q^vee");
    {
      std::vector<QVec> m(S.n, QVec(S.d, Rat(0)));
      for (size_t i = 0; i < S.n; ++i)
        for (size_t j = 0; j < S.d; ++j) m[i][j] = Rat(S.coroots[i][j]);
      Rat det = kmh::detail::det(std::move(m));
      if (!(det == Rat(1) || det == Rat(-1))) fail("NotCoroot", "the oracle needs Y = Q^vee");
    }
    // irreducible components of the GCM
    std::vector<size_t> comp(S.n, size_t(-1));
    size_t nc = 0;
    for (size_t i = 0; i < S.n; ++i) {
      if (comp[i] != size_t(-1)) continue;
      std::vector<size_t> stack{i};
      comp[i] = nc;
      while (!stack.empty()) {
        size_t a = stack.back();
        stack.pop_back();
        for (size_t b = 0; b < S.n; ++b)
          if (comp[b] == size_t(-1) && S.gcm[a][b] != 0) {
            comp[b] = nc;
            stack.push_back(b);
          }
      }
      ++nc;
    }
    components_.resize(nc);
    for (size_t i = 0; i < S.n; ++i) components_[comp[i]].push_back(i);

    // highest root per component, by height over the finite positive system
    std::vector<size_t> all(S.n);
    std::iota(all.begin(), all.end(), 0);
    auto positives = inversion_set(S, longest_element(S, all));
    positive_roots_ = positives;
    Int max_height = 0;
    for (size_t c = 0; c < nc; ++c) {
      const RealRoot* best = nullptr;
      Int best_h = -1;
      for (const auto& r : positives) {
        bool in_c = true;
        Int h = 0;
        for (size_t i = 0; i < S.n; ++i) {
          Int coeff = r.coords[i].numerator();
          h += coeff;
          if (coeff != 0 && comp[i] != c) in_c = false;
        }
        if (in_c && h > best_h) {
          best_h = h;
          best = &r;
        }
      }
      theta_.push_back(*best);
      r0_.push_back(AffineWeylElt{best->coroot, reflection(S, *best)});
      if (best_h > max_height) max_height = best_h;
    }

    // generic interior point p* of the fundamental alcove: alpha_i(p*) = 1/N
    Int N = max_height + 1;
    std::vector<QVec> rows(S.n, QVec(S.d, Rat(0)));
    for (size_t i = 0; i < S.n; ++i)
      for (size_t j = 0; j < S.d; ++j) rows[i][j] = Rat(S.forms[i][j]);
    pstar_ = detail::solve_linear(std::move(rows), QVec(S.n, Rat(1, N)));
  }

  size_t num_components() const { return components_.size(); }
  const RealRoot& theta(size_t c) const { return theta_[c]; }

  AffineWeylElt generator(long id) const {
    if (id >= 1) {
      if (size_t(id) > S_.n) fail("ParseError", "generator index out of range");
      return AffineWeylElt{IVec(S_.d, 0), simple_reflection(S_, size_t(id - 1))};
    }
    size_t c = size_t(-id);
    if (c >= r0_.size()) fail("ParseError", "affine generator index out of range");
    return r0_[c];
  }

  StructurePoly generator_parameter(long id) const {
    if (id >= 1) return wall_parameter(S_, simple_root(S_, size_t(id - 1)), 0);
    return wall_parameter(S_, theta_[size_t(-id)], 1);
  }

  // Coxeter length: true walls strictly separating the alcove germ from its image.
  size_t length(const AffineWeylElt& g) const {
    auto it = length_cache_.find(g);
    if (it != length_cache_.end()) return it->second;
    QVec img = g.apply(pstar_);
    size_t count = 0;
    for (const auto& beta : positive_roots_) {
      Rat a = pair_q(beta.form, pstar_);
      Rat b = pair_q(beta.form, img);
      if (b < a) std::swap(a, b);
      Int lo = q_floor(a) + 1;  // a, b are never integral at generic points
      Int hi = q_floor(b);
      if (hi >= lo) count += size_t(Int(hi - lo + 1));
    }
    length_cache_.emplace(g, count);
    return count;
  }

  std::vector<long> generator_ids() const {
    std::vector<long> ids;
    for (size_t c = 0; c < r0_.size(); ++c) ids.push_back(-long(c));
    for (size_t i = 1; i <= S_.n; ++i) ids.push_back(long(i));
    return ids;
  }

  // Reduced affine word by greedy right-descent peeling.
  AffineCoxeterElt to_word(const AffineWeylElt& g0) const {
    AffineCoxeterElt out;
    out.coords = g0;
    AffineWeylElt g = g0;
    std::vector<long> rev;
    size_t len = length(g);
    for (size_t guard = 0; guard <= 4 * len + 4; ++guard) {
      if (len == 0) break;
      bool found = false;
      for (long id : generator_ids()) {
        AffineWeylElt next = g.mul(generator(id));
        size_t nl = length(next);
        if (nl < len) {
          rev.push_back(id);
          g = next;
          len = nl;
          found = true;
          break;
        }
      }
      if (!found) fail("Internal", "no descent found during word factorization");
    }
    if (!(g == AffineWeylElt::identity(S_))) fail("Internal", "word peel did not reach identity");
    out.word.assign(rev.rbegin(), rev.rend());
    return out;
  }

  // Iwahori-Matsumoto product, expanding the right factor letter by letter.
  ProductResult im_product(const AffineWeylElt& w, const AffineWeylElt& v) const {
    ProductResult cur;
    cur.emplace(w, StructurePoly::constant(S_, 1));
    for (long id : to_word(v).word) {
      AffineWeylElt r = generator(id);
      StructurePoly q = generator_parameter(id);
      StructurePoly qm1 = q - StructurePoly::constant(S_, 1);
      ProductResult next;
      auto add = [&](const AffineWeylElt& u, const StructurePoly& c) {
        auto it = next.find(u);
        if (it == next.end())
          next.emplace(u, c);
        else
          it->second = it->second + c;
      };
      for (const auto& [u, c] : cur) {
        AffineWeylElt ur = u.mul(r);
        if (length(ur) > length(u)) {
          add(ur, c);
        } else {
          add(ur, c * q);
          add(u, c * qm1);
        }
      }
      for (auto it = next.begin(); it != next.end();)
        it = (it->second == StructurePoly::zero(S_)) ? next.erase(it) : std::next(it);
      cur = std::move(next);
    }
    return cur;
  }

  // Structural diff between the oracle product and the geometric product.
  struct Diff {
    AffineWeylElt u;
    StructurePoly oracle_value;
    StructurePoly engine_value;
  };

  std::vector<Diff> compare(const AffineWeylElt& w, const AffineWeylElt& v) const {
    ProductResult lhs = im_product(w, v);
    ProductResult rhs = product(S_, w, v);
    std::vector<Diff> diffs;
    auto z = StructurePoly::zero(S_);
    for (const auto& [u, c] : lhs) {
      auto it = rhs.find(u);
      const StructurePoly& o = (it == rhs.end()) ? z : it->second;
      if (!(o == c)) diffs.push_back(Diff{u, c, o});
    }
    for (const auto& [u, c] : rhs)
      if (!lhs.count(u)) diffs.push_back(Diff{u, z, c});
    return diffs;
  }

  const QVec& alcove_point() const { return pstar_; }

private:
  const System& S_;
  std::vector<std::vector<size_t>> components_;
  std::vector<RealRoot> theta_;
  std::vector<AffineWeylElt> r0_;
  std::vector<RealRoot> positive_roots_;
  QVec pstar_;
  mutable std::map<AffineWeylElt, size_t> length_cache_;
};

}  // namespace kmh
