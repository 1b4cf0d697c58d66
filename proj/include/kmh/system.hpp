#pragma once

#include <algorithm>
#include <numeric>

#include "core.hpp"

namespace kmh {

// Immutable context: generalized Cartan matrix, realization, lattice Y = Z^d,
// and the canonical parameter classes.
//
// Parameter symbols are indexed 0..2n-1: symbol i is Q_{i+1} (even levels),
// symbol n+i is Q'_{i+1} (odd levels). param_class maps each symbol to the
// least symbol of its identification class.
struct System {
  size_t n = 0;  // rank
  size_t d = 0;  // realization dimension
  std::vector<IVec> gcm;      // M[i][j] = alpha_j(alpha_i^vee)
  std::vector<IVec> coroots;  // alpha_i^vee in Z^d
  std::vector<IVec> forms;    // alpha_i as covectors on Z^d

  RowSolver form_solver;    // expresses covectors in the alpha-basis
  RowSolver coroot_solver;  // expresses vectors in the alpha^vee-basis

  std::vector<size_t> param_class;  // size 2n, union-find representatives
  std::vector<size_t> class_reps;   // sorted distinct representatives
  bool classical = false;           // W^v finite
  size_t uid = 0;                   // distinguishes systems in caches
  std::vector<IVec> null_forms;     // W-invariant covectors, >= 0 on dominants

  size_t var_index(size_t symbol) const {
    size_t rep = param_class[symbol];
    auto it = std::lower_bound(class_reps.begin(), class_reps.end(), rep);
    return size_t(it - class_reps.begin());
  }

  std::string var_name(size_t var) const {
    size_t rep = class_reps[var];
    if (rep < n) return "Q" + std::to_string(rep + 1);
    return "Qp" + std::to_string(rep - n + 1);
  }

  size_t num_vars() const { return class_reps.size(); }
};

namespace detail {

inline Rat det(std::vector<QVec> m) {
  size_t k = m.size();
  Rat sign(1), d(1);
  for (size_t c = 0; c < k; ++c) {
    size_t p = c;
    while (p < k && q_sign(m[p][c]) == 0) ++p;
    if (p == k) return Rat(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      sign = -sign;
    }
    d *= m[c][c];
    for (size_t r = c + 1; r < k; ++r) {
      if (q_sign(m[r][c]) == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (size_t j = c; j < k; ++j) m[r][j] -= f * m[c][j];
    }
  }
  return sign * d;
}

struct UnionFind {
  std::vector<size_t> p;
  explicit UnionFind(size_t k) : p(k) { std::iota(p.begin(), p.end(), 0); }
  size_t find(size_t x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    p[b] = a;  // keep the least index as representative
  }
};

}  // namespace detail

// Finite-type test: all principal minors of the principal submatrix M_J positive.
inline bool is_finite_type(const System& S, const std::vector<size_t>& J) {
  size_t k = J.size();
  for (size_t mask = 1; mask < (size_t(1) << k); ++mask) {
    std::vector<size_t> idx;
    for (size_t b = 0; b < k; ++b)
      if (mask & (size_t(1) << b)) idx.push_back(J[b]);
    std::vector<QVec> sub(idx.size(), QVec(idx.size()));
    for (size_t r = 0; r < idx.size(); ++r)
      for (size_t c = 0; c < idx.size(); ++c) sub[r][c] = Rat(S.gcm[idx[r]][idx[c]]);
    if (q_sign(detail::det(std::move(sub))) <= 0) return false;
  }
  return true;
}

inline System build_system(size_t n, std::vector<IVec> gcm, size_t d,
                           std::vector<IVec> coroots, std::vector<IVec> forms) {
  System S;
  static size_t next_uid = 0;
  S.uid = ++next_uid;
  S.n = n;
  S.d = d;
  S.gcm = std::move(gcm);
  S.coroots = std::move(coroots);
  S.forms = std::move(forms);

  if (S.gcm.size() != n) fail("BadGCM", "matrix row count");
  for (auto& row : S.gcm)
    if (row.size() != n) fail("BadGCM", "matrix column count");
  for (size_t i = 0; i < n; ++i) {
    if (S.gcm[i][i] != 2) fail("BadGCM", "diagonal entry != 2");
    for (size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      if (S.gcm[i][j] > 0) fail("BadGCM", "positive off-diagonal entry");
      if ((S.gcm[i][j] == 0) != (S.gcm[j][i] == 0)) fail("BadGCM", "asymmetric zero pattern");
    }
  }
  if (S.coroots.size() != n || S.forms.size() != n) fail("YNotBetween", "family count");
  for (size_t i = 0; i < n; ++i)
    if (S.coroots[i].size() != d || S.forms[i].size() != d)
      fail("YNotBetween", "vector dimension");

  S.form_solver = RowSolver(S.forms);
  S.coroot_solver = RowSolver(S.coroots);
  if (S.form_solver.rank() != n) fail("NotFree", "root covectors dependent");
  if (S.coroot_solver.rank() != n) fail("NotFree", "coroots dependent");

  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (pair_i(S.forms[j], S.coroots[i]) != S.gcm[i][j])
        fail("PairingMismatch", "alpha_j(alpha_i^vee) != M_ij");

  // Parameter identifications of the wall parameters.
  detail::UnionFind uf(2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      if (S.gcm[i][j] * S.gcm[j][i] == 1) {  // braid order 3: same W^v-orbit
        uf.unite(i, j);
        uf.unite(n + i, n + j);
      }
      if (S.gcm[i][j] == -1 && S.gcm[j][i] == -1) {
        uf.unite(i, n + i);
        uf.unite(j, n + j);
      }
    }
    // alpha_i(Y) = Z  <=>  gcd of the covector entries is 1.
    Int g = 0;
    for (const auto& x : S.forms[i]) g = boost::multiprecision::gcd(g, boost::multiprecision::abs(x));
    if (g == 1) uf.unite(i, n + i);
  }
  S.param_class.resize(2 * n);
  for (size_t s = 0; s < 2 * n; ++s) S.param_class[s] = uf.find(s);
  S.class_reps = S.param_class;
  std::sort(S.class_reps.begin(), S.class_reps.end());
  S.class_reps.erase(std::unique(S.class_reps.begin(), S.class_reps.end()), S.class_reps.end());

  std::vector<size_t> all(n);
  std::iota(all.begin(), all.end(), 0);
  S.classical = is_finite_type(S, all);

  // W-invariant covectors nonnegative on the dominant cone, one per affine
  // GCM component (the positive null vector of the component's matrix).  A
  // negative value certifies a vector has no dominant conjugate, which lets
  // the dominance walks fail fast instead of exhausting their caps.
  {
    detail::UnionFind cc(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (S.gcm[i][j] != 0) cc.unite(i, j);
    std::map<size_t, std::vector<size_t>> comps;
    for (size_t i = 0; i < n; ++i) comps[cc.find(i)].push_back(i);
    for (const auto& [rep, idx] : comps) {
      size_t m = idx.size();
      // Kernel of c -> (sum_i c_i * gcm[j][i])_j by Gaussian elimination.
      std::vector<std::vector<Rat>> A(m, std::vector<Rat>(m));
      for (size_t r = 0; r < m; ++r)
        for (size_t c = 0; c < m; ++c) A[r][c] = Rat(S.gcm[idx[r]][idx[c]]);
      std::vector<size_t> pivot_col;
      size_t row = 0;
      for (size_t col = 0; col < m && row < m; ++col) {
        size_t p = row;
        while (p < m && q_sign(A[p][col]) == 0) ++p;
        if (p == m) continue;
        std::swap(A[p], A[row]);
        for (size_t r = 0; r < m; ++r) {
          if (r == row || q_sign(A[r][col]) == 0) continue;
          Rat f = A[r][col] / A[row][col];
          for (size_t c = 0; c < m; ++c) A[r][c] -= f * A[row][c];
        }
        pivot_col.push_back(col);
        ++row;
      }
      if (row + 1 != m) continue;  // kernel not 1-dimensional
      std::vector<Rat> c(m, Rat(0));
      size_t free_col = 0;
      {
        std::vector<bool> is_piv(m, false);
        for (size_t col : pivot_col) is_piv[col] = true;
        while (is_piv[free_col]) ++free_col;
      }
      c[free_col] = Rat(1);
      for (size_t r = 0; r < row; ++r)
        c[pivot_col[r]] = -A[r][free_col] / A[r][pivot_col[r]];
      int sgn = 0;
      bool uniform = true;
      for (const auto& x : c) {
        int s = q_sign(x);
        if (s == 0 || (sgn != 0 && s != sgn)) { uniform = false; break; }
        sgn = s;
      }
      if (!uniform) continue;  // not affine type
      Int lcm_den = 1;
      for (const auto& x : c)
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, x.denominator()) * x.denominator();
      IVec f(d, Int(0));
      for (size_t r = 0; r < m; ++r) {
        Int coef = Int(sgn) * c[r].numerator() * (lcm_den / c[r].denominator());
        for (size_t k = 0; k < d; ++k) f[k] += coef * S.forms[idx[r]][k];
      }
      S.null_forms.push_back(std::move(f));
    }
  }
  return S;
}

}  // namespace kmh
