#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace kmh {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::rational<Int>;

using IVec = std::vector<Int>;   // integer vector (coordinates in Y = Z^d, forms, ...)
using QVec = std::vector<Rat>;   // rational vector (points of the apartment)

// Every mathematical failure mode carries a stable code string so the CLI can
// map it to exit status 1 and a machine-readable error object.
class MathError : public std::runtime_error {
public:
  MathError(std::string code, const std::string& msg)
      : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& msg) {
  throw MathError(code, msg);
}

// Sign of an exact rational (denominators are kept positive by boost::rational).
inline int q_sign(const Rat& x) {
  const Int& num = x.numerator();
  return num == 0 ? 0 : (num < 0 ? -1 : 1);
}

inline Int q_floor(const Rat& x) {
  Int q = x.numerator() / x.denominator();
  if (x.numerator() < 0 && x.numerator() % x.denominator() != 0) --q;
  return q;
}

inline Int q_ceil(const Rat& x) { return -q_floor(-x); }

inline QVec to_q(const IVec& v) {
  QVec r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

inline bool is_integral(const QVec& v) {
  for (const auto& x : v)
    if (x.denominator() != 1) return false;
  return true;
}

inline IVec to_i(const QVec& v) {
  IVec r;
  r.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) fail("NotIntegral", "expected a lattice vector");
    r.push_back(x.numerator());
  }
  return r;
}

inline QVec q_add(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline QVec q_sub(const QVec& a, const QVec& b) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline QVec q_scale(const Rat& c, const QVec& a) {
  QVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline QVec q_neg(const QVec& a) { return q_scale(Rat(-1), a); }

inline bool q_is_zero(const QVec& a) {
  for (const auto& x : a)
    if (q_sign(x) != 0) return false;
  return true;
}

// <form, vector> pairing with a rational vector.
inline Rat pair_q(const IVec& form, const QVec& v) {
  Rat s(0);
  for (size_t i = 0; i < form.size(); ++i) s += Rat(form[i]) * v[i];
  return s;
}

inline Int pair_i(const IVec& form, const IVec& v) {
  Int s = 0;
  for (size_t i = 0; i < form.size(); ++i) s += form[i] * v[i];
  return s;
}

// Row-major square integer matrix.
struct IMat {
  size_t n = 0;
  std::vector<Int> a;

  IMat() = default;
  explicit IMat(size_t n_) : n(n_), a(n_ * n_, 0) {}
  Int& at(size_t r, size_t c) { return a[r * n + c]; }
  const Int& at(size_t r, size_t c) const { return a[r * n + c]; }

  static IMat identity(size_t n) {
    IMat m(n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend bool operator==(const IMat& x, const IMat& y) { return x.n == y.n && x.a == y.a; }
  friend bool operator<(const IMat& x, const IMat& y) { return x.a < y.a; }

  IMat mul(const IMat& o) const {
    IMat r(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k) {
        const Int& v = at(i, k);
        if (v == 0) continue;
        for (size_t j = 0; j < n; ++j) r.at(i, j) += v * o.at(k, j);
      }
    return r;
  }

  QVec apply(const QVec& v) const {
    QVec r(n, Rat(0));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        if (at(i, j) != 0) r[i] += Rat(at(i, j)) * v[j];
    return r;
  }

  IVec apply(const IVec& v) const {
    IVec r(n, 0);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) r[i] += at(i, j) * v[j];
    return r;
  }

  // Covector composed with the matrix: (f ∘ M)(v) = f(Mv); returns f·M as a row.
  IVec compose_form(const IVec& f) const {
    IVec r(n, 0);
    for (size_t j = 0; j < n; ++j)
      for (size_t i = 0; i < n; ++i) r[j] += f[i] * at(i, j);
    return r;
  }
};

// Exact rational linear solver: given m row vectors (length d) forming a free
// family, expresses a target row as their combination, if possible.
class RowSolver {
public:
  RowSolver() = default;
  RowSolver(std::vector<IVec> rows) : rows_(std::move(rows)) {
    m_ = rows_.size();
    d_ = m_ ? rows_[0].size() : 0;
    // Gauss-Jordan on the transposed system, tracking the combination.
    std::vector<QVec> work(m_, QVec(d_, Rat(0)));
    for (size_t i = 0; i < m_; ++i)
      for (size_t j = 0; j < d_; ++j) work[i][j] = Rat(rows_[i][j]);
    comb_.assign(m_, QVec(m_, Rat(0)));
    for (size_t i = 0; i < m_; ++i) comb_[i][i] = 1;
    size_t r = 0;
    for (size_t c = 0; c < d_ && r < m_; ++c) {
      size_t p = r;
      while (p < m_ && q_sign(work[p][c]) == 0) ++p;
      if (p == m_) continue;
      std::swap(work[p], work[r]);
      std::swap(comb_[p], comb_[r]);
      Rat inv = Rat(1) / work[r][c];
      work[r] = q_scale(inv, work[r]);
      comb_[r] = q_scale(inv, comb_[r]);
      for (size_t i = 0; i < m_; ++i) {
        if (i == r || q_sign(work[i][c]) == 0) continue;
        Rat f = work[i][c];
        work[i] = q_sub(work[i], q_scale(f, work[r]));
        comb_[i] = q_sub(comb_[i], q_scale(f, comb_[r]));
      }
      pivots_.push_back(c);
      ++r;
    }
    rank_ = r;
  }

  size_t rank() const { return rank_; }

  // Solve: coeffs with sum_i coeffs[i] * rows[i] == target; nullopt if outside span.
  std::optional<QVec> solve(const QVec& target) const {
    QVec coeffs(m_, Rat(0));
    QVec rem = target;
    for (size_t r = 0; r < rank_; ++r) {
      Rat v = rem[pivots_[r]];
      if (q_sign(v) == 0) continue;
      for (size_t i = 0; i < m_; ++i)
        if (q_sign(comb_[r][i]) != 0) coeffs[i] += v * comb_[r][i];
      for (size_t j = 0; j < d_; ++j) {
        Rat acc(0);
        for (size_t i = 0; i < m_; ++i)
          if (q_sign(comb_[r][i]) != 0) acc += comb_[r][i] * Rat(rows_[i][j]);
        rem[j] -= v * acc;
      }
    }
    if (!q_is_zero(rem)) return std::nullopt;
    return coeffs;
  }

  std::optional<QVec> solve(const IVec& target) const { return solve(to_q(target)); }

private:
  std::vector<IVec> rows_;
  std::vector<QVec> comb_;  // comb_[r] expresses reduced row r in original rows
  std::vector<size_t> pivots_;
  size_t m_ = 0, d_ = 0, rank_ = 0;
};

}  // namespace kmh
