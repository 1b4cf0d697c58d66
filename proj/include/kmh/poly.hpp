#pragma once

#include <sstream>

#include "system.hpp"

namespace kmh {

// Exact multivariate polynomial over Z in the canonical parameter variables of
// one System. Exponent vectors are indexed by System::class_reps order.
struct StructurePoly {
  size_t nvars = 0;
  std::map<std::vector<int>, Int> terms;  // exponent vector -> nonzero coefficient

  StructurePoly() = default;
  explicit StructurePoly(size_t nvars_) : nvars(nvars_) {}

  static StructurePoly zero(const System& S) { return StructurePoly(S.num_vars()); }

  static StructurePoly constant(const System& S, Int c) {
    StructurePoly p(S.num_vars());
    if (c != 0) p.terms[std::vector<int>(p.nvars, 0)] = std::move(c);
    return p;
  }

  static StructurePoly variable(const System& S, size_t var, Int coeff = 1) {
    StructurePoly p(S.num_vars());
    std::vector<int> e(p.nvars, 0);
    e[var] = 1;
    if (coeff != 0) p.terms[e] = std::move(coeff);
    return p;
  }

  bool is_zero() const { return terms.empty(); }

  void add_term(const std::vector<int>& e, const Int& c) {
    auto it = terms.find(e);
    if (it == terms.end()) {
      if (c != 0) terms[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  StructurePoly operator+(const StructurePoly& o) const {
    StructurePoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, c);
    return r;
  }

  StructurePoly operator-(const StructurePoly& o) const {
    StructurePoly r = *this;
    for (const auto& [e, c] : o.terms) r.add_term(e, -c);
    return r;
  }

  StructurePoly operator*(const StructurePoly& o) const {
    StructurePoly r(nvars);
    for (const auto& [e1, c1] : terms)
      for (const auto& [e2, c2] : o.terms) {
        std::vector<int> e(nvars, 0);
        for (size_t i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }

  friend bool operator==(const StructurePoly& a, const StructurePoly& b) {
    return a.terms == b.terms;
  }
  friend bool operator!=(const StructurePoly& a, const StructurePoly& b) { return !(a == b); }

  // Exact evaluation at a total assignment (values per canonical variable).
  Rat specialize(const std::vector<Rat>& values) const {
    if (values.size() != nvars) fail("MissingVariable", "assignment must be total");
    Rat acc(0);
    for (const auto& [e, c] : terms) {
      Rat t(c);
      for (size_t i = 0; i < nvars; ++i)
        for (int k = 0; k < e[i]; ++k) t *= values[i];
      acc += t;
    }
    return acc;
  }

  // Change of basis Q_c = (Q_c - 1) + 1: returns the coefficients in the basis
  // of monomials in the shifted variables.
  StructurePoly to_shifted() const {
    StructurePoly r(nvars);
    for (const auto& [e, c] : terms) {
      // expand prod_i ((S_i + 1)^{e_i})
      StructurePoly acc(nvars);
      acc.terms[std::vector<int>(nvars, 0)] = c;
      for (size_t i = 0; i < nvars; ++i) {
        for (int k = 0; k < e[i]; ++k) {
          StructurePoly next(nvars);
          for (const auto& [ee, cc] : acc.terms) {
            next.add_term(ee, cc);
            std::vector<int> up = ee;
            up[i] += 1;
            next.add_term(up, cc);
          }
          acc = std::move(next);
        }
      }
      for (const auto& [ee, cc] : acc.terms) r.add_term(ee, cc);
    }
    return r;
  }

  // Inverse of to_shifted: interpret coefficients in the shifted basis and
  // expand back, substituting S_i = Q_i - 1.
  StructurePoly from_shifted() const {
    StructurePoly r(nvars);
    for (const auto& [e, c] : terms) {
      StructurePoly acc(nvars);
      acc.terms[std::vector<int>(nvars, 0)] = c;
      for (size_t i = 0; i < nvars; ++i) {
        for (int k = 0; k < e[i]; ++k) {
          StructurePoly next(nvars);
          for (const auto& [ee, cc] : acc.terms) {
            next.add_term(ee, -cc);
            std::vector<int> up = ee;
            up[i] += 1;
            next.add_term(up, cc);
          }
          acc = std::move(next);
        }
      }
      for (const auto& [ee, cc] : acc.terms) r.add_term(ee, cc);
    }
    return r;
  }

  bool nonneg_coeffs() const {
    for (const auto& [e, c] : terms)
      if (c < 0) return false;
    return true;
  }

  // Canonical text: monomials in lexicographically descending exponent order.
  std::string text(const System& S) const {
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      const auto& [e, c] = *it;
      Int a = c;
      if (first) {
        if (a < 0) {
          os << "-";
          a = -a;
        }
      } else {
        os << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      bool has_var = false;
      std::ostringstream vars;
      for (size_t i = 0; i < nvars; ++i) {
        if (e[i] == 0) continue;
        if (has_var) vars << "*";
        vars << S.var_name(i);
        if (e[i] > 1) vars << "^" << e[i];
        has_var = true;
      }
      if (!has_var) {
        os << a.str();
      } else {
        if (a != 1) os << a.str() << "*";
        os << vars.str();
      }
    }
    return os.str();
  }
};

}  // namespace kmh
