#pragma once

#include <kmh/apartment.hpp>
#include <kmh/core.hpp>
#include <kmh/gallery.hpp>
#include <kmh/hecke_path.hpp>
#include <kmh/parse.hpp>
#include <kmh/poly.hpp>
#include <kmh/presets.hpp>
#include <kmh/structure.hpp>
#include <kmh/system.hpp>
#include <kmh/weyl.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace tst {

inline kmh::System sys(const std::string& name) { return kmh::preset(name); }

inline kmh::AffineWeylElt elt(const kmh::System& S, const std::string& text) {
  return kmh::parse_element(S, text);
}

inline kmh::IVec iv(std::initializer_list<long> xs) {
  kmh::IVec v;
  for (long x : xs) v.push_back(kmh::Int(x));
  return v;
}

inline kmh::QVec qv(std::initializer_list<kmh::Rat> xs) { return kmh::QVec(xs); }

inline kmh::QVec qof(const kmh::IVec& v) { return kmh::to_q(v); }

// Parameter polynomials by 1-based node index.
inline kmh::StructurePoly Q(const kmh::System& S, size_t i) {
  return kmh::StructurePoly::variable(S, S.var_index(i - 1));
}
inline kmh::StructurePoly Qp(const kmh::System& S, size_t i) {
  return kmh::StructurePoly::variable(S, S.var_index(S.n + i - 1));
}
inline kmh::StructurePoly num(const kmh::System& S, long c) {
  return kmh::StructurePoly::constant(S, kmh::Int(c));
}

inline kmh::LocalChamber chm(const kmh::System& S, const kmh::Point& vertex,
                             const std::string& text) {
  return kmh::parse_chamber(S, vertex, text);
}

inline kmh::Point origin(const kmh::System& S) { return kmh::Point(S.d, kmh::Rat(0)); }

inline bool result_equals(
    const kmh::System& S, const kmh::ProductResult& got,
    const std::vector<std::pair<std::string, kmh::StructurePoly>>& expect) {
  if (got.size() != expect.size()) return false;
  for (const auto& [text, poly] : expect) {
    auto it = got.find(elt(S, text));
    if (it == got.end() || !(it->second == poly)) return false;
  }
  return true;
}

}  // namespace tst
