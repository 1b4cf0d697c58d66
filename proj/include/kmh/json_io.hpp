// JSON (and flat CSV) serialization of products, paths, and galleries.
#pragma once

#include <json.hpp>
#include <string>

#include "kmh/gallery.hpp"
#include "kmh/hecke_path.hpp"
#include "kmh/parse.hpp"
#include "kmh/poly.hpp"
#include "kmh/structure.hpp"

namespace kmh {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json int_json(const Int& v) {
  // Keep exactness: emit as a number when it fits, as a string otherwise.
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(static_cast<long long>(v));
  return Json(v.str());
}

inline Json rat_json(const Rat& v) {
  if (v.denominator() == 1) return int_json(v.numerator());
  return Json(v.numerator().str() + "/" + v.denominator().str());
}

inline Json ivec_json(const IVec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(int_json(x));
  return a;
}

inline Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(rat_json(x));
  return a;
}

inline Json word_json(const std::vector<size_t>& word) {
  Json a = Json::array();
  for (size_t i : word) a.push_back(i + 1);
  return a;
}

}  // namespace detail

inline Json element_json(const System& S, const AffineWeylElt& a) {
  return Json{{"lambda", detail::ivec_json(a.lambda)},
              {"word", detail::word_json(reduced_word(S, a.w))}};
}

inline Json poly_json(const System& S, const StructurePoly& p) {
  Json terms = Json::array();
  for (const auto& [exps, coeff] : p.terms) {
    Json exp = Json::object();
    for (size_t v = 0; v < exps.size(); ++v)
      if (exps[v] != 0) exp[S.var_name(v)] = exps[v];
    terms.push_back(Json{{"exp", std::move(exp)}, {"c", detail::int_json(coeff)}});
  }
  return terms;
}

inline Json product_json(const System& S, const std::string& system_name, const AffineWeylElt& w,
                         const AffineWeylElt& v, const ProductResult& result) {
  Json terms = Json::array();
  for (const auto& [u, poly] : result)
    terms.push_back(Json{{"u", element_json(S, u)},
                         {"poly", poly_json(S, poly)},
                         {"text", poly.text(S)}});
  return Json{{"system", system_name},
              {"w", element_json(S, w)},
              {"v", element_json(S, v)},
              {"terms", std::move(terms)}};
}

inline std::string product_csv(const System& S, const ProductResult& result) {
  std::string out = "u,poly\n";
  for (const auto& [u, poly] : result)
    out += "\"" + element_text(S, u) + "\",\"" + poly.text(S) + "\"\n";
  return out;
}

inline Json chamber_json(const System& S, const LocalChamber& C) {
  return Json{{"vertex", detail::point_json(C.vertex)},
              {"sign", C.sign},
              {"word", detail::word_json(reduced_word(S, C.dir))}};
}

inline Json path_json(const System& S, const HeckePath& pi) {
  Json bps = Json::array(), dirs = Json::array(), durs = Json::array(), chains = Json::array();
  for (const auto& p : pi.breakpoints) bps.push_back(detail::point_json(p));
  for (const auto& d : pi.directions) dirs.push_back(detail::ivec_json(d));
  for (const auto& s : pi.durations) durs.push_back(detail::rat_json(s));
  for (const auto& chain : pi.chains) {
    Json c = Json::array();
    for (const auto& beta : chain) c.push_back(detail::ivec_json(beta));
    chains.push_back(std::move(c));
  }
  return Json{{"shape", detail::ivec_json(pi.shape)},
              {"breakpoints", std::move(bps)},
              {"directions", std::move(dirs)},
              {"durations", std::move(durs)},
              {"chains", std::move(chains)}};
}

inline Json paths_json(const System& S, const std::string& system_name,
                       const std::vector<HeckePath>& paths, bool with_decorations) {
  Json arr = Json::array();
  for (const auto& pi : paths) {
    Json j = path_json(S, pi);
    if (with_decorations) {
      Json decs = Json::array();
      for (const auto& dec : enumerate_decorations(S, pi)) {
        Json one = Json::array();
        for (const auto& D : dec.decorations) one.push_back(chamber_json(S, D));
        decs.push_back(std::move(one));
      }
      j["decorations"] = std::move(decs);
    }
    arr.push_back(std::move(j));
  }
  return Json{{"system", system_name}, {"paths", std::move(arr)}};
}

inline Json galleries_json(const System& S, const std::string& system_name,
                           const std::vector<FoldedGallery>& gs) {
  Json arr = Json::array();
  StructurePoly total = StructurePoly::zero(S);
  for (const auto& g : gs) {
    Json folds = Json::array(), classes = Json::array();
    for (bool f : g.folds) folds.push_back(f);
    for (int c : g.step_class) classes.push_back(c);
    arr.push_back(Json{{"folds", std::move(folds)},
                       {"step_class", std::move(classes)},
                       {"end", chamber_json(S, g.end)},
                       {"monomial", poly_json(S, g.monomial)},
                       {"text", g.monomial.text(S)}});
    total = total + g.monomial;
  }
  return Json{{"system", system_name},
              {"galleries", std::move(arr)},
              {"sum", poly_json(S, total)},
              {"sum_text", total.text(S)}};
}

inline Json error_json(const std::string& code, const std::string& message) {
  return Json{{"error", Json{{"code", code}, {"message", message}}}};
}

}  // namespace kmh
