// Command-line interface: products, structure constants, path and gallery
// enumeration, and self-verification suites over the shipped presets.
//
// Exit codes: 0 success, 1 mathematical error, 2 usage error, 3 verification
// failure.
#include <CLI11.hpp>
#include <iostream>
#include <random>

#include "kmh/json_io.hpp"
#include "kmh/oracle.hpp"
#include "kmh/parse.hpp"
#include "kmh/presets.hpp"
#include "kmh/structure.hpp"

namespace {

using namespace kmh;

constexpr int kExitMath = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

// --- verification suites -----------------------------------------------

struct Suite {
  std::vector<AffineWeylElt> elements;
  size_t oracle_length = 0;  // affine-length bound for oracle sweeps
};

std::vector<WeylElt> short_weyl_elements(const System& S, size_t maxlen) {
  std::vector<WeylElt> out{WeylElt::identity(S)};
  std::set<IMat> seen{out[0].mat};
  for (size_t h = 0; h < out.size(); ++h) {
    if (length(S, out[h]) >= maxlen) continue;
    for (size_t i = 0; i < S.n; ++i) {
      WeylElt nx = out[h].mul(simple_reflection(S, i));
      if (seen.insert(nx.mat).second) out.push_back(nx);
    }
  }
  return out;
}

Suite make_suite(const System& S, const std::string& system_name, const std::string& name) {
  bool small = name == "small";
  if (!small && name != "full") throw CLI::ValidationError("--suite", "unknown suite: " + name);
  Suite suite;
  if (system_name == "a1_affine") {
    IVec d = {0, 0, 1};
    IVec da1 = d;
    for (size_t j = 0; j < S.d; ++j) da1[j] += S.coroots[0][j];
    IVec dd = {0, 0, 2};
    std::vector<IVec> lams = {IVec(S.d, Int(0)), d};
    if (!small) {
      lams.push_back(da1);
      lams.push_back(dd);
    }
    for (const auto& l : lams)
      for (const auto& w : short_weyl_elements(S, small ? 1 : 2)) {
        ElemClass cls = element_class(S, l);
        if (cls == ElemClass::V0 || cls == ElemClass::Spherical)
          suite.elements.push_back(AffineWeylElt{l, w});
      }
    return suite;
  }
  if (!S.classical) throw CLI::ValidationError("--system", "no shipped suite for this system");
  suite.oracle_length = small ? 3 : (S.n == 1 ? 8 : 4);
  Oracle oracle(S);
  std::vector<AffineWeylElt> queue{AffineWeylElt::identity(S)};
  std::set<std::pair<IVec, IMat>> seen{{queue[0].lambda, queue[0].w.mat}};
  for (size_t h = 0; h < queue.size(); ++h) {
    if (oracle.length(queue[h]) <= suite.oracle_length) suite.elements.push_back(queue[h]);
    if (oracle.length(queue[h]) >= suite.oracle_length + 1) continue;
    for (long id : oracle.generator_ids()) {
      AffineWeylElt nx = queue[h].mul(oracle.generator(id));
      if (seen.insert({nx.lambda, nx.w.mat}).second) queue.push_back(nx);
    }
  }
  return suite;
}

using ProductCache = std::map<std::pair<std::pair<IVec, IMat>, std::pair<IVec, IMat>>, ProductResult>;

const ProductResult& cached_product(const System& S, ProductCache& cache, const AffineWeylElt& a,
                                    const AffineWeylElt& b) {
  auto key = std::make_pair(std::make_pair(a.lambda, a.w.mat), std::make_pair(b.lambda, b.w.mat));
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, product(S, a, b)).first;
  return it->second;
}

void accumulate(ProductResult& acc, const AffineWeylElt& u, const StructurePoly& p) {
  auto it = acc.find(u);
  if (it == acc.end())
    acc.emplace(u, p);
  else
    it->second = it->second + p;
}

void strip_zeros(ProductResult& acc) {
  for (auto it = acc.begin(); it != acc.end();)
    it = it->second.is_zero() ? acc.erase(it) : std::next(it);
}

int verify_oracle(const System& S, const Suite& suite) {
  if (suite.oracle_length == 0) {
    std::cerr << "oracle verification needs a classical preset with Y = Q^v\n";
    return kExitVerify;
  }
  Oracle oracle(S);
  for (const auto& w : suite.elements)
    for (const auto& v : suite.elements)
      if (!oracle.compare(w, v).empty()) {
        std::cerr << "oracle mismatch for w=" << element_text(S, w) << " v=" << element_text(S, v)
                  << "\n";
        return kExitVerify;
      }
  std::cout << "oracle: " << suite.elements.size() * suite.elements.size() << " pairs agree\n";
  return 0;
}

int verify_assoc(const System& S, const Suite& suite) {
  ProductCache cache;
  size_t checked = 0;
  for (const auto& a : suite.elements)
    for (const auto& b : suite.elements)
      for (const auto& c : suite.elements) {
        ProductResult lhs, rhs;
        for (const auto& [u, p] : cached_product(S, cache, a, b))
          for (const auto& [u2, p2] : cached_product(S, cache, u, c)) accumulate(lhs, u2, p * p2);
        for (const auto& [u, p] : cached_product(S, cache, b, c))
          for (const auto& [u2, p2] : cached_product(S, cache, a, u)) accumulate(rhs, u2, p2 * p);
        strip_zeros(lhs);
        strip_zeros(rhs);
        if (!(lhs == rhs)) {
          std::cerr << "associativity failure at (" << element_text(S, a) << ", "
                    << element_text(S, b) << ", " << element_text(S, c) << ")\n";
          return kExitVerify;
        }
        ++checked;
      }
  std::cout << "assoc: " << checked << " triples associate\n";
  return 0;
}

// All pairwise products over the suite (cached), for the q1/positivity checks.
ProductCache all_products(const System& S, const Suite& suite) {
  ProductCache cache;
  for (const auto& a : suite.elements)
    for (const auto& b : suite.elements) cached_product(S, cache, a, b);
  return cache;
}

int verify_q1(const System& S, const Suite& suite) {
  std::vector<Rat> ones(S.num_vars(), Rat(1));
  for (const auto& a : suite.elements)
    for (const auto& b : suite.elements) {
      AffineWeylElt ab = a.mul(b);
      for (const auto& [u, p] : product(S, a, b)) {
        Rat val = p.specialize(ones);
        Rat expect = (u == ab) ? Rat(1) : Rat(0);
        if (val != expect) {
          std::cerr << "thin specialization failure for w=" << element_text(S, a)
                    << " v=" << element_text(S, b) << " u=" << element_text(S, u) << "\n";
          return kExitVerify;
        }
      }
    }
  std::cout << "q1: all constants specialize to the thin delta\n";
  return 0;
}

int verify_positivity(const System& S, const Suite& suite) {
  for (const auto& a : suite.elements)
    for (const auto& b : suite.elements)
      for (const auto& [u, p] : product(S, a, b))
        if (!p.to_shifted().nonneg_coeffs()) {
          std::cerr << "negative (Q-1)-coefficient for w=" << element_text(S, a)
                    << " v=" << element_text(S, b) << " u=" << element_text(S, u) << "\n";
          return kExitVerify;
        }
  std::cout << "positivity: all constants nonnegative in the shifted basis\n";
  return 0;
}

int verify_partition(const System& S, const Suite&) {
  // Special vertex (origin) and one non-special vertex per system: the
  // midpoint of the first coroot, where only walls through it are "true".
  Point origin(S.d, Rat(0));
  Point half(S.d, Rat(0));
  for (size_t j = 0; j < S.d; ++j) half[j] = Rat(S.coroots[0][j], 2);
  std::vector<std::vector<size_t>> types;
  std::vector<std::vector<size_t>> queue{{}};
  for (size_t h = 0; h < queue.size(); ++h) {
    if (!queue[h].empty()) types.push_back(queue[h]);
    if (queue[h].size() >= 4) continue;
    for (size_t i = 0; i < S.n; ++i) {
      auto nx = queue[h];
      nx.push_back(i);
      WeylElt w = WeylElt::identity(S);
      bool reduced = true;
      for (size_t j : nx) {
        if (right_descent(S, w, j)) {
          reduced = false;
          break;
        }
        w = w.mul(simple_reflection(S, j));
      }
      if (reduced) queue.push_back(nx);
    }
  }
  size_t checked = 0;
  auto starts = short_weyl_elements(S, 2);
  for (const Point& at : {origin, half})
    for (const auto& word : types)
      for (const auto& g : starts)
        for (int omega_sign : {+1, -1}) {
          LocalChamber start{at, +1, g};
          LocalChamber omega{at, omega_sign, WeylElt::identity(S)};
          StructurePoly sum = StructurePoly::zero(S);
          for (const auto& fg : enumerate_folded(S, start, omega, GalleryType{word}, nullptr))
            sum = sum + fg.monomial;
          StructurePoly expect = minimal_lifting_count(S, start, GalleryType{word});
          if (!(sum == expect)) {
            std::cerr << "partition identity failure (type length " << word.size() << ")\n";
            return kExitVerify;
          }
          ++checked;
        }
  std::cout << "partition: " << checked << " gallery sums match the lifting counts\n";
  return 0;
}

int verify_choices(const System& S, const Suite& suite) {
  ProductCache reference;
  for (const auto& a : suite.elements)
    for (const auto& b : suite.elements) cached_product(S, reference, a, b);
  for (unsigned round = 1; round <= 3; ++round) {
    std::mt19937 rng(round * 7919u);
    for (const auto& a : suite.elements)
      for (const auto& b : suite.elements) {
        ProductResult alt = product(S, a, b, &rng);
        if (!(alt == cached_product(S, reference, a, b))) {
          std::cerr << "choice dependence for w=" << element_text(S, a)
                    << " v=" << element_text(S, b) << " round " << round << "\n";
          return kExitVerify;
        }
      }
  }
  std::cout << "choices: 3 randomized rounds reproduce every product\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Iwahori-Hecke structure constants via paths and folded galleries"};
  app.require_subcommand(1);

  std::string system_name = "a1";
  std::string format = "json";
  unsigned threads = 1;
  app.add_option("--threads", threads, "parallelism bound (results are deterministic)");

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--system", system_name, "preset name")->default_val("a1");
    cmd->add_option("--format", format, "json or csv")->default_val("json");
  };

  std::string w_text, v_text, u_text;
  auto* multiply = app.add_subcommand("multiply", "product T_w * T_v on the double-coset basis");
  add_common(multiply);
  multiply->add_option("--w", w_text)->required();
  multiply->add_option("--v", v_text)->required();

  auto* constant = app.add_subcommand("constant", "single structure constant a^u_{w,v}");
  add_common(constant);
  constant->add_option("--w", w_text)->required();
  constant->add_option("--v", v_text)->required();
  constant->add_option("--u", u_text)->required();

  std::string shape_text, from_text, to_text;
  auto* paths = app.add_subcommand("paths", "Hecke paths of a dominant spherical shape");
  add_common(paths);
  paths->add_option("--shape", shape_text, "shape as an element lambda, e.g. t[1]")->required();
  paths->add_option("--from", from_text, "start point, e.g. [1] or [1/2,0]")->required();
  paths->add_option("--to", to_text, "optional endpoint filter");

  std::string at_text, start_text, omega_text, type_text;
  auto* galleries = app.add_subcommand("galleries", "centrifugally folded galleries in a residue");
  add_common(galleries);
  galleries->add_option("--at", at_text, "vertex point")->required();
  galleries->add_option("--start", start_text, "start chamber, e.g. +s1.s2 or -e")->required();
  galleries->add_option("--omega", omega_text, "folding chamber, e.g. -e")->required();
  galleries->add_option("--type", type_text, "reduced gallery type, e.g. s1.s2")->required();

  std::string check, suite_name = "small";
  auto* verify = app.add_subcommand("verify", "run a named verification suite");
  add_common(verify);
  verify->add_option("check", check, "assoc | oracle | q1 | positivity | partition | choices")
      ->required();
  verify->add_option("--suite", suite_name, "small or full")->default_val("small");

  auto* presets_cmd = app.add_subcommand("presets", "list shipped systems");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (presets_cmd->parsed()) {
      Json out = Json::array();
      for (const auto& name : preset_names()) out.push_back(name);
      emit(Json{{"presets", out}});
      return 0;
    }

    System S = preset(system_name);
    if (format != "json" && format != "csv") {
      std::cerr << "unknown format: " << format << "\n";
      return kExitUsage;
    }

    if (multiply->parsed() || constant->parsed()) {
      AffineWeylElt w = parse_element(S, w_text);
      AffineWeylElt v = parse_element(S, v_text);
      if (constant->parsed()) {
        AffineWeylElt u = parse_element(S, u_text);
        StructurePoly c = structure_constant(S, w, v, u);
        if (format == "csv")
          std::cout << "u,poly\n\"" << element_text(S, u) << "\",\"" << c.text(S) << "\"\n";
        else
          emit(Json{{"system", system_name},
                    {"w", element_json(S, w)},
                    {"v", element_json(S, v)},
                    {"u", element_json(S, u)},
                    {"poly", poly_json(S, c)},
                    {"text", c.text(S)}});
        return 0;
      }
      ProductResult r = product(S, w, v);
      if (format == "csv")
        std::cout << product_csv(S, r);
      else
        emit(product_json(S, system_name, w, v, r));
      return 0;
    }

    if (paths->parsed()) {
      AffineWeylElt shape = parse_element(S, shape_text);
      Point from = parse_point(S, from_text);
      std::optional<Point> to;
      if (!to_text.empty()) to = parse_point(S, to_text);
      LocalChamber Cx{Point(S.d, Rat(0)), +1, WeylElt::identity(S)};
      auto found = enumerate_paths(S, shape.lambda, from, Cx, to ? &*to : nullptr);
      emit(paths_json(S, system_name, found, /*with_decorations=*/true));
      return 0;
    }

    if (galleries->parsed()) {
      Point at = parse_point(S, at_text);
      LocalChamber start = parse_chamber(S, at, start_text);
      LocalChamber omega = parse_chamber(S, at, omega_text);
      GalleryType type{parse_word(S, type_text)};
      auto gs = enumerate_folded(S, start, omega, type, nullptr);
      emit(galleries_json(S, system_name, gs));
      return 0;
    }

    if (verify->parsed()) {
      Suite suite = make_suite(S, system_name, suite_name);
      if (check == "oracle") return verify_oracle(S, suite);
      if (check == "assoc") return verify_assoc(S, suite);
      if (check == "q1") return verify_q1(S, suite);
      if (check == "positivity") return verify_positivity(S, suite);
      if (check == "partition") return verify_partition(S, suite);
      if (check == "choices") return verify_choices(S, suite);
      std::cerr << "unknown check: " << check << "\n";
      return kExitUsage;
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    emit(error_json(e.code(), e.what()));
    return kExitMath;
  }
  return kExitUsage;
}
