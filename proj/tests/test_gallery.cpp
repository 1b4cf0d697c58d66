#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace kmh;

namespace {
Point pt1(Rat x) { return Point{x}; }
}  // namespace

TEST_CASE("reduced gallery types") {
  System a1 = tst::sys("a1");
  CHECK_NOTHROW(check_reduced(a1, {0}));
  CHECK_THROWS_AS(check_reduced(a1, {0, 0}), MathError);
  System a2 = tst::sys("a2");
  CHECK_NOTHROW(check_reduced(a2, {0, 1, 0}));
}

TEST_CASE("minimal gallery types") {
  System a1 = tst::sys("a1");
  LocalChamber Cm{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  LocalChamber Cm1{pt1(Rat(0)), -1, simple_reflection(a1, 0)};
  CHECK(minimal_gallery_type(a1, Cm, Cm).word.empty());
  CHECK(minimal_gallery_type(a1, Cm, Cm1).word == std::vector<size_t>{0});

  System a2 = tst::sys("a2");
  Point o(2, Rat(0));
  LocalChamber C0{o, +1, WeylElt::identity(a2)};
  LocalChamber C12{o, +1, from_word(a2, {0, 1})};
  CHECK(minimal_gallery_type(a2, C0, C12).word == std::vector<size_t>{0, 1});
}

TEST_CASE("centrifugally folded galleries at a special point") {
  System a1 = tst::sys("a1");
  LocalChamber start{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  LocalChamber omega{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  auto gals = enumerate_folded(a1, start, omega, GalleryType{{0}});
  REQUIRE(gals.size() == 2);

  StructurePoly total = StructurePoly::zero(a1);
  bool saw_fold = false, saw_cross = false;
  for (const auto& g : gals) {
    total = total + g.monomial;
    if (g.folds == std::vector<bool>{true}) {
      saw_fold = true;
      CHECK(g.monomial == tst::Q(a1, 1) - tst::num(a1, 1));
    }
    if (g.folds == std::vector<bool>{false}) {
      saw_cross = true;
      CHECK(g.monomial == tst::num(a1, 1));
    }
  }
  CHECK(saw_fold);
  CHECK(saw_cross);
  CHECK(total == tst::Q(a1, 1));
}

TEST_CASE("no true wall means a single crossing") {
  System a1 = tst::sys("a1");
  LocalChamber start{pt1(Rat(1, 4)), -1, WeylElt::identity(a1)};
  LocalChamber omega{pt1(Rat(1, 4)), +1, WeylElt::identity(a1)};
  auto gals = enumerate_folded(a1, start, omega, GalleryType{{0}});
  REQUIRE(gals.size() == 1);
  CHECK(gals[0].folds == std::vector<bool>{false});
  CHECK(gals[0].monomial == tst::num(a1, 1));
}

TEST_CASE("end filtering") {
  System a1 = tst::sys("a1");
  LocalChamber start{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  LocalChamber omega{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  auto all = enumerate_folded(a1, start, omega, GalleryType{{0}});
  REQUIRE(all.size() == 2);
  for (const auto& g : all) {
    auto filtered = enumerate_folded(a1, start, omega, GalleryType{{0}}, &g.end);
    REQUIRE(filtered.size() == 1);
    CHECK(chambers_equal(a1, filtered[0].end, g.end));
    CHECK(filtered[0].monomial == g.monomial);
  }
}

TEST_CASE("minimal lifting counts") {
  System a1 = tst::sys("a1");
  LocalChamber s0{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  CHECK(minimal_lifting_count(a1, s0, GalleryType{{0}}) == tst::Q(a1, 1));
  LocalChamber sq{pt1(Rat(1, 4)), -1, WeylElt::identity(a1)};
  CHECK(minimal_lifting_count(a1, sq, GalleryType{{0}}) == tst::num(a1, 1));
  LocalChamber sh{pt1(Rat(1, 2)), -1, WeylElt::identity(a1)};
  CHECK(minimal_lifting_count(a1, sh, GalleryType{{0}}) == tst::Qp(a1, 1));
}

TEST_CASE("reachable end directions") {
  System a1 = tst::sys("a1");
  auto rs = reach_set(a1, WeylElt::identity(a1), {0});
  CHECK(rs.size() == 2);
  CHECK(rs.count(WeylElt::identity(a1)) == 1);
  CHECK(rs.count(simple_reflection(a1, 0)) == 1);
}
