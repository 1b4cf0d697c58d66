#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace kmh;

namespace {
Point pt1(Rat x) { return Point{x}; }
}  // namespace

TEST_CASE("chamber basics") {
  System a1 = tst::sys("a1");
  LocalChamber C{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  // In a classical system the negative side is the positive side twisted by w0.
  LocalChamber Cm{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  LocalChamber Cw{pt1(Rat(0)), +1, simple_reflection(a1, 0)};
  CHECK(chambers_equal(a1, Cm, Cw));
  CHECK_FALSE(chambers_equal(a1, C, Cw));
  CHECK(chambers_equal(a1, opposite(C), Cm));

  LocalChamber Ct = translate(C, pt1(Rat(3)));
  CHECK(Ct.vertex == pt1(Rat(3)));
}

TEST_CASE("vectorial distance and Chasles relation") {
  System a1 = tst::sys("a1");
  LocalChamber Cx{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  LocalChamber Cy{pt1(Rat(1)), +1, simple_reflection(a1, 0)};
  LocalChamber Cz{pt1(Rat(2)), +1, WeylElt::identity(a1)};

  AffineWeylElt d = w_distance(a1, Cx, Cy);
  CHECK(d == tst::elt(a1, "t[1]*s1"));
  CHECK(w_distance(a1, Cx, Cy).mul(w_distance(a1, Cy, Cz)) == w_distance(a1, Cx, Cz));
  CHECK(w_distance(a1, Cx, Cx) == AffineWeylElt::identity(a1));
}

TEST_CASE("codistance at a point") {
  System a1 = tst::sys("a1");
  LocalChamber Cp{pt1(Rat(0)), -1, WeylElt::identity(a1)};
  LocalChamber Cq{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  CHECK(codistance(a1, Cp, Cq) == WeylElt::identity(a1));
  LocalChamber Cr{pt1(Rat(0)), +1, simple_reflection(a1, 0)};
  CHECK(codistance(a1, Cp, Cr) == simple_reflection(a1, 0));
}

TEST_CASE("star action") {
  System a1 = tst::sys("a1");
  LocalChamber C0{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  AffineWeylElt g = tst::elt(a1, "t[1]*s1");
  LocalChamber moved = star(a1, C0, g);
  LocalChamber expect{pt1(Rat(1)), +1, simple_reflection(a1, 0)};
  CHECK(chambers_equal(a1, moved, expect));
  LocalChamber C1{pt1(Rat(0)), +1, simple_reflection(a1, 0)};
  CHECK(residue_distance(a1, C0, C1) == simple_reflection(a1, 0));
}

TEST_CASE("projection to a point") {
  System a1 = tst::sys("a1");
  LocalChamber Cp{pt1(Rat(1)), +1, WeylElt::identity(a1)};
  LocalChamber Cm{pt1(Rat(1)), -1, WeylElt::identity(a1)};
  LocalChamber expect{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  CHECK(chambers_equal(a1, pr_point(a1, pt1(Rat(0)), Cp), expect));
  CHECK(chambers_equal(a1, pr_point(a1, pt1(Rat(0)), Cm), expect));
  // Projecting to the chamber's own vertex is the identity.
  CHECK(chambers_equal(a1, pr_point(a1, pt1(Rat(1)), Cp), Cp));
}

TEST_CASE("projection to a segment germ") {
  System a1 = tst::sys("a1");
  LocalChamber C0{pt1(Rat(0)), +1, WeylElt::identity(a1)};
  SegmentGerm forward{pt1(Rat(0)), tst::qv({Rat(1)})};
  // The germ lies in the closure of C0, so the projection is C0 itself.
  CHECK(chambers_equal(a1, pr_germ(a1, forward, C0), C0));
  // A regular germ determines its own chamber regardless of the source.
  LocalChamber Cop{pt1(Rat(0)), +1, simple_reflection(a1, 0)};
  CHECK(chambers_equal(a1, pr_germ(a1, forward, Cop), C0));

  System a2 = tst::sys("a2");
  Point o(2, Rat(0));
  LocalChamber D0{o, +1, WeylElt::identity(a2)};
  // Germ sitting on the alpha_1 wall, projected from the dominant chamber.
  SegmentGerm wall{o, tst::qv({Rat(1), Rat(2)})};
  CHECK(pair_q(a2.forms[0], wall.direction) == Rat(0));
  CHECK(chambers_equal(a2, pr_germ(a2, wall, D0), D0));
}

TEST_CASE("true walls and wall parameters") {
  System a1 = tst::sys("a1");
  RealRoot a = simple_root(a1, 0);
  CHECK(is_true_wall(a1, a, pt1(Rat(0))));
  CHECK_FALSE(is_true_wall(a1, a, pt1(Rat(1, 4))));
  CHECK(is_true_wall(a1, a, pt1(Rat(1, 2))));

  CHECK(wall_parameter(a1, a, 0) == tst::Q(a1, 1));
  CHECK(wall_parameter(a1, a, 1) == tst::Qp(a1, 1));
  CHECK(wall_parameter(a1, a, -2) == tst::Q(a1, 1));
}
