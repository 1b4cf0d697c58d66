#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace kmh;

TEST_CASE("elements") {
  System S = tst::sys("a1");
  CHECK(parse_element(S, "e") == AffineWeylElt::identity(S));
  CHECK(parse_element(S, "s1") ==
        (AffineWeylElt{tst::iv({0}), simple_reflection(S, 0)}));
  CHECK(parse_element(S, "t[2]") ==
        (AffineWeylElt{tst::iv({2}), WeylElt::identity(S)}));
  CHECK(parse_element(S, "t[-1]*s1") ==
        (AffineWeylElt{tst::iv({-1}), simple_reflection(S, 0)}));

  System a2 = tst::sys("a2");
  CHECK(parse_element(a2, "s1.s2.s1").w == from_word(a2, {0, 1, 0}));
}

TEST_CASE("element errors carry positions") {
  System S = tst::sys("a1");
  CHECK_THROWS_AS(parse_element(S, "t[1 2]"), ParseError);
  CHECK_THROWS_AS(parse_element(S, "s3"), ParseError);
  CHECK_THROWS_AS(parse_element(S, "s1x"), ParseError);
  CHECK_THROWS_AS(parse_element(S, ""), ParseError);
  try {
    parse_element(S, "t[1 2]");
    FAIL("expected a throw");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("points") {
  System S = tst::sys("a1");
  CHECK(parse_point(S, "[1/2]") == Point{Rat(1, 2)});
  CHECK(parse_point(S, "[-3]") == Point{Rat(-3)});
  CHECK_THROWS_AS(parse_point(S, "[1,2]"), ParseError);
  CHECK_THROWS_AS(parse_point(S, "[1/0]"), ParseError);

  System aff = tst::sys("a1_affine");
  Point p = parse_point(aff, "[0,1/3,-2]");
  CHECK(p == (Point{Rat(0), Rat(1, 3), Rat(-2)}));
}

TEST_CASE("chambers") {
  System S = tst::sys("a1");
  Point o{Rat(0)};
  LocalChamber c = parse_chamber(S, o, "+s1");
  CHECK(c.sign == +1);
  CHECK(c.dir == simple_reflection(S, 0));
  LocalChamber m = parse_chamber(S, o, "-e");
  CHECK(m.sign == -1);
  CHECK(m.dir == WeylElt::identity(S));
  CHECK_THROWS_AS(parse_chamber(S, o, "s1"), ParseError);
}

TEST_CASE("round trips through text") {
  System S = tst::sys("a1");
  for (const char* t : {"e", "s1", "t[2]", "t[-1]*s1"}) {
    AffineWeylElt a = parse_element(S, t);
    CHECK(parse_element(S, element_text(S, a)) == a);
  }
  System aff = tst::sys("a1_affine");
  AffineWeylElt a = parse_element(aff, "t[1,-2,3]*s1.s2");
  CHECK(parse_element(aff, element_text(aff, a)) == a);
}

TEST_CASE("words") {
  System a2 = tst::sys("a2");
  CHECK(parse_word(a2, "s1.s2") == (std::vector<size_t>{0, 1}));
  CHECK(parse_word(a2, "e").empty());
  CHECK_THROWS_AS(parse_word(a2, "s0"), ParseError);
}
