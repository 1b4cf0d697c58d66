#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"

using namespace kmh;

TEST_CASE("simple reflections act on coroots") {
  System a1 = tst::sys("a1");
  CHECK(simple_reflection(a1, 0).mat.apply(tst::iv({1})) == tst::iv({-1}));

  System aff = tst::sys("a1_affine");
  // r_1(alpha_2^vee) = alpha_2^vee + 2 alpha_1^vee
  CHECK(simple_reflection(aff, 0).mat.apply(aff.coroots[1]) == tst::iv({2, 1, 0}));
}

TEST_CASE("words, lengths, reduced words") {
  System a2 = tst::sys("a2");
  WeylElt w = from_word(a2, {0, 1, 0});
  CHECK(length(a2, w) == 3);
  CHECK(reduced_word(a2, w) == std::vector<size_t>{0, 1, 0});
  CHECK(from_word(a2, {1, 0, 1}) == w);

  System aff = tst::sys("a1_affine");
  WeylElt u = from_word(aff, {0, 1, 0, 1, 0, 1});
  CHECK(length(aff, u) == 6);

  CHECK(from_word(a2, {}) == WeylElt::identity(a2));
  CHECK(left_descent(a2, w, 0));
  CHECK(right_descent(a2, w, 0));
  CHECK_FALSE(left_descent(a2, WeylElt::identity(a2), 1));
}

TEST_CASE("inversion sets") {
  System a2 = tst::sys("a2");
  WeylElt w = from_word(a2, {0, 1});
  auto inv = inversion_set(a2, w);
  std::set<QVec> coords;
  for (const auto& r : inv) coords.insert(r.coords);
  std::set<QVec> expect{tst::qv({Rat(1), Rat(0)}), tst::qv({Rat(1), Rat(1)})};
  CHECK(coords == expect);
  CHECK(inversion_set(a2, WeylElt::identity(a2)).empty());
  CHECK(inversion_set(a2, from_word(a2, {0, 1, 0})).size() == 3);
}

TEST_CASE("roots and reflections") {
  System a2 = tst::sys("a2");
  RealRoot a1r = simple_root(a2, 0);
  CHECK(a1r.positive());
  RealRoot moved = act_root(a2, simple_reflection(a2, 1), a1r);
  CHECK(moved.coords == tst::qv({Rat(1), Rat(1)}));
  CHECK(reflection(a2, moved) == from_word(a2, {1, 0, 1}));
}

TEST_CASE("dominance walk") {
  System a1 = tst::sys("a1");
  auto d = dominantize(a1, tst::qv({Rat(-1)}));
  REQUIRE(d);
  CHECK(d->dom == tst::qv({Rat(1)}));
  CHECK(d->m == simple_reflection(a1, 0));
  CHECK(d->J.empty());

  System aff = tst::sys("a1_affine");
  QVec v0 = tst::qv({Rat(1), Rat(1), Rat(0)});
  auto dv = dominantize(aff, v0);
  REQUIRE(dv);
  CHECK(dv->dom == v0);
  CHECK(dv->m == WeylElt::identity(aff));
  CHECK(dv->J == std::vector<size_t>{0, 1});
}

TEST_CASE("cone classification") {
  System aff = tst::sys("a1_affine");
  CHECK(classify_cone(aff, tst::qv({Rat(1), Rat(1), Rat(0)})) == ConeClass::V0);
  CHECK(classify_cone(aff, tst::qv({Rat(0), Rat(0), Rat(1)})) == ConeClass::Interior);
  CHECK(classify_cone(aff, tst::qv({Rat(1), Rat(0), Rat(0)})) == ConeClass::Undecided);
  CHECK(classify_cone(aff, tst::qv({Rat(0), Rat(0), Rat(-1)})) == ConeClass::NegativeCone);

  System a1 = tst::sys("a1");
  CHECK(classify_cone(a1, tst::qv({Rat(2)})) == ConeClass::Interior);
  CHECK(classify_cone(a1, tst::qv({Rat(0)})) == ConeClass::V0);
}

TEST_CASE("longest elements of finite parabolics") {
  System a2 = tst::sys("a2");
  WeylElt w0 = longest_element(a2, {0, 1});
  CHECK(length(a2, w0) == 3);
  CHECK(w0 == from_word(a2, {0, 1, 0}));

  System ab = tst::sys("a1xa1");
  CHECK(longest_element(ab, {0, 1}) == from_word(ab, {0, 1}));
  CHECK(length(ab, longest_element(ab, {0, 1})) == 2);

  System aff = tst::sys("a1_affine");
  CHECK_THROWS_AS(longest_element(aff, {0, 1}), MathError);
}

TEST_CASE("minimal representative of the dominant chamber at a point") {
  System a2 = tst::sys("a2");
  CHECK(w_lambda_plus(a2, tst::qv({Rat(1), Rat(1)})) == WeylElt::identity(a2));
  CHECK(w_lambda_plus(a2, tst::qv({Rat(0), Rat(0)})) == longest_element(a2, {0, 1}));
  // alpha_1(lambda) = 1, alpha_2(lambda) = 0
  CHECK(w_lambda_plus(a2, tst::qv({Rat(2, 3), Rat(1, 3)})) == simple_reflection(a2, 1));
}

TEST_CASE("orbits") {
  System a1 = tst::sys("a1");
  auto orb = weyl_orbit(a1, tst::qv({Rat(1)}));
  CHECK(orb.size() == 2);

  System aff = tst::sys("a1_affine");
  CHECK_THROWS_AS(weyl_orbit(aff, tst::qv({Rat(0), Rat(0), Rat(1)}), 100), MathError);
}
