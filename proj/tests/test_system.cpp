#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace kmh;

TEST_CASE("presets are available") {
  auto names = preset_names();
  for (const char* n : {"a1", "a2", "a1xa1", "a1_affine", "hyp23"}) {
    CHECK(std::find(names.begin(), names.end(), std::string(n)) != names.end());
    CHECK_NOTHROW(preset(n));
  }
  CHECK_THROWS_AS(preset("nope"), MathError);
}

TEST_CASE("preset shapes") {
  System a1 = tst::sys("a1");
  CHECK(a1.n == 1);
  CHECK(a1.d == 1);
  CHECK(a1.classical);
  CHECK(a1.coroots[0] == tst::iv({1}));
  CHECK(a1.forms[0] == tst::iv({2}));

  System aff = tst::sys("a1_affine");
  CHECK(aff.n == 2);
  CHECK(aff.d == 3);
  CHECK_FALSE(aff.classical);
  CHECK(aff.gcm[0][1] == -2);

  CHECK(tst::sys("a2").classical);
  CHECK_FALSE(tst::sys("hyp23").classical);
}

TEST_CASE("parameter classes") {
  // In a2 both nodes are conjugate and every vertex is special: one variable.
  System a2 = tst::sys("a2");
  CHECK(a2.num_vars() == 1);
  CHECK(a2.var_index(0) == a2.var_index(1));
  CHECK(a2.var_index(0) == a2.var_index(2));

  // In a1 the non-special wall carries an independent parameter.
  System a1 = tst::sys("a1");
  CHECK(a1.num_vars() == 2);
  CHECK(a1.var_index(0) != a1.var_index(1));

  // a1_affine: Q1, Qp1 independent; node 2 has equal pair of parameters.
  System aff = tst::sys("a1_affine");
  CHECK(aff.num_vars() == 3);
  CHECK(aff.var_index(0) != aff.var_index(2));
  CHECK(aff.var_index(1) == aff.var_index(3));
}

TEST_CASE("finite-type subsets") {
  System aff = tst::sys("a1_affine");
  CHECK(is_finite_type(aff, {0}));
  CHECK_FALSE(is_finite_type(aff, {0, 1}));

  System a2 = tst::sys("a2");
  CHECK(is_finite_type(a2, {0, 1}));
  CHECK(is_finite_type(a2, {}));
}
