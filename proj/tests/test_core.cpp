#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace kmh;

TEST_CASE("rational helpers") {
  Rat half(Int(1), Int(2));
  CHECK(q_sign(half) == 1);
  CHECK(q_sign(Rat(0)) == 0);
  CHECK(q_sign(Rat(-3)) == -1);
  CHECK(q_floor(half) == 0);
  CHECK(q_ceil(half) == 1);
  CHECK(q_floor(Rat(-1, 2)) == -1);
  CHECK(q_ceil(Rat(-1, 2)) == 0);
  CHECK(is_integral(QVec{Rat(4), Rat(-2)}));
  CHECK_FALSE(is_integral(QVec{Rat(1), half}));
}

TEST_CASE("vector conversions and pairings") {
  IVec v = tst::iv({2, -1});
  QVec q = to_q(v);
  CHECK(q[0] == Rat(2));
  CHECK(to_i(q) == v);

  IVec form = tst::iv({1, 3});
  CHECK(pair_i(form, v) == Int(-1));
  CHECK(pair_q(form, q) == Rat(-1));

  QVec s = q_add(q, q);
  CHECK(s[0] == Rat(4));
  QVec d = q_sub(s, q);
  CHECK(d == q);
  QVec scaled = q_scale(Rat(1, 2), s);
  CHECK(scaled == q);
  CHECK(q_neg(q)[1] == Rat(1));
}

TEST_CASE("integer matrices") {
  IMat id = IMat::identity(2);
  CHECK(id.apply(tst::iv({5, 7})) == tst::iv({5, 7}));

  // Rotation-like matrix composed with itself.
  IMat m(2);
  m.at(0, 1) = -1;
  m.at(1, 0) = 1;
  IMat m2 = m.mul(m);
  CHECK(m2.apply(tst::iv({1, 0})) == tst::iv({-1, 0}));
  CHECK(m.compose_form(tst::iv({1, 0})) == tst::iv({0, -1}));
}

TEST_CASE("errors carry machine-readable codes") {
  try {
    fail("NotReduced", "demo");
    FAIL("expected a throw");
  } catch (const MathError& e) {
    CHECK(e.code() == "NotReduced");
  }
}
