#include "doctest.h"

#include "akstab/sample.hpp"
#include "akstab/walls.hpp"

using namespace akstab;

namespace {

ObjExpr P(int i, int j, int m = 0) { return ObjExpr::stable(i, j, m); }
GaussianRational G(Rational re, Rational im) { return {re, im}; }

StabilityCondition k2() { return standard_condition(2, 2, {G(1, 0), G(0, Rational(1, 4))}, {0, 0}); }

}  // namespace

TEST_CASE("walls on simple segments") {
  auto S = k2();
  CHECK(walls_on_segment(S, S.Z).empty());
  try {
    walls_on_segment(S, {G(1, 0), G(0, Rational(-1, 4))});
    FAIL("expected MassVanishes");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::MassVanishes);
  }
  auto ev = walls_on_segment(S, {G(1, 0), G(Rational(-1, 4), Rational(-1, 8))});
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].classes.size() == 3);
  CHECK(ev[0].kind == WallKind::Antiparallel);
  CHECK(to_string(ev[0].time) == "2/3");
}

TEST_CASE("crossing rules for k = 2") {
  auto S = k2();
  // Z(P_2) passes the positive real axis: P_12 becomes P_2 # P_1
  auto down = std::vector<GaussianRational>{G(1, 0), G(Rational(1, 4), Rational(-1, 8))};
  auto ev = walls_on_segment(S, down);
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == WallKind::Parallel);
  auto T = cross(S, ev[0]);
  CHECK(T.stable(1, 2).object == ObjExpr::make_ext(P(2, 2), P(1, 1)));
  CHECK(T.stable(1, 1).object == P(1, 1));
  CHECK(is_simple(T).simple);
  auto back = walls_on_segment(T, S.Z);
  REQUIRE(back.size() == 1);
  CHECK(same_condition(cross(T, back[0]), S));

  // Z(P_2) passes the negative real axis: the heaviest class [P_1] changes
  auto left = move_along(S, {G(1, 0), G(Rational(-1, 4), Rational(1, 8))});
  ev = walls_on_segment(left, {G(1, 0), G(Rational(-1, 4), Rational(-1, 8))});
  REQUIRE(ev.size() == 1);
  CHECK(ev[0].kind == WallKind::Antiparallel);
  auto U = cross(left, ev[0]);
  CHECK(U.stable(1, 1).object == ObjExpr::make_ext(P(1, 2), P(2, 2, -1)));
  CHECK(is_simple(U).simple);
  CHECK(check_axioms(U, {}).pass);
}

TEST_CASE("collision without morphisms leaves the stables alone") {
  auto S = standard_condition(3, 2, {G(1, 0), G(1, 1), G(-1, 2)}, {0, 0, 0});
  // rotate Z(P_3) down to the positive real axis side
  auto target = S.Z;
  target[2] = G(3, -1);
  std::vector<WallEvent> ev;
  auto T = move_along(S, {G(1, 0), G(1, 1), G(-1, 2)}, &ev);
  CHECK(ev.empty());
  auto walls = walls_on_segment(S, {G(1, 0), G(1, 1), G(2, Rational(-1, 10))});
  bool saw_pair = false;
  auto cur = S;
  for (const auto& e : walls) {
    auto next = cross(cur, e);
    if (e.classes == std::vector<std::pair<int, int>>{{1, 1}, {3, 3}}) {
      saw_pair = true;
      for (size_t t = 0; t < cur.stables.size(); ++t) CHECK(next.stables[t].object == cur.stables[t].object);
    }
    CHECK(is_simple(next).simple);
    cur = next;
  }
  CHECK(saw_pair);
}

TEST_CASE("is_simple") {
  auto S = standard_condition(3, 2, {G(1, 0), G(1, 1), G(0, 1)}, {0, 0, 0});
  CHECK(is_simple(S).simple);
  auto rep = is_simple(S, true);
  CHECK_FALSE(rep.literal_discrepancies.empty());
  auto bad = S;
  bad.stables.pop_back();
  CHECK_FALSE(is_simple(bad).simple);
  auto S3 = standard_condition(3, 3, {G(1, 0), G(1, 1), G(0, 1)}, {0, 0, 0});
  CHECK(is_simple(S3).simple);
}

TEST_CASE("crossing is an involution on random segments") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> c(-6, 6);
  int crossed = 0;
  for (int trial = 0; crossed < 40 && trial < 400; ++trial) {
    int k = 2 + trial % 3;
    auto S = random_standard(k, 2, rng);
    std::vector<GaussianRational> target;
    for (int t = 0; t < k; ++t) target.push_back(G(c(rng), c(rng)));
    std::vector<WallEvent> ev;
    try {
      ev = walls_on_segment(S, target);
    } catch (const Error&) {
      continue;
    }
    auto cur = S;
    for (const auto& e : ev) {
      auto next = cross(cur, e);
      CHECK(next.stables.size() == static_cast<size_t>(k * (k + 1) / 2));
      CHECK(is_simple(next).simple);
      auto back = walls_on_segment(next, cur.Z);
      REQUIRE(back.size() == 1);
      CHECK(same_condition(cross(next, back[0]), cur));
      cur = next;
      ++crossed;
    }
  }
  CHECK(crossed >= 40);
}

TEST_CASE("generator loop for k = 2") {
  auto S = k2();
  auto rep = generator_loop(S, 2, 8);
  CHECK(rep.all_match);
  CHECK(S.cat().iso(rep.final_condition.stable(1, 1).object,
                    ObjExpr::make_ext(ObjExpr::make_ext(P(1, 1), P(2, 2)), P(2, 2, -1))));
  CHECK(rep.k_action == rep.k_predicted);
  auto half = generator_loop(S, 2, 8, 1);
  CHECK(half.all_match);
  CHECK_THROWS_AS(generator_loop(S, 1, 8), Error);
}

TEST_CASE("generator loops for k = 3") {
  auto S = standard_condition(3, 2, {G(1, 0), G(Rational(1, 5), Rational(1, 5)), G(Rational(-1, 10), 1)}, {0, 0, 0});
  auto rep = generator_loop(S, 2, 8);
  CHECK(rep.all_match);
  CHECK(rep.k_action == rep.k_predicted);
  auto S1 = standard_condition(3, 2, {G(Rational(1, 5), 0), G(1, 1), G(Rational(-1, 10), 1)}, {0, 0, 0});
  CHECK(generator_loop(S1, 1, 12).all_match);
  auto S3 = standard_condition(3, 2, {G(1, 0), G(1, 2), G(Rational(-1, 50), Rational(1, 5))}, {0, 0, 0});
  CHECK(generator_loop(S3, 3, 8).all_match);
}
