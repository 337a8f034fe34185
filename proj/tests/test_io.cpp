#include "doctest.h"

#include "akstab/hn.hpp"
#include "akstab/json_io.hpp"
#include "akstab/svg.hpp"

using namespace akstab;

namespace {

ObjExpr P(int i, int j, int m = 0) { return ObjExpr::stable(i, j, m); }
GaussianRational G(Rational re, Rational im) { return {re, im}; }

StabilityCondition s0() { return standard_condition(3, 2, {G(1, 0), G(1, 1), G(0, 1)}, {0, 0, 0}); }

size_t count(const std::string& hay, const std::string& needle) {
  size_t n = 0;
  for (size_t p = hay.find(needle); p != std::string::npos; p = hay.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST_CASE("rationals and charges") {
  CHECK(to_json(Rational(3, 4)) == "3/4");
  CHECK(rational_from_json("-3/6") == Rational(-1, 2));
  CHECK(rational_from_json(5) == 5);
  CHECK(gaussian_from_json(json::array({"1/2", 3})) == G(Rational(1, 2), 3));
  auto z = G(Rational(-2, 7), Rational(5, 3));
  CHECK(gaussian_from_json(to_json(z)) == z);
  CHECK_THROWS_AS(rational_from_json("1/0"), Error);
  CHECK_THROWS_AS(rational_from_json("x"), Error);
}

TEST_CASE("expression syntax") {
  CHECK(parse_expr("P12") == P(1, 2));
  CHECK(parse_expr("P_12[-1]") == P(1, 2, -1));
  CHECK(parse_expr("Ext(P23, P12[1])") == ObjExpr::make_ext(P(2, 3), P(1, 2, 1)));
  CHECK(parse_expr("(P11 + P33)") == sum(P(1, 1), P(3, 3)));
  CHECK(parse_expr("0").is_zero());
  CHECK(parse_expr("P(10,11)") == P(10, 11));
  CHECK(expr_from_json(json::parse(R"({"stable": [1, 2], "shift": -1})")) == P(1, 2, -1));
  CHECK(expr_from_json(json::parse(R"({"ext": [{"stable": [2, 3]}, {"stable": [1, 2], "shift": 1}]})")) ==
        ObjExpr::make_ext(P(2, 3), P(1, 2, 1)));
  CHECK(expr_from_json("zero").is_zero());
  CHECK_THROWS_AS(parse_expr("Ext(P12"), Error);
  CHECK_THROWS_AS(parse_expr("Q12"), Error);
  std::vector<ObjExpr> samples{ObjExpr::make_ext(ObjExpr::make_ext(P(1, 1), P(2, 2)), P(2, 2, -1)),
                               sum(P(1, 1, 2), ObjExpr::make_ext(P(2, 3), P(1, 2, 1))), P(3, 3, -4)};
  for (const auto& e : samples) {
    CHECK(parse_expr(to_string(e)) == e);
    CHECK(expr_from_json(expr_tree(e)) == e);
    CHECK(expr_from_json(to_json(e)) == e);
  }
}

TEST_CASE("conditions round-trip") {
  auto S = s0();
  auto j = to_json(S);
  CHECK(same_condition(condition_from_json(j), S));
  CHECK(condition_from_json(j).standard);
  json plain = {{"k", 3}, {"N", 2}, {"Z", json::array({"1", json::array({1, 1}), json::array({0, 1})})}};
  CHECK(same_condition(condition_from_json(plain), S));

  auto k2 = standard_condition(2, 2, {G(1, 0), G(0, Rational(1, 4))}, {0, 0});
  auto ev = walls_on_segment(k2, {G(1, 0), G(Rational(1, 4), Rational(-1, 8))});
  REQUIRE(ev.size() == 1);
  auto T = cross(k2, ev[0]);
  REQUIRE(!T.stable(1, 2).handle.history.empty());
  auto back = condition_from_json(to_json(T));
  CHECK(same_condition(back, T));
  CHECK(to_json(back).dump() == to_json(T).dump());

  auto w = wall_from_json(to_json(ev[0]));
  CHECK(w.time == ev[0].time);
  CHECK(w.classes == ev[0].classes);
  CHECK(w.kind == ev[0].kind);
  CHECK(w.after == ev[0].after);
  CHECK(same_condition(cross(k2, w), T));
}

TEST_CASE("HN filtrations round-trip") {
  auto S = s0();
  auto f = hn(S, ObjExpr::make_ext(P(2, 3), P(1, 2, 1)));
  auto g = hn_from_json(to_json(f));
  CHECK(same_filtration(f, g));
  CHECK(to_json(g).dump() == to_json(f).dump());
  CHECK(to_json(f)["factors"][1]["phase"]["decimal"].get<double>() == doctest::Approx(0.5));
}

TEST_CASE("configurations and errors") {
  Configuration c{{G(0, 0), G(1, Rational(1, 3))}};
  CHECK(configuration_from_json(to_json(c)).points == c.points);
  auto e = error_json(Error(ErrorCode::NonGenericPath, "x"));
  CHECK(e["error"] == "NonGenericPath");
}

TEST_CASE("svg output") {
  auto S = s0();
  auto doc = svg_condition(S);
  CHECK(count(doc, "<circle") == 4);
  CHECK(count(doc, "<line") == 6);
  CHECK(doc == svg_condition(s0()));
  auto k1 = standard_condition(1, 2, {G(1, 1)}, {0});
  auto d1 = svg_condition(k1);
  CHECK(count(d1, "<circle") == 2);
  CHECK(count(d1, "<line") == 1);

  auto k2 = standard_condition(2, 2, {G(1, 0), G(0, Rational(1, 4))}, {0, 0});
  auto verts = rotation_path(k2.Z, 2, 8, 2);
  std::vector<WallEvent> ev;
  track_path(k2, verts, &ev);
  auto loop = svg_loop(k2.Z, verts, ev);
  // the closing vertex repeats the start: one frame per side
  CHECK(count(loop, "class=\"frame ") == verts.size());
  CHECK(count(loop, "wall-hit") > 0);
  CHECK(loop == svg_loop(k2.Z, verts, ev));
}
