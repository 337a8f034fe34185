#include "doctest.h"

#include "akstab/hn.hpp"
#include "akstab/sample.hpp"

using namespace akstab;

namespace {

ObjExpr P(int i, int j, int m = 0) { return ObjExpr::stable(i, j, m); }
GaussianRational G(long re, long im) { return {Rational(re), Rational(im)}; }

StabilityCondition s0() { return standard_condition(3, 2, {G(1, 0), G(1, 1), G(0, 1)}, {0, 0, 0}); }

void check_factor(const HNFactor& f, const std::vector<ObjExpr>& st, double phase) {
  CHECK(f.stables == st);
  CHECK(f.phase.value() == doctest::Approx(phase));
}

}  // namespace

TEST_CASE("hn worked examples") {
  auto S = s0();
  auto f = hn(S, P(1, 3));
  REQUIRE(f.factors.size() == 1);
  check_factor(f.factors[0], {P(1, 3)}, 0.25);

  auto e = ObjExpr::make_ext(P(2, 3), P(1, 2, 1));
  f = hn(S, e);
  REQUIRE(f.factors.size() == 2);
  check_factor(f.factors[0], {P(1, 1, 1)}, 1);
  check_factor(f.factors[1], {P(3, 3)}, 0.5);
  CHECK(valid_filtration(S, e, f));
  CHECK(hn_all_orders(S, e).size() == 1);

  auto d = sum(P(1, 1), P(1, 1, 2));
  f = hn(S, d);
  REQUIRE(f.factors.size() == 2);
  check_factor(f.factors[0], {P(1, 1, 2)}, 2);
  check_factor(f.factors[1], {P(1, 1)}, 0);
  CHECK(valid_filtration(S, d, f));
  // parallel charges: mass equals |Z| although there are two factors
  CHECK(compare_mass(f, charge(S, k_class_expr(d, 3))) == 0);
}

TEST_CASE("hn rejects leaves that are not stable") {
  auto S = s0();
  S.stables[stable_index(1, 3, 3)].object = ObjExpr::make_ext(P(1, 2), P(3, 3));
  try {
    hn(S, sum(P(1, 3), P(1, 1)));
    FAIL("expected an error");
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::NonStableLeaf);
  }
}

TEST_CASE("hn is shift equivariant and fixes stables") {
  auto S = s0();
  for (const auto& x : stable_leaves(S, -1, 1)) {
    auto f = hn(S, x);
    REQUIRE(f.factors.size() == 1);
    CHECK(f.factors[0].stables[0] == x);
  }
  auto leaves = stable_leaves(S, 0, 1);
  for (const auto& e : small_expressions(S, leaves, 2)) {
    auto f = hn(S, e), g = hn(S, shift(e, 1));
    REQUIRE(f.factors.size() == g.factors.size());
    for (size_t t = 0; t < f.factors.size(); ++t) {
      CHECK(g.factors[t].phase == f.factors[t].phase.shifted(1));
      std::vector<ObjExpr> sh;
      for (const auto& s : f.factors[t].stables) sh.push_back(shift(s, 1));
      std::sort(sh.begin(), sh.end(), [](const ObjExpr& a, const ObjExpr& b) { return a.key() < b.key(); });
      CHECK(g.factors[t].stables == sh);
    }
  }
}

TEST_CASE("hn on all small expressions over S0 is valid and confluent") {
  auto S = s0();
  auto leaves = stable_leaves(S, -1, 1);
  int n = 0;
  for (const auto& e : small_expressions(S, leaves, 3)) {
    auto f = hn(S, e);
    std::string why;
    CHECK_MESSAGE(valid_filtration(S, e, f, &why), e.key() << ": " << why);
    auto all = hn_all_orders(S, e);
    CHECK_MESSAGE(all.size() == 1, e.key());
    ++n;
  }
  MESSAGE(n << " expressions");
}

TEST_CASE("hn strategies agree on random towers") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    auto S = random_standard(2 + t % 3, 2, rng);
    auto e = random_tower(S, 4, -1, 1, rng);
    auto a = hn(S, e, RewriteStrategy::Leftmost);
    auto b = hn(S, e, RewriteStrategy::Rightmost);
    auto c = hn(S, e, RewriteStrategy::Random, t);
    CHECK(valid_filtration(S, e, a));
    CHECK_MESSAGE(same_filtration(a, b), e.key());
    CHECK_MESSAGE(same_filtration(a, c), e.key());
  }
}
