#include "doctest.h"

#include "akstab/monodromy.hpp"

using namespace akstab;

namespace {

ObjExpr P(int i, int j, int m = 0) { return ObjExpr::stable(i, j, m); }
GaussianRational G(Rational re, Rational im) { return {re, im}; }

using Path = std::vector<std::vector<GaussianRational>>;

Path join(std::initializer_list<Path> parts) {
  Path out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

}  // namespace

TEST_CASE("action on the chain") {
  Category cat(2, 2);
  auto c = act_on_chain(cat, {1});
  REQUIRE(c.size() == 2);
  CHECK(c[0] == P(1, 1, -1));
  CHECK(c[1] == ObjExpr::make_ext(P(2, 2), P(1, 1)));
  auto e = act_on_chain(cat, {});
  CHECK(e == std::vector<ObjExpr>{P(1, 1), P(2, 2)});
  Category cat3(3, 2);
  std::vector<BraidWord> words{{1, -1}, {2, 1, -1, 3}, {-2, 2, 2}, {1, 2, -2, -1}};
  for (const auto& w : words) {
    auto x = act_on_chain(cat3, w), y = act_on_chain(cat3, free_reduce(w));
    for (size_t t = 0; t < x.size(); ++t) CHECK(cat3.iso(x[t], y[t]));
  }
}

TEST_CASE("generator loop monodromy for k = 2") {
  auto S = standard_condition(2, 2, {G(1, 0), G(0, Rational(1, 4))}, {0, 0});
  auto rep = monodromy_compare(S, rotation_path(S.Z, 2, 8, 2));
  CHECK(rep.word == BraidWord{2, 2});
  CHECK_FALSE(rep.word_trivial);
  CHECK(rep.objects_match);
  CHECK(rep.k_match);
  CHECK_FALSE(rep.identity_transformation);
  CHECK(rep.consistent);
}

TEST_CASE("out and back loop is trivial") {
  auto S = standard_condition(2, 2, {G(1, 0), G(0, Rational(1, 4))}, {0, 0});
  auto rep = monodromy_compare(S, {{G(1, 0), G(Rational(-1, 3), Rational(-1, 9))}});
  CHECK(rep.word.empty());
  CHECK(!rep.events.empty());
  CHECK(rep.identity_transformation);
  CHECK(rep.objects_match);
  CHECK(rep.consistent);
}

TEST_CASE("commuting generator loops for k = 4") {
  auto S = standard_condition(4, 2, {G(Rational(1, 10), 0), G(1, Rational(1, 2)), G(Rational(1, 20), Rational(1, 20)), G(Rational(-1, 5), 1)},
                              {0, 0, 0, 0});
  auto Z = S.Z;
  Path loop = join({rotation_path(Z, 1, 8, 2), rotation_path(Z, 3, 8, 2), rotation_path(Z, 1, 8, -2), rotation_path(Z, 3, 8, -2)});
  auto rep = monodromy_compare(S, loop);
  CHECK(rep.word_trivial);
  CHECK(rep.identity_transformation);
  CHECK(rep.objects_match);
  CHECK(rep.consistent);
  auto one = monodromy_compare(S, rotation_path(Z, 3, 8, 2));
  CHECK(one.word == BraidWord{3, 3});
  CHECK(one.objects_match);
}
