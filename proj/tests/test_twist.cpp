#include "doctest.h"

#include "akstab/sample.hpp"
#include "akstab/twist.hpp"

using namespace akstab;

namespace {

ObjExpr P(int i, int j, int m = 0) { return ObjExpr::stable(i, j, m); }

}  // namespace

TEST_CASE("twist worked examples") {
  Category cat(3, 2);
  CHECK(twist(cat, 1, P(1, 1)) == P(1, 1, -1));
  CHECK(twist(cat, 1, P(1, 3)) == P(2, 3));
  CHECK(cat.iso(twist(cat, 2, P(1, 1)), ObjExpr::make_ext(P(1, 1), P(2, 2))));
  CHECK(twist(cat, 3, P(1, 1)) == P(1, 1));
  CHECK(twist_inverse(cat, 1, P(1, 1)) == P(1, 1, 1));
  CHECK_THROWS_AS(twist(cat, 4, P(1, 1)), Error);
}

TEST_CASE("twist on objects matches the cone of evaluation") {
  for (int N : {2, 3}) {
    Category cat(3, N);
    for (const auto& p : all_intervals(3))
      for (int a = 1; a <= 3; ++a) {
        auto e = ObjExpr::stable(p);
        Complex t = twist_complex(cat.algebra(), a, cat.realize(e));
        CHECK_MESSAGE(isomorphic(cat.algebra(), t, cat.realize(twist(cat, a, e))), "a=" << a << " " << e.key());
        Complex ti = twist_inverse_complex(cat.algebra(), a, cat.realize(e));
        CHECK(isomorphic(cat.algebra(), ti, cat.realize(twist_inverse(cat, a, e))));
      }
  }
}

TEST_CASE("twist is compatible with the K-theory action") {
  for (int N : {2, 3})
    for (int k = 1; k <= 5; ++k) {
      Category cat(k, N);
      for (int a = 1; a <= k; ++a) {
        IntMatrix m = twist_K(a, k, N), mi = twist_K_inverse(a, k, N);
        CHECK(m * mi == identity_matrix(k));
        for (const auto& p : all_intervals(k))
          for (int s = -1; s <= 1; ++s) {
            auto e = ObjExpr::stable(p.i, p.j, s);
            CHECK(k_class_expr(twist(cat, a, e), k) == m * k_class_expr(e, k));
            CHECK(k_class_expr(twist_inverse(cat, a, e), k) == mi * k_class_expr(e, k));
          }
      }
    }
  auto m = twist_K(1, 2, 2);
  CHECK(m * KVector{1, 0} == KVector{-1, 0});
  CHECK(m * KVector{0, 1} == KVector{1, 1});
}

TEST_CASE("twist matrices satisfy the braid relations") {
  for (int N : {2, 3})
    for (int k = 2; k <= 6; ++k)
      for (int a = 1; a <= k; ++a)
        for (int b = a + 1; b <= k; ++b) {
          auto x = twist_K(a, k, N), y = twist_K(b, k, N);
          if (b == a + 1)
            CHECK(x * y * x == y * x * y);
          else
            CHECK(x * y == y * x);
        }
}

TEST_CASE("twist followed by its inverse is the identity") {
  for (int k = 2; k <= 4; ++k) {
    Category cat(k, 2);
    for (const auto& p : all_intervals(k))
      for (int a = 1; a <= k; ++a) {
        auto e = ObjExpr::stable(p);
        CHECK(cat.iso(twist_inverse(cat, a, twist(cat, a, e)), e));
        CHECK(cat.iso(twist(cat, a, twist_inverse(cat, a, e)), e));
      }
  }
  auto S = standard_condition(3, 2, {{1, 0}, {1, 1}, {0, 1}}, {0, 0, 0});
  int n = 0;
  for (const auto& e : small_expressions(S, stable_leaves(S, 0, 0), 3)) {
    if (leaf_count(e) < 2) continue;
    for (int a = 1; a <= 3; ++a) CHECK_MESSAGE(S.cat().iso(twist_inverse(S.cat(), a, twist(S.cat(), a, e)), e), e.key());
    ++n;
  }
  CHECK(n > 50);
}
