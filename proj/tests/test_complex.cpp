#include "doctest.h"

#include "akstab/complex.hpp"

using namespace akstab;

TEST_CASE("interval complexes are valid and spherical") {
  for (int k = 1; k <= 4; ++k) {
    auto alg = build_algebra(k, 2);
    for (const auto& p : all_intervals(k)) {
      auto c = interval_complex(alg, p);
      CHECK(is_valid(alg, c));
      CHECK(hom_dims(alg, c, c) == GradedDims{{0, 1}, {2, 1}});
      CHECK(!is_zero(alg, c));
    }
  }
}

TEST_CASE("cone of the identity is contractible") {
  auto alg = build_algebra(3, 2);
  auto c = interval_complex(alg, {1, 3, 0});
  auto ids = cohomology_basis(alg, c, c, 0);
  REQUIRE(ids.size() == 1);
  auto cone = mapping_cone(c, c, ids[0]);
  CHECK(is_valid(alg, cone));
  CHECK(is_zero(alg, cone));
  CHECK(minimize(alg, cone).empty());
}

TEST_CASE("minimization preserves Homs") {
  auto alg = build_algebra(3, 2);
  auto a = interval_complex(alg, {1, 2, 0});
  auto b = interval_complex(alg, {2, 3, 0});
  auto classes = cohomology_basis(alg, b, a, 1);
  REQUIRE(classes.size() == 1);
  auto e = extension_cone(a, b, classes[0]);
  CHECK(is_valid(alg, e));
  auto m = minimize(alg, e);
  CHECK(is_valid(alg, m));
  CHECK(m.size() == 4);
  for (const auto& p : all_intervals(3)) {
    auto probe = interval_complex(alg, p);
    CHECK(hom_dims(alg, probe, e) == hom_dims(alg, probe, m));
    CHECK(hom_dims(alg, e, probe) == hom_dims(alg, m, probe));
  }
  // P12 # P23 = P22 + P13
  CHECK(isomorphic(alg, m, direct_sum(interval_complex(alg, {2, 2, 0}), interval_complex(alg, {1, 3, 0}))));
  CHECK(!isomorphic(alg, m, interval_complex(alg, {1, 3, 0})));
}

TEST_CASE("realization-level twists") {
  auto alg = build_algebra(3, 2);
  auto p1 = interval_complex(alg, {1, 1, 0});
  CHECK(isomorphic(alg, twist_complex(alg, 1, p1), interval_complex(alg, {1, 1, -1})));
  CHECK(isomorphic(alg, twist_complex(alg, 1, interval_complex(alg, {1, 3, 0})), interval_complex(alg, {2, 3, 0})));
  CHECK(isomorphic(alg, twist_complex(alg, 3, p1), p1));
  for (const auto& p : all_intervals(3))
    for (int a = 1; a <= 3; ++a) {
      auto c = interval_complex(alg, p);
      auto t = twist_complex(alg, a, c);
      CHECK(is_valid(alg, t));
      CHECK(isomorphic(alg, twist_inverse_complex(alg, a, t), c));
      CHECK(isomorphic(alg, twist_complex(alg, a, twist_inverse_complex(alg, a, c)), c));
      CHECK(hom_dims(alg, t, t) == GradedDims{{0, 1}, {2, 1}});
    }
}
