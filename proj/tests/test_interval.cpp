#include "doctest.h"

#include "akstab/complex.hpp"
#include "akstab/interval.hpp"

using namespace akstab;

TEST_CASE("worked Hom tables") {
  CHECK(hom_dims({1, 3, 0}, {1, 3, 0}, 2) == GradedDims{{0, 1}, {2, 1}});
  CHECK(hom_dims({2, 3, 0}, {1, 2, 0}, 2) == GradedDims{{1, 1}, {2, 1}});
  CHECK(hom_dims({1, 1, 3}, {1, 1, 3}, 2) == GradedDims{{0, 1}, {2, 1}});
  CHECK(hom_dims({3, 3, 0}, {1, 1, 0}, 2).empty());
}

TEST_CASE("shift rule") {
  // Hom^d(A[1],B) = Hom^{d-1}(A,B)
  CHECK(hom_dims({2, 3, 1}, {1, 2, 0}, 2) == GradedDims{{2, 1}, {3, 1}});
  CHECK(hom_dims({2, 3, 0}, {1, 2, 1}, 2) == GradedDims{{0, 1}, {1, 1}});
}

TEST_CASE("Hom table re-derived from realizations") {
  for (int k = 1; k <= 4; ++k)
    for (int N = 2; N <= 4; ++N) {
      auto alg = build_algebra(k, N);
      for (const auto& a : all_intervals(k))
        for (const auto& b : all_intervals(k)) {
          auto ca = interval_complex(alg, a);
          auto cb = interval_complex(alg, b.shifted(1));
          CHECK_MESSAGE(hom_dims(alg, ca, cb) == hom_dims(a, b.shifted(1), N),
                        to_string(a) << " " << to_string(b) << " N=" << N);
        }
    }
}

TEST_CASE("total Hom dimension at most two") {
  for (int k = 1; k <= 6; ++k)
    for (const auto& a : all_intervals(k))
      for (const auto& b : all_intervals(k)) {
        int t = total_dim(hom_dims(a, b, 2));
        CHECK(t <= 2);
        bool overlap = (a.i < b.i && b.i <= a.j && a.j < b.j) || (b.i < a.i && a.i <= b.j && b.j < a.j);
        CHECK((t == 2) == (a.same_interval(b) || overlap));
      }
}

TEST_CASE("K-classes") {
  CHECK(k_class({2, 2, 0}, 3) == KVector{0, 1, 0});
  CHECK(k_class({1, 3, 1}, 3) == KVector{-1, -1, -1});
  CHECK(k_class({1, 2, 0}, 3) == KVector{1, 1, 0});
}

TEST_CASE("Euler form") {
  CHECK(euler_form({1, 0}, {1, 0}, 2) == 2);
  CHECK(euler_form({1, 0}, {0, 1}, 2) == -1);
  CHECK(euler_form({1, 1, 1}, {1, 1, 1}, 2) == 2);
  for (int k = 1; k <= 5; ++k)
    for (int N = 2; N <= 5; ++N)
      for (const auto& a : all_intervals(k))
        for (const auto& b : all_intervals(k))
          for (int m = -1; m <= 1; ++m) {
            auto bs = b.shifted(m);
            CHECK(euler_form(k_class(a, k), k_class(bs, k), N) == euler_characteristic(hom_dims(a, bs, N)));
            if (N % 2 == 0) CHECK(euler_form(k_class(a, k), k_class(bs, k), N) == euler_form(k_class(bs, k), k_class(a, k), N));
          }
}

TEST_CASE("Serre duality over intervals") {
  auto r = serre_check(3, 2);
  CHECK(r.pass);
  CHECK(r.pairs_checked == 36);
  CHECK(serre_check(1, 7).pass);
  CHECK(serre_check(5, 3).pass);
  for (int k = 1; k <= 6; ++k)
    for (int N = 2; N <= 4; ++N) CHECK(serre_check(k, N).pass);
}
