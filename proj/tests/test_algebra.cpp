#include "doctest.h"

#include <set>
#include <vector>

#include "akstab/algebra.hpp"

using namespace akstab;

namespace {

// Independent model: paths as node sequences in the doubled A_k quiver,
// reduced by the defining relations. A path of length >= 3 always vanishes;
// length-2 back-and-forth paths at the same node are identified.
struct PathModel {
  int k, N;
  // canonical key: (source, target, degree) since each is unique
  std::set<std::tuple<int, int, int>> classes;

  PathModel(int k_, int N_) : k(k_), N(N_) {
    for (int a = 1; a <= k; ++a) {
      classes.insert({a, a, 0});
      classes.insert({a, a, N});
      if (a < k) {
        classes.insert({a, a + 1, 1});
        classes.insert({a + 1, a, N - 1});
      }
    }
  }

  static int step_degree(int from, int to, int N) { return to == from + 1 ? 1 : N - 1; }

  // Concatenate two node walks, return (nonzero?, key).
  std::optional<std::tuple<int, int, int>> concat(const std::vector<int>& p, const std::vector<int>& q) const {
    if (p.back() != q.front()) return std::nullopt;
    std::vector<int> w = p;
    w.insert(w.end(), q.begin() + 1, q.end());
    if (w.size() > 3) return std::nullopt;
    if (w.size() == 3 && w[0] != w[2]) return std::nullopt;
    int deg = 0;
    for (size_t t = 0; t + 1 < w.size(); ++t) deg += step_degree(w[t], w[t + 1], N);
    return std::make_tuple(w.front(), w.back(), deg);
  }
};

std::vector<int> walk_of(const GradedAlgebra& alg, int pos) {
  const auto& b = alg.element(pos);
  switch (b.kind) {
    case BasisKind::Idempotent: return {b.index};
    case BasisKind::Up: return {b.index, b.index + 1};
    case BasisKind::Down: return {b.index + 1, b.index};
    case BasisKind::Loop: return {b.index, b.index == 1 && alg.k() > 1 ? 2 : (b.index > 1 ? b.index - 1 : b.index), b.index};
  }
  return {};
}

}  // namespace

TEST_CASE("algebra dimension is 4k-2") {
  for (int k = 1; k <= 6; ++k)
    for (int N = 2; N <= 4; ++N) CHECK(build_algebra(k, N).dim() == 4 * k - 2);
  auto a = build_algebra(1, 2);
  CHECK(a.dim() == 2);
  CHECK(to_string(a.element(0)) == "e1");
  CHECK(to_string(a.element(1)) == "f1");
}

TEST_CASE("rejects invalid parameters") {
  CHECK_THROWS_AS(build_algebra(0, 2), Error);
  CHECK_THROWS_AS(build_algebra(2, 1), Error);
}

TEST_CASE("products agree with the path model") {
  for (int k = 2; k <= 5; ++k)
    for (int N = 2; N <= 4; ++N) {
      auto alg = build_algebra(k, N);
      PathModel model(k, N);
      for (int x = 0; x < alg.dim(); ++x)
        for (int y = 0; y < alg.dim(); ++y) {
          auto p = alg.product(x, y);
          auto wx = walk_of(alg, x), wy = walk_of(alg, y);
          std::optional<std::tuple<int, int, int>> expect;
          bool x_loop = alg.element(x).kind == BasisKind::Loop, y_loop = alg.element(y).kind == BasisKind::Loop;
          if (x_loop || y_loop) {
            // loops only survive against idempotents
            if (alg.element(x).kind == BasisKind::Idempotent && alg.element(x).index == alg.element(y).source)
              expect = std::make_tuple(alg.element(y).source, alg.element(y).target, alg.element(y).degree);
            if (alg.element(y).kind == BasisKind::Idempotent && alg.element(y).index == alg.element(x).target)
              expect = std::make_tuple(alg.element(x).source, alg.element(x).target, alg.element(x).degree);
          } else {
            expect = model.concat(wx, wy);
          }
          if (!expect) {
            CHECK(!p.has_value());
          } else {
            REQUIRE(p.has_value());
            const auto& b = alg.element(*p);
            CHECK(std::make_tuple(b.source, b.target, b.degree) == *expect);
          }
        }
    }
}

TEST_CASE("associativity and unit") {
  for (int k = 1; k <= 5; ++k)
    for (int N = 2; N <= 4; ++N) {
      auto alg = build_algebra(k, N);
      auto one = unit(alg);
      for (int x = 0; x < alg.dim(); ++x) {
        auto ex = basis_vector(x);
        CHECK(alg.multiply(one, ex) == ex);
        CHECK(alg.multiply(ex, one) == ex);
        for (int y = 0; y < alg.dim(); ++y)
          for (int z = 0; z < alg.dim(); ++z) {
            auto ey = basis_vector(y), ez = basis_vector(z);
            CHECK(alg.multiply(alg.multiply(ex, ey), ez) == alg.multiply(ex, alg.multiply(ey, ez)));
          }
      }
    }
}

TEST_CASE("worked products") {
  auto alg = build_algebra(2, 3);
  CHECK(alg.product(alg.up(1), alg.down(1)) == alg.loop(1));
  CHECK(alg.product(alg.down(1), alg.up(1)) == alg.loop(2));
  auto a3 = build_algebra(3, 2);
  CHECK(a3.multiply(basis_vector(a3.idempotent(1)), basis_vector(a3.idempotent(2))).empty());
  CHECK(a3.multiply(basis_vector(a3.up(1)), basis_vector(a3.up(2))).empty());
  CHECK(a3.multiply(basis_vector(a3.down(1)), basis_vector(a3.up(1))) == basis_vector(a3.loop(2)));
}

TEST_CASE("node Hom dimensions match the defining table and duality") {
  for (int k = 1; k <= 6; ++k)
    for (int N = 2; N <= 4; ++N) {
      auto alg = build_algebra(k, N);
      for (int a = 1; a <= k; ++a)
        for (int b = 1; b <= k; ++b) {
          GradedDims expect;
          if (a == b) expect = {{0, 1}, {N, 1}};
          else if (b == a + 1) expect = {{1, 1}};
          else if (a == b + 1) expect = {{N - 1, 1}};
          CHECK(alg.node_homs(a, b) == expect);
          CHECK(alg.node_homs(a, b) == dual_degrees(alg.node_homs(b, a), N));
        }
    }
}

TEST_CASE("duality pairing is perfect") {
  CHECK(check_duality_pairing(build_algebra(2, 2)).perfect);
  CHECK(check_duality_pairing(build_algebra(1, 5)).perfect);
  auto rep = check_duality_pairing(build_algebra(4, 2));
  CHECK(rep.perfect);
  CHECK(rep.pairs_checked == 16);
}
