#include "doctest.h"

#include <random>

#include "akstab/braid.hpp"

using namespace akstab;

namespace {

GaussianRational G(Rational re, Rational im) { return {re, im}; }

// Artin action on the free group: sigma_i sends x_i to x_i x_{i+1} x_i^-1
// and x_{i+1} to x_i. Letters are +-(1..n).
using FreeWord = std::vector<int>;

FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  for (int g : w) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  return out;
}

FreeWord invert(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (int& g : out) g = -g;
  return out;
}

std::vector<FreeWord> artin(const BraidWord& w, int n) {
  // images of the generators; apply letters left to right as automorphisms
  std::vector<FreeWord> img;
  for (int t = 1; t <= n; ++t) img.push_back({t});
  for (int g : w) {
    int i = std::abs(g);
    std::vector<FreeWord> sub;
    for (int t = 1; t <= n; ++t) sub.push_back({t});
    if (g > 0) {
      sub[i - 1] = {i, i + 1, -i};
      sub[i] = {i};
    } else {
      sub[i - 1] = {i + 1};
      sub[i] = {-(i + 1), i, i + 1};
    }
    for (auto& word : img) {
      FreeWord out;
      for (int l : word) {
        FreeWord piece = l > 0 ? sub[l - 1] : invert(sub[-l - 1]);
        out.insert(out.end(), piece.begin(), piece.end());
      }
      word = reduce(out);
    }
  }
  return img;
}

bool artin_trivial(const BraidWord& w, int n) {
  auto img = artin(w, n);
  for (int t = 1; t <= n; ++t)
    if (img[t - 1] != FreeWord{t}) return false;
  return true;
}

LaminationCoords random_coords(int strands, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-20, 20);
  LaminationCoords c;
  for (int t = 0; t < 2 * strands; ++t) c.push_back(d(rng));
  return c;
}

}  // namespace

TEST_CASE("configurations from charges") {
  auto c = config_from_charge({G(1, 0), G(1, 1), G(0, 1)});
  CHECK(c.points == std::vector<GaussianRational>{G(0, 0), G(1, 0), G(2, 1), G(2, 2)});
  auto n = config_from_charge({G(1, 0), G(1, 1), G(0, 1)}, true);
  CHECK(n.points[0] == G(Rational(-5, 4), Rational(-3, 4)));
  try {
    config_from_charge({G(1, 0), G(-1, 0), G(1, 0)});
    FAIL("expected CoincidentPoints");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CoincidentPoints);
  }
  CHECK(config_from_charge({G(1, 0)}, true).points == std::vector<GaussianRational>{G(Rational(-1, 2), 0), G(Rational(1, 2), 0)});
}

TEST_CASE("coordinate action basics") {
  auto b = base_coords(4);
  CHECK(coords_action({}, b) == b);
  CHECK(coords_action({1}, b) != b);
  CHECK(coords_action({1, -1}, b) == b);
  CHECK(is_trivial({1, 2, 1, -2, -1, -2}, 3));
  CHECK_FALSE(is_trivial({1, 2}, 3));
  CHECK(is_trivial({1, -1}, 3));
  CHECK_THROWS_AS(coords_action({3}, base_coords(3)), Error);
  CHECK(parse_word("1 -2, 3") == BraidWord{1, -2, 3});
  CHECK(free_reduce({1, 2, -2, -1, 3}) == BraidWord{3});
}

TEST_CASE("braid relations in the coordinate action") {
  std::mt19937_64 rng(3);
  for (int k = 2; k <= 6; ++k) {
    const int n = k + 1;
    for (int trial = 0; trial < 100; ++trial) {
      auto c = random_coords(n, rng);
      for (int i = 1; i < n; ++i) {
        CHECK(coords_action({i, -i}, c) == c);
        CHECK(coords_action({-i, i}, c) == c);
        for (int j = i + 1; j < n; ++j) {
          if (j == i + 1)
            CHECK(coords_action({i, j, i}, c) == coords_action({j, i, j}, c));
          else
            CHECK(coords_action({i, j}, c) == coords_action({j, i}, c));
        }
      }
    }
  }
}

TEST_CASE("word problem agrees with the Artin action on short words") {
  // every freely reduced word of length <= 6 in B_3
  std::vector<BraidWord> words{{}};
  int nontrivial = 0, trivial = 0;
  for (int len = 1; len <= 6; ++len) {
    std::vector<BraidWord> next;
    for (const auto& w : words)
      for (int g : {1, -1, 2, -2}) {
        if (!w.empty() && w.back() == -g) continue;
        auto v = w;
        v.push_back(g);
        next.push_back(v);
      }
    for (const auto& w : next) {
      bool t = is_trivial(w, 3);
      CHECK_MESSAGE(t == artin_trivial(w, 3), to_string(w));
      (t ? trivial : nontrivial)++;
    }
    words = std::move(next);
  }
  CHECK(trivial > 0);  // e.g. 1 2 1 -2 -1 -2
  CHECK(nontrivial > 1000);
}

TEST_CASE("word problem agrees with the Artin action on random words") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 3 + trial % 4;
    std::uniform_int_distribution<int> gen(1, n - 1), sgn01(0, 1), len(1, 8);
    BraidWord w;
    for (int t = len(rng); t > 0; --t) w.push_back(sgn01(rng) ? gen(rng) : -gen(rng));
    // build a trivial word by conjugating a relation
    BraidWord r = concat(concat(w, {1, 2, 1, -2, -1, -2}), inverse(w));
    CHECK(is_trivial(r, n));
    CHECK(is_trivial(w, n) == artin_trivial(w, n));
  }
}

TEST_CASE("braids of point loops") {
  Configuration q1{{G(-1, Rational(-1, 3)), G(1, Rational(1, 3))}};
  Configuration q2{{G(Rational(1, 3), -1), G(Rational(-1, 3), 1)}};
  Configuration q3{{G(1, Rational(1, 3)), G(-1, Rational(-1, 3))}};
  Configuration q4{{G(Rational(-1, 3), 1), G(Rational(1, 3), -1)}};
  CHECK(braid_of_loop({q1}) == BraidWord{});
  // counterclockwise half turn swaps the two points
  CHECK(braid_of_loop({q1, q2, q3}) == BraidWord{1});
  CHECK(braid_of_loop({q1, q4, q3}) == BraidWord{-1});
  // full turns
  CHECK(braid_of_loop({q1, q2, q3, q4}) == BraidWord{1, 1});
  CHECK(braid_of_loop({q1, q4, q3, q2}) == BraidWord{-1, -1});
}

TEST_CASE("braid of a loop is a homomorphism") {
  // three points; rotate a pair about its midpoint, then another pair
  auto turn = [](const std::vector<GaussianRational>& base, size_t p, size_t q, int dir) {
    std::vector<Configuration> out;
    GaussianRational mid = Rational(1, 2) * (base[p] + base[q]);
    for (int m = 1; m <= 8; ++m) {
      Configuration c{base};
      double th = dir * M_PI * (2 * m - 1) / 8;
      GaussianRational u{Rational(static_cast<long>(std::llround(std::cos(th) * 64)), 64),
                         Rational(static_cast<long>(std::llround(std::sin(th) * 64)), 64)};
      c.points[p] = mid + (base[p] - mid) * u;
      c.points[q] = mid + (base[q] - mid) * u;
      out.push_back(c);
    }
    return out;
  };
  std::vector<GaussianRational> base{G(0, 0), G(1, Rational(1, 7)), G(3, Rational(-1, 5))};
  auto l1 = turn(base, 0, 1, 1), l2 = turn(base, 1, 2, 1);
  Configuration b0{base};
  std::vector<Configuration> L1{b0}, L2{b0}, L12{b0};
  L1.insert(L1.end(), l1.begin(), l1.end());
  L2.insert(L2.end(), l2.begin(), l2.end());
  L12.insert(L12.end(), l1.begin(), l1.end());
  L12.push_back(b0);
  L12.insert(L12.end(), l2.begin(), l2.end());
  auto w1 = braid_of_loop(L1), w2 = braid_of_loop(L2), w12 = braid_of_loop(L12);
  CHECK(w1 == BraidWord{1, 1});
  CHECK(w2 == BraidWord{2, 2});
  CHECK(is_trivial(concat(w12, inverse(concat(w1, w2))), 3));
  std::vector<Configuration> rev{L12.front()};
  rev.insert(rev.end(), L12.rbegin(), L12.rend() - 1);
  CHECK(is_trivial(concat(braid_of_loop(rev), w12), 3));
  Configuration collide{{G(0, 0), G(0, 0), G(3, 0)}};
  CHECK_THROWS_AS(braid_of_loop({b0, collide}), Error);
}
