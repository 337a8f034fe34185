#include "akstab/sample.hpp"

#include <algorithm>
#include <set>

namespace akstab {

bool unique_extension(const Category& cat, const ObjExpr& a, const ObjExpr& b) {
  GradedDims h = cat.hom(b, a);
  auto it = h.find(1);
  return it != h.end() && it->second == 1;
}

StabilityCondition random_standard(int k, int N, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coord(1, 12);
  for (;;) {
    std::vector<GaussianRational> Z;
    for (int i = 0; i < k; ++i) {
      int re = coord(rng) - 6, im = coord(rng) - 1;
      if (im == 0 && re <= 0) re = -re + 1;
      Z.emplace_back(Rational(re), Rational(im));
    }
    std::sort(Z.begin(), Z.end(), [](const auto& a, const auto& b) { return sgn(cross(a, b)) > 0; });
    bool distinct = true;
    for (int i = 0; i + 1 < k; ++i) distinct = distinct && sgn(cross(Z[i], Z[i + 1])) > 0;
    if (!distinct) continue;
    long w = std::uniform_int_distribution<int>(-1, 1)(rng);
    if (w != 0)
      for (auto& z : Z) z = -z;
    std::vector<long> wind(k, 0);
    // a negated charge in the lower half-plane has phase in [1, 2)
    for (int i = 0; i < k; ++i) wind[i] = w < 0 ? -1 : 0;
    try {
      return standard_condition(k, N, Z, wind);
    } catch (const Error&) {
    }
  }
}

std::vector<ObjExpr> stable_leaves(const StabilityCondition& S, int lo, int hi) {
  std::vector<ObjExpr> out;
  for (const auto& st : S.stables)
    for (int m = lo; m <= hi; ++m) out.push_back(shift(st.object, m));
  return out;
}

std::vector<ObjExpr> small_expressions(const StabilityCondition& S, const std::vector<ObjExpr>& leaves,
                                       int max_leaves) {
  std::vector<std::vector<ObjExpr>> by_size(max_leaves + 1);
  by_size[1] = leaves;
  for (int n = 2; n <= max_leaves; ++n)
    for (int a = 1; a < n; ++a)
      for (const auto& x : by_size[a])
        for (const auto& y : by_size[n - a]) {
          if (a <= n - a) by_size[n].push_back(ObjExpr::make_sum({x, y}));
          if (unique_extension(S.cat(), x, y)) by_size[n].push_back(ObjExpr::make_ext(x, y));
        }
  std::vector<ObjExpr> out;
  std::set<std::string> seen;
  for (const auto& v : by_size)
    for (const auto& e : v)
      if (seen.insert(e.key()).second) out.push_back(e);
  return out;
}

ObjExpr random_tower(const StabilityCondition& S, int n, int lo, int hi, std::mt19937_64& rng) {
  auto leaves = stable_leaves(S, lo, hi);
  std::uniform_int_distribution<size_t> pick(0, leaves.size() - 1);
  ObjExpr e = leaves[pick(rng)];
  for (int t = 1; t < n; ++t) {
    ObjExpr x = leaves[pick(rng)];
    e = unique_extension(S.cat(), x, e) ? ObjExpr::make_ext(x, e) : ObjExpr::make_sum({x, e});
  }
  return e;
}

}  // namespace akstab
