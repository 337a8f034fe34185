#include "akstab/twist.hpp"

namespace akstab {

namespace {

void check_index(int a, int k) {
  if (a < 1 || a > k) throw Error(ErrorCode::IndexOutOfRange, "twist index " + std::to_string(a) + " out of range");
}

// The single degree carrying Hom*, or nothing when Hom* vanishes.
std::optional<int> single_degree(const GradedDims& h, const std::string& what) {
  if (h.empty()) return std::nullopt;
  if (h.size() != 1 || h.begin()->second != 1) throw Error(ErrorCode::UnknownHom, "Hom* with " + what + " is not one-dimensional");
  return h.begin()->first;
}

template <class Leaf>
ObjExpr map_expr(const Category& cat, const ObjExpr& e, const Leaf& leaf) {
  switch (e.kind()) {
    case ObjExpr::Kind::Zero: return e;
    case ObjExpr::Kind::Stable: return leaf(e);
    case ObjExpr::Kind::Sum: {
      std::vector<ObjExpr> parts;
      for (const auto& c : e.children()) parts.push_back(map_expr(cat, c, leaf));
      return sum(std::move(parts));
    }
    case ObjExpr::Kind::Ext: return ext(cat, map_expr(cat, e.sub(), leaf), map_expr(cat, e.quotient(), leaf));
  }
  return e;
}

}  // namespace

ObjExpr twist(const Category& cat, int a, const ObjExpr& e) {
  check_index(a, cat.k());
  const int N = cat.N();
  return map_expr(cat, e, [&](const ObjExpr& x) {
    const IntervalObject& p = x.interval();
    if (p.i == a && p.j == a) return ObjExpr::stable(a, a, p.m + 1 - N);
    auto d = single_degree(hom_dims(IntervalObject{a, a, 0}, p, N), x.key());
    if (!d) return x;
    return ext(cat, x, ObjExpr::stable(a, a, 1 - *d));
  });
}

ObjExpr twist_inverse(const Category& cat, int a, const ObjExpr& e) {
  check_index(a, cat.k());
  const int N = cat.N();
  return map_expr(cat, e, [&](const ObjExpr& x) {
    const IntervalObject& p = x.interval();
    if (p.i == a && p.j == a) return ObjExpr::stable(a, a, p.m + N - 1);
    auto d = single_degree(hom_dims(p, IntervalObject{a, a, 0}, N), x.key());
    if (!d) return x;
    return ext(cat, ObjExpr::stable(a, a, *d - 1), x);
  });
}

ObjExpr twist_word(const Category& cat, const std::vector<int>& word, const ObjExpr& e) {
  ObjExpr out = e;
  for (auto it = word.rbegin(); it != word.rend(); ++it) out = *it > 0 ? twist(cat, *it, out) : twist_inverse(cat, -*it, out);
  return out;
}

IntMatrix identity_matrix(int n) {
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int t = 0; t < n; ++t) m[t][t] = 1;
  return m;
}

IntMatrix twist_K(int a, int k, int N) {
  check_index(a, k);
  IntMatrix m = identity_matrix(k);
  KVector ea = unit_class(a, a, k);
  for (int c = 0; c < k; ++c) m[a - 1][c] -= euler_form(ea, unit_class(c + 1, c + 1, k), N);
  return m;
}

IntMatrix twist_K_inverse(int a, int k, int N) {
  check_index(a, k);
  IntMatrix m = identity_matrix(k);
  KVector ea = unit_class(a, a, k);
  for (int c = 0; c < k; ++c) m[a - 1][c] -= euler_form(unit_class(c + 1, c + 1, k), ea, N);
  return m;
}

IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
  const size_t n = x.size(), m = y.empty() ? 0 : y[0].size();
  IntMatrix out(n, std::vector<long long>(m, 0));
  for (size_t r = 0; r < n; ++r)
    for (size_t t = 0; t < y.size(); ++t)
      for (size_t c = 0; c < m; ++c) out[r][c] += x[r][t] * y[t][c];
  return out;
}

KVector operator*(const IntMatrix& m, const KVector& v) {
  KVector out(m.size(), 0);
  for (size_t r = 0; r < m.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c) out[r] += m[r][c] * v[c];
  return out;
}

}  // namespace akstab
