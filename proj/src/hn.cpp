#include "akstab/hn.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

namespace akstab {

namespace {

struct Block {
  ObjExpr label;
  PhaseLift phase;
  int size = 0;
};

// Generators are stored block by block; the differential only maps later
// blocks into earlier ones (and within a block).
struct Filtered {
  Complex cx;
  std::vector<Block> blocks;

  int offset(size_t b) const {
    int o = 0;
    for (size_t t = 0; t < b; ++t) o += blocks[t].size;
    return o;
  }
};

Complex sub_complex(const Complex& c, int begin, int n) {
  Complex out;
  out.gens.assign(c.gens.begin() + begin, c.gens.begin() + begin + n);
  out.delta.assign(n, std::vector<AlgebraElement>(n));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) out.delta[t][s] = c.delta[begin + t][begin + s];
  return out;
}

Morphism off_block(const Complex& c, int rows_begin, int nrows, int cols_begin, int ncols, int degree) {
  Morphism f = zero_morphism(nrows, ncols, degree);
  for (int t = 0; t < nrows; ++t)
    for (int s = 0; s < ncols; ++s) f.comps[t][s] = c.delta[rows_begin + t][cols_begin + s];
  return f;
}

Filtered leaf_block(const StabilityCondition& S, const ObjExpr& e, const StableMatch& m) {
  Filtered f;
  f.cx = S.cat().realize(e);
  f.blocks.push_back({e, m.phase, f.cx.size()});
  return f;
}

Filtered flatten(const StabilityCondition& S, const ObjExpr& e) {
  const auto& alg = S.cat().algebra();
  if (e.is_zero()) return {};
  if (auto m = match_stable(S, e)) return leaf_block(S, e, *m);
  if (e.kind() == ObjExpr::Kind::Sum) {
    Filtered f;
    for (const auto& c : e.children()) {
      Filtered g = flatten(S, c);
      f.cx = direct_sum(f.cx, g.cx);
      f.blocks.insert(f.blocks.end(), g.blocks.begin(), g.blocks.end());
    }
    return f;
  }
  if (e.kind() == ObjExpr::Kind::Ext) {
    Filtered a = flatten(S, e.sub()), b = flatten(S, e.quotient());
    auto cls = cohomology_basis(alg, b.cx, a.cx, 1);
    if (cls.empty()) throw Error(ErrorCode::ExtUndefined, "no extension class for " + e.key());
    if (cls.size() > 1) throw Error(ErrorCode::UnknownHom, "extension class not unique for " + e.key());
    // A's generators first, then B's; the class maps B into A.
    Filtered f;
    f.cx = direct_sum(a.cx, b.cx);
    const int na = a.cx.size();
    for (int t = 0; t < na; ++t)
      for (int s = 0; s < b.cx.size(); ++s) f.cx.delta[t][na + s] = cls[0].comps[t][s];
    f.blocks = a.blocks;
    f.blocks.insert(f.blocks.end(), b.blocks.begin(), b.blocks.end());
    return f;
  }
  throw Error(ErrorCode::NonStableLeaf, e.key() + " is not a stable object of the condition");
}

// Square matrix of components on all generators.
using Full = ComponentMatrix;

Full multiply_full(const GradedAlgebra& alg, const Full& x, const Full& y) {
  const size_t n = x.size();
  Full out(n, std::vector<AlgebraElement>(n));
  for (size_t t = 0; t < n; ++t)
    for (size_t u = 0; u < n; ++u) {
      if (x[t][u].empty()) continue;
      for (size_t s = 0; s < n; ++s)
        if (!y[u][s].empty()) add_to(out[t][s], alg.multiply(x[t][u], y[u][s]));
    }
  return out;
}

// Swap blocks b and b+1, whose connecting class is exact.
void swap_blocks(const GradedAlgebra& alg, Filtered& F, size_t b) {
  const int o1 = F.offset(b), n1 = F.blocks[b].size;
  const int o2 = o1 + n1, n2 = F.blocks[b + 1].size;
  Complex q1 = sub_complex(F.cx, o1, n1), q2 = sub_complex(F.cx, o2, n2);
  Morphism e = off_block(F.cx, o1, n1, o2, n2, 1);
  auto h = solve_coboundary(alg, q2, q1, e);
  if (!h) throw Error(ErrorCode::UnknownHom, "split class is not a coboundary");
  const int n = F.cx.size();
  Full H(n, std::vector<AlgebraElement>(n));
  for (int t = 0; t < n1; ++t)
    for (int s = 0; s < n2; ++s) H[o1 + t][o2 + s] = h->comps[t][s];
  // delta' = (1 + H) delta (1 - H)
  Full HD = multiply_full(alg, H, F.cx.delta);
  Full DH = multiply_full(alg, F.cx.delta, H);
  Full HDH = multiply_full(alg, HD, H);
  Full d = F.cx.delta;
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      add_to(d[t][s], HD[t][s]);
      add_to(d[t][s], DH[t][s], -1);
      add_to(d[t][s], HDH[t][s], -1);
    }
  for (int t = 0; t < n1; ++t)
    for (int s = 0; s < n2; ++s)
      if (!d[o1 + t][o2 + s].empty()) throw Error(ErrorCode::UnknownHom, "gauge did not split the pair");
  // Permute generators: block b+1 now precedes block b.
  std::vector<int> perm;
  for (int t = 0; t < o1; ++t) perm.push_back(t);
  for (int t = 0; t < n2; ++t) perm.push_back(o2 + t);
  for (int t = 0; t < n1; ++t) perm.push_back(o1 + t);
  for (int t = o2 + n2; t < n; ++t) perm.push_back(t);
  Complex c;
  for (int t : perm) c.gens.push_back(F.cx.gens[t]);
  c.delta.assign(n, std::vector<AlgebraElement>(n));
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) c.delta[t][s] = d[perm[t]][perm[s]];
  F.cx = std::move(c);
  std::swap(F.blocks[b], F.blocks[b + 1]);
}

// Replace blocks b, b+1 (nonzero class) by the decomposition of their cone.
void merge_blocks(const StabilityCondition& S, Filtered& F, size_t b) {
  const auto& alg = S.cat().algebra();
  ObjExpr r = ext(S.cat(), F.blocks[b].label, F.blocks[b + 1].label);
  std::vector<Block> parts;
  Complex target;
  for (const auto& p : summands(r)) {
    auto m = match_stable(S, p);
    if (!m) {
      if (p.kind() == ObjExpr::Kind::Ext) throw Error(ErrorCode::UnknownHom, "no decomposition known for " + p.key());
      throw Error(ErrorCode::NonStableLeaf, p.key() + " is not stable for the condition");
    }
    parts.push_back({p, m->phase, 0});
  }
  std::stable_sort(parts.begin(), parts.end(), [](const Block& x, const Block& y) { return x.phase > y.phase; });
  for (auto& p : parts) {
    Complex c = S.cat().realize(p.label);
    p.size = c.size();
    target = direct_sum(target, c);
  }

  const int o = F.offset(b);
  int end = o + F.blocks[b].size + F.blocks[b + 1].size;
  Complex reduced = minimize_range(alg, F.cx, o, end);
  const int nm = end - o;
  Complex cm = sub_complex(reduced, o, nm);
  auto phi = find_isomorphism(alg, target, cm);
  if (!phi) throw Error(ErrorCode::UnknownHom, "could not identify the cone of " + F.blocks[b].label.key() + " # " +
                                                    F.blocks[b + 1].label.key());
  auto inv = invert(alg, target, cm, *phi);
  if (!inv) throw Error(ErrorCode::UnknownHom, "cone identification is not invertible");

  const int n_old = reduced.size(), nr = target.size();
  const int n_new = n_old - nm + nr;
  auto old_index = [&](int t) { return t < o ? t : t - nr + nm; };  // for t outside the new range
  Complex c;
  c.gens.assign(reduced.gens.begin(), reduced.gens.begin() + o);
  c.gens.insert(c.gens.end(), target.gens.begin(), target.gens.end());
  c.gens.insert(c.gens.end(), reduced.gens.begin() + end, reduced.gens.end());
  c.delta.assign(n_new, std::vector<AlgebraElement>(n_new));
  auto in_new = [&](int t) { return t >= o && t < o + nr; };
  for (int t = 0; t < n_new; ++t)
    for (int s = 0; s < n_new; ++s) {
      AlgebraElement e;
      if (in_new(t) && in_new(s)) {
        e = target.delta[t - o][s - o];
      } else if (in_new(s)) {
        // outer row, new column: delta[t][M] * phi
        int tt = old_index(t);
        for (int m = 0; m < nm; ++m)
          if (!reduced.delta[tt][o + m].empty() && !phi->comps[m][s - o].empty())
            add_to(e, alg.multiply(reduced.delta[tt][o + m], phi->comps[m][s - o]));
      } else if (in_new(t)) {
        int ss = old_index(s);
        for (int m = 0; m < nm; ++m)
          if (!inv->comps[t - o][m].empty() && !reduced.delta[o + m][ss].empty())
            add_to(e, alg.multiply(inv->comps[t - o][m], reduced.delta[o + m][ss]));
      } else {
        e = reduced.delta[old_index(t)][old_index(s)];
      }
      c.delta[t][s] = std::move(e);
    }
  F.cx = std::move(c);
  F.blocks.erase(F.blocks.begin() + b, F.blocks.begin() + b + 2);
  F.blocks.insert(F.blocks.begin() + b, parts.begin(), parts.end());
}

bool class_is_zero(const GradedAlgebra& alg, const Filtered& F, size_t b) {
  const int o1 = F.offset(b), n1 = F.blocks[b].size;
  const int o2 = o1 + n1, n2 = F.blocks[b + 1].size;
  Morphism e = off_block(F.cx, o1, n1, o2, n2, 1);
  return is_exact(alg, sub_complex(F.cx, o2, n2), sub_complex(F.cx, o1, n1), e);
}

std::vector<size_t> inversions(const Filtered& F) {
  std::vector<size_t> out;
  for (size_t b = 0; b + 1 < F.blocks.size(); ++b)
    if (F.blocks[b].phase < F.blocks[b + 1].phase) out.push_back(b);
  return out;
}

void rewrite_at(const StabilityCondition& S, Filtered& F, size_t b) {
  if (class_is_zero(S.cat().algebra(), F, b))
    swap_blocks(S.cat().algebra(), F, b);
  else
    merge_blocks(S, F, b);
}

HNFiltration collect(const StabilityCondition& S, const Filtered& F, int steps) {
  HNFiltration out;
  out.steps = steps;
  std::map<Rational, Rational> mass;
  for (const auto& blk : F.blocks) {
    if (out.factors.empty() || out.factors.back().phase != blk.phase) out.factors.push_back({{}, blk.phase});
    out.factors.back().stables.push_back(blk.label);
    mass[charge(S, k_class_expr(blk.label, S.k)).norm2()] += 1;
  }
  for (auto& f : out.factors)
    std::sort(f.stables.begin(), f.stables.end(), [](const ObjExpr& x, const ObjExpr& y) { return x.key() < y.key(); });
  for (const auto& [q, c] : mass) out.mass_terms.push_back({c, q});
  return out;
}

std::string state_key(const Filtered& F) {
  std::string k;
  for (const auto& b : F.blocks) k += b.label.key() + "|";
  k += "#";
  for (const auto& row : F.cx.delta)
    for (const auto& e : row) {
      for (const auto& [p, c] : e) k += std::to_string(p) + ":" + c.get_str() + ",";
      k += ";";
    }
  return k;
}

}  // namespace

HNFiltration hn(const StabilityCondition& S, const ObjExpr& e, RewriteStrategy strategy, std::uint64_t seed) {
  validate(e, S.k);
  Filtered F = flatten(S, e);
  const long n = static_cast<long>(F.blocks.size());
  const long budget = 4 * n * n;
  std::mt19937_64 rng(seed);
  int steps = 0;
  for (;;) {
    auto inv = inversions(F);
    if (inv.empty()) break;
    if (steps >= budget) throw Error(ErrorCode::StepBudgetExceeded, "rewriting did not terminate within " + std::to_string(budget) + " steps");
    size_t b = inv.front();
    if (strategy == RewriteStrategy::Rightmost) b = inv.back();
    if (strategy == RewriteStrategy::Random) b = inv[std::uniform_int_distribution<size_t>(0, inv.size() - 1)(rng)];
    rewrite_at(S, F, b);
    ++steps;
  }
  return collect(S, F, steps);
}

std::vector<HNFiltration> hn_all_orders(const StabilityCondition& S, const ObjExpr& e, size_t max_states) {
  validate(e, S.k);
  std::vector<HNFiltration> results;
  std::set<std::string> seen;
  std::vector<std::pair<Filtered, int>> stack{{flatten(S, e), 0}};
  const long n = static_cast<long>(stack[0].first.blocks.size());
  const long budget = 4 * n * n;
  while (!stack.empty() && seen.size() < max_states) {
    auto [F, steps] = std::move(stack.back());
    stack.pop_back();
    if (!seen.insert(state_key(F)).second) continue;
    auto inv = inversions(F);
    if (inv.empty()) {
      HNFiltration r = collect(S, F, steps);
      bool dup = false;
      for (const auto& x : results) dup = dup || same_filtration(x, r);
      if (!dup) results.push_back(std::move(r));
      continue;
    }
    if (steps >= budget) throw Error(ErrorCode::StepBudgetExceeded, "rewriting did not terminate within budget");
    for (size_t b : inv) {
      Filtered G = F;
      rewrite_at(S, G, b);
      stack.push_back({std::move(G), steps + 1});
    }
  }
  return results;
}

bool same_filtration(const HNFiltration& a, const HNFiltration& b) {
  if (a.factors.size() != b.factors.size()) return false;
  for (size_t t = 0; t < a.factors.size(); ++t) {
    if (a.factors[t].phase != b.factors[t].phase) return false;
    if (a.factors[t].stables != b.factors[t].stables) return false;
  }
  return true;
}

int compare_mass(const HNFiltration& f, const GaussianRational& z) { return compare_sqrt_sum(f.mass_terms, z.norm2()); }

double mass_value(const HNFiltration& f) {
  double m = 0;
  for (const auto& [c, q] : f.mass_terms) m += c.get_d() * std::sqrt(q.get_d());
  return m;
}

bool valid_filtration(const StabilityCondition& S, const ObjExpr& e, const HNFiltration& f, std::string* why) {
  auto bad = [&](const std::string& w) {
    if (why) *why = w;
    return false;
  };
  KVector total(S.k, 0);
  for (size_t t = 0; t < f.factors.size(); ++t) {
    const auto& fac = f.factors[t];
    if (fac.stables.empty()) return bad("empty factor");
    if (t > 0 && !(f.factors[t - 1].phase > fac.phase)) return bad("phases not strictly decreasing");
    for (const auto& s : fac.stables) {
      auto m = match_stable(S, s);
      if (!m || m->phase != fac.phase) return bad(s.key() + " is not stable of the factor phase");
      total = total + k_class_expr(s, S.k);
    }
  }
  if (total != k_class_expr(e, S.k)) return bad("K-classes do not add up");
  GaussianRational z = charge(S, total);
  int c = compare_mass(f, z);
  if (c < 0) return bad("mass below |Z(E)|");
  // unit charges are only defined up to positive scaling
  bool parallel = true;
  if (!f.factors.empty()) {
    GaussianRational u0 = f.factors[0].phase.unit_charge();
    for (const auto& fac : f.factors) {
      GaussianRational u = fac.phase.unit_charge();
      parallel = parallel && sgn(cross(u0, u)) == 0 && sgn(dot(u0, u)) > 0;
    }
  }
  if ((c == 0) != parallel) return bad("mass equality does not match factor alignment");
  return true;
}

std::string to_string(const HNFiltration& f) {
  std::string s = "[";
  for (size_t t = 0; t < f.factors.size(); ++t) {
    if (t) s += ", ";
    s += "(";
    for (size_t u = 0; u < f.factors[t].stables.size(); ++u) s += (u ? " + " : "") + f.factors[t].stables[u].key();
    s += ", " + to_string(f.factors[t].phase) + ")";
  }
  return s + "]";
}

}  // namespace akstab
