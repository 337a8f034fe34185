#include "akstab/expr.hpp"

#include <algorithm>

namespace akstab {

ObjExpr::ObjExpr() {
  static const auto zero_node = [] {
    auto n = std::make_shared<Node>();
    n->key = "0";
    return n;
  }();
  node_ = zero_node;
}

ObjExpr ObjExpr::stable(const IntervalObject& p) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Stable;
  n->leaf = p;
  n->key = to_string(p);
  return ObjExpr(n);
}

ObjExpr ObjExpr::make_ext(const ObjExpr& a, const ObjExpr& b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Ext;
  n->kids = {a, b};
  n->key = "Ext(" + a.key() + ", " + b.key() + ")";
  return ObjExpr(n);
}

namespace {

KVector class_for_order(const ObjExpr& e) {
  // Length-agnostic K-class used only for canonical ordering.
  int k = 0;
  std::vector<const ObjExpr*> stack{&e};
  while (!stack.empty()) {
    const ObjExpr* x = stack.back();
    stack.pop_back();
    if (x->is_stable()) k = std::max(k, x->interval().j);
    for (const auto& c : x->children()) stack.push_back(&c);
  }
  return k_class_expr(e, k);
}

int order_shift(const ObjExpr& e) { return e.is_stable() ? e.interval().m : 0; }

}  // namespace

ObjExpr ObjExpr::make_sum(std::vector<ObjExpr> parts) {
  std::vector<ObjExpr> flat;
  for (auto& p : parts) {
    if (p.is_zero()) continue;
    if (p.kind() == Kind::Sum)
      flat.insert(flat.end(), p.children().begin(), p.children().end());
    else
      flat.push_back(std::move(p));
  }
  if (flat.empty()) return ObjExpr();
  if (flat.size() == 1) return flat[0];
  std::vector<std::pair<std::tuple<KVector, int, std::string>, ObjExpr>> keyed;
  for (auto& f : flat) keyed.push_back({{class_for_order(f), order_shift(f), f.key()}, f});
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  auto n = std::make_shared<Node>();
  n->kind = Kind::Sum;
  n->key = "(";
  for (size_t t = 0; t < keyed.size(); ++t) {
    if (t) n->key += " + ";
    n->key += keyed[t].second.key();
    n->kids.push_back(keyed[t].second);
  }
  n->key += ")";
  return ObjExpr(n);
}

std::string to_string(const ObjExpr& e) { return e.key(); }

ObjExpr shift(const ObjExpr& e, int n) {
  if (n == 0) return e;
  switch (e.kind()) {
    case ObjExpr::Kind::Zero: return e;
    case ObjExpr::Kind::Stable: return ObjExpr::stable(e.interval().shifted(n));
    case ObjExpr::Kind::Ext: return ObjExpr::make_ext(shift(e.sub(), n), shift(e.quotient(), n));
    case ObjExpr::Kind::Sum: {
      std::vector<ObjExpr> parts;
      for (const auto& c : e.children()) parts.push_back(shift(c, n));
      return ObjExpr::make_sum(std::move(parts));
    }
  }
  return e;
}

ObjExpr sum(const ObjExpr& a, const ObjExpr& b) { return ObjExpr::make_sum({a, b}); }
ObjExpr sum(std::vector<ObjExpr> parts) { return ObjExpr::make_sum(std::move(parts)); }

std::vector<ObjExpr> summands(const ObjExpr& e) {
  if (e.is_zero()) return {};
  if (e.kind() == ObjExpr::Kind::Sum) return e.children();
  return {e};
}

KVector k_class_expr(const ObjExpr& e, int k) {
  switch (e.kind()) {
    case ObjExpr::Kind::Zero: return KVector(k, 0);
    case ObjExpr::Kind::Stable: return k_class(e.interval(), k);
    default: {
      KVector v(k, 0);
      for (const auto& c : e.children()) v = v + k_class_expr(c, k);
      return v;
    }
  }
}

bool is_interval_sum(const ObjExpr& e) {
  for (const auto& s : summands(e))
    if (!s.is_stable()) return false;
  return true;
}

int leaf_count(const ObjExpr& e) {
  if (e.is_stable()) return 1;
  int n = 0;
  for (const auto& c : e.children()) n += leaf_count(c);
  return n;
}

void validate(const ObjExpr& e, int k) {
  if (e.is_stable()) validate(e.interval(), k);
  for (const auto& c : e.children()) validate(c, k);
}

Category::Category(int k, int N) : alg_(k, N) {}

Complex Category::realize(const ObjExpr& e) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(e.key());
    if (it != cache_.end()) return it->second;
  }
  Complex c;
  switch (e.kind()) {
    case ObjExpr::Kind::Zero: break;
    case ObjExpr::Kind::Stable: c = interval_complex(alg_, e.interval()); break;
    case ObjExpr::Kind::Sum:
      for (const auto& s : e.children()) c = direct_sum(c, realize(s));
      break;
    case ObjExpr::Kind::Ext: {
      Complex a = realize(e.sub()), b = realize(e.quotient());
      auto classes = cohomology_basis(alg_, b, a, 1);
      if (classes.empty()) throw Error(ErrorCode::ExtUndefined, "no extension class for " + e.key());
      if (classes.size() > 1) throw Error(ErrorCode::UnknownHom, "extension class not unique for " + e.key());
      c = minimize(alg_, extension_cone(a, b, classes[0]));
      break;
    }
  }
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(e.key(), c);
  return c;
}

GradedDims Category::hom(const ObjExpr& a, const ObjExpr& b) const {
  validate(a, k());
  validate(b, k());
  if (is_interval_sum(a) && is_interval_sum(b)) {
    GradedDims g;
    for (const auto& x : summands(a))
      for (const auto& y : summands(b))
        for (const auto& [d, n] : hom_dims(x.interval(), y.interval(), N())) g[d] += n;
    return g;
  }
  return hom_dims(alg_, realize(a), realize(b));
}

bool Category::is_zero(const ObjExpr& e) const {
  if (e.is_zero()) return true;
  if (is_interval_sum(e)) return false;
  return akstab::is_zero(alg_, realize(e));
}

bool Category::iso(const ObjExpr& a, const ObjExpr& b) const {
  if (a == b) return true;
  return isomorphic(alg_, realize(a), realize(b));
}

namespace {

int ext1_dim(const Category& cat, const ObjExpr& a, const ObjExpr& b) {
  auto g = cat.hom(b, a);
  auto it = g.find(1);
  return it == g.end() ? 0 : it->second;
}

}  // namespace

ObjExpr extension(const Category& cat, const ObjExpr& a, const ObjExpr& b) {
  int d = ext1_dim(cat, a, b);
  if (d == 0) throw Error(ErrorCode::ExtUndefined, "Ext^1(" + b.key() + ", " + a.key() + ") = 0");
  if (d > 1)
    throw Error(ErrorCode::UnknownHom, "Ext^1(" + b.key() + ", " + a.key() + ") has dimension " + std::to_string(d));
  return ObjExpr::make_ext(a, b);
}

std::optional<ObjExpr> rewrite_pair(const IntervalObject& x, const IntervalObject& y) {
  const int s = x.m - y.m, b = y.m;
  auto P = [](int i, int j, int m) { return ObjExpr::stable(i, j, m); };
  if (s == 0) {
    if (y.i == x.j + 1) return P(x.i, y.j, b);
    if (x.i < y.i && y.i <= x.j && x.j < y.j) return sum(P(y.i, x.j, b), P(x.i, y.j, b));
  } else if (s == -1) {
    if (x.same_interval(y)) return ObjExpr::zero();
    if (y.i == x.i && y.j < x.j) return P(y.j + 1, x.j, b - 1);
    if (y.j == x.j && y.i < x.i) return P(y.i, x.i - 1, b);
    if (y.i < x.i && x.i <= y.j && y.j < x.j) return sum(P(y.j + 1, x.j, b - 1), P(y.i, x.i - 1, b));
  }
  return std::nullopt;
}

ObjExpr ext(const Category& cat, const ObjExpr& a, const ObjExpr& b) {
  auto as = summands(a), bs = summands(b);
  int total = 0;
  size_t ia = 0, ib = 0;
  for (size_t x = 0; x < as.size(); ++x)
    for (size_t y = 0; y < bs.size(); ++y) {
      int d = ext1_dim(cat, as[x], bs[y]);
      if (d > 0) {
        ia = x;
        ib = y;
      }
      total += d;
    }
  if (total == 0) throw Error(ErrorCode::ExtUndefined, "Ext^1(" + b.key() + ", " + a.key() + ") = 0");
  if (total > 1)
    throw Error(ErrorCode::UnknownHom, "Ext^1(" + b.key() + ", " + a.key() + ") has dimension " + std::to_string(total));
  std::vector<ObjExpr> parts;
  for (size_t x = 0; x < as.size(); ++x)
    if (x != ia) parts.push_back(as[x]);
  for (size_t y = 0; y < bs.size(); ++y)
    if (y != ib) parts.push_back(bs[y]);
  const ObjExpr& x = as[ia];
  const ObjExpr& y = bs[ib];
  std::optional<ObjExpr> r;
  if (x.is_stable() && y.is_stable()) r = rewrite_pair(x.interval(), y.interval());
  parts.push_back(r ? *r : ObjExpr::make_ext(x, y));
  return sum(std::move(parts));
}

const char* to_string(IdentityStatus s) {
  switch (s) {
    case IdentityStatus::Holds: return "holds";
    case IdentityStatus::Fails: return "fails";
    case IdentityStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

namespace {

// Unique class of Ext^1(Y, X) on realizations, if one-dimensional.
std::optional<Morphism> unique_class(const GradedAlgebra& alg, const Complex& x, const Complex& y) {
  auto cls = cohomology_basis(alg, y, x, 1);
  if (cls.size() != 1) return std::nullopt;
  return cls[0];
}

bool same_object(const Category& cat, const ObjExpr& p, const ObjExpr& q) { return p == q || cat.iso(p, q); }

}  // namespace

AssocCommuteReport assoc_commute_check(const Category& cat, const ObjExpr& a, const ObjExpr& b, const ObjExpr& c) {
  AssocCommuteReport rep;
  const auto& alg = cat.algebra();
  Complex ra = cat.realize(a), rb = cat.realize(b), rc = cat.realize(c);
  auto note = [&](const std::string& s) { rep.trace.push_back(s); };
  bool any_zero = false;

  // A#(B#C) vs B#(A#C): classes e in Ext^1(C,A), f in Ext^1(C,B).
  auto e = unique_class(alg, ra, rc);
  auto f = unique_class(alg, rb, rc);
  if (!e || !f) {
    note("commute: Ext^1(C,A) or Ext^1(C,B) is not one-dimensional");
    any_zero = any_zero || cohomology_basis(alg, rc, ra, 1).empty() || cohomology_basis(alg, rc, rb, 1).empty();
  } else {
    Complex bc = extension_cone(rb, rc, *f), ac = extension_cone(ra, rc, *e);
    Morphism ef = compose(alg, *e, cone_projection(rb, rc));
    Morphism fe = compose(alg, *f, cone_projection(ra, rc));
    bool ef_ok = !is_exact(alg, bc, ra, ef) && cohomology_basis(alg, bc, ra, 1).size() == 1;
    bool fe_ok = !is_exact(alg, ac, rb, fe) && cohomology_basis(alg, ac, rb, 1).size() == 1;
    if (!ef_ok || !fe_ok) {
      note("commute: cup-product classes vanish or are not the unique classes");
    } else {
      try {
        ObjExpr lhs = ext(cat, a, ext(cat, b, c));
        ObjExpr rhs = ext(cat, b, ext(cat, a, c));
        bool ok = same_object(cat, lhs, rhs);
        rep.commute = ok ? IdentityStatus::Holds : IdentityStatus::Fails;
        note("commute: " + lhs.key() + (ok ? " == " : " != ") + rhs.key());
      } catch (const Error& err) {
        note(std::string("commute: ") + err.name() + ": " + err.what());
      }
    }
  }

  // A#(B#C) vs (A#B)#C: classes in Ext^1(B,A) and Ext^1(C,B).
  auto g = unique_class(alg, ra, rb);
  if (!g || !f) {
    note("assoc: Ext^1(B,A) or Ext^1(C,B) is not one-dimensional");
    any_zero = any_zero || cohomology_basis(alg, rb, ra, 1).empty() || cohomology_basis(alg, rc, rb, 1).empty();
  } else {
    Complex bc = extension_cone(rb, rc, *f), ab = extension_cone(ra, rb, *g);
    auto outer_left = unique_class(alg, ra, bc);   // Ext^1(B#C, A)
    auto outer_right = unique_class(alg, ab, rc);  // Ext^1(C, A#B)
    bool ok_left = outer_left && !is_exact(alg, rb, ra, compose(alg, *outer_left, cone_inclusion(rb, rc)));
    bool ok_right = outer_right && !is_exact(alg, rc, rb, compose(alg, cone_projection(ra, rb), *outer_right));
    if (!ok_left || !ok_right) {
      note("assoc: outer classes do not restrict to the defining classes");
    } else {
      try {
        ObjExpr lhs = ext(cat, a, ext(cat, b, c));
        ObjExpr rhs = ext(cat, ext(cat, a, b), c);
        bool ok = same_object(cat, lhs, rhs);
        rep.assoc = ok ? IdentityStatus::Holds : IdentityStatus::Fails;
        note("assoc: " + lhs.key() + (ok ? " == " : " != ") + rhs.key());
      } catch (const Error& err) {
        note(std::string("assoc: ") + err.name() + ": " + err.what());
      }
    }
  }
  if (any_zero && rep.commute == IdentityStatus::NotApplicable && rep.assoc == IdentityStatus::NotApplicable)
    throw Error(ErrorCode::ExtUndefined, "a defining Ext^1 vanishes for (" + a.key() + ", " + b.key() + ", " + c.key() + ")");
  return rep;
}

}  // namespace akstab
