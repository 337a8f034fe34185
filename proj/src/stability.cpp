#include "akstab/stability.hpp"

#include "akstab/hn.hpp"

namespace akstab {

int stable_index(int i, int j, int k) {
  if (i < 1 || i > j || j > k) throw Error(ErrorCode::IndexOutOfRange, "no stable class (" + std::to_string(i) + "," + std::to_string(j) + ")");
  int idx = 0;
  for (int a = 1; a < i; ++a) idx += k - a + 1;
  return idx + (j - i);
}

const StableEntry& StabilityCondition::stable(int i, int j) const { return stables.at(stable_index(i, j, k)); }
StableEntry& StabilityCondition::stable(int i, int j) { return stables.at(stable_index(i, j, k)); }

GaussianRational charge(const std::vector<GaussianRational>& Z, const KVector& v) {
  if (v.size() != Z.size()) throw Error(ErrorCode::InvalidArgument, "K-vector length mismatch");
  GaussianRational z(0, 0);
  for (size_t t = 0; t < v.size(); ++t)
    if (v[t] != 0) z += Rational(static_cast<long>(v[t])) * Z[t];
  return z;
}

GaussianRational charge(const StabilityCondition& S, const KVector& v) { return charge(S.Z, v); }

GaussianRational StabilityCondition::class_charge(int i, int j) const { return charge(Z, unit_class(i, j, k)); }

bool same_condition(const StabilityCondition& a, const StabilityCondition& b) {
  if (a.k != b.k || a.N != b.N || a.Z != b.Z || a.stables.size() != b.stables.size()) return false;
  for (size_t t = 0; t < a.stables.size(); ++t) {
    const auto& x = a.stables[t];
    const auto& y = b.stables[t];
    if (x.object != y.object) return false;
    if (x.phase.winding() != y.phase.winding() || x.phase.direction() != y.phase.direction()) return false;
    if (x.handle.history.size() != y.handle.history.size()) return false;
    for (size_t h = 0; h < x.handle.history.size(); ++h)
      if (x.handle.history[h].previous != y.handle.history[h].previous) return false;
  }
  return true;
}

StabilityCondition standard_condition(int k, int N, const std::vector<GaussianRational>& Z,
                                      const std::vector<long>& windings) {
  if (static_cast<int>(Z.size()) != k) throw Error(ErrorCode::InvalidArgument, "need k central charges");
  std::vector<long> w = windings;
  if (w.empty()) w.assign(k, 0);
  if (static_cast<int>(w.size()) != k) throw Error(ErrorCode::InvalidArgument, "need k windings");
  StabilityCondition S;
  S.category = std::make_shared<Category>(k, N);
  S.k = k;
  S.N = N;
  S.Z = Z;
  std::vector<PhaseLift> base;
  for (int i = 0; i < k; ++i) {
    if (Z[i].is_zero()) throw Error(ErrorCode::ZeroCharge, "Z(P_" + std::to_string(i + 1) + ") = 0");
    base.push_back(PhaseLift::at_or_above(Z[i], 2 * w[i]));
  }
  for (int i = 0; i + 1 < k; ++i)
    if (!(base[i] < base[i + 1]))
      throw Error(ErrorCode::PhaseOrderViolation, "phases of P_" + std::to_string(i + 1) + " and P_" + std::to_string(i + 2) +
                                                      " are not increasing");
  if (!(base[k - 1] < base[0].shifted(1)))
    throw Error(ErrorCode::PhaseOrderViolation, "phase spread is not below 1");
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      GaussianRational z = S.class_charge(i, j);
      if (z.is_zero())
        throw Error(ErrorCode::ZeroCharge, "Z(P_" + std::to_string(i) + std::to_string(j) + ") = 0");
      PhaseLift p = PhaseLift::at_or_above(z, base[i - 1].winding());
      if (p < base[i - 1]) p = p.shifted(2);
      if (p > base[j - 1])
        throw Error(ErrorCode::PhaseOrderViolation, "no lift of Z(P_" + std::to_string(i) + std::to_string(j) + ") in range");
      StableEntry e;
      e.i = i;
      e.j = j;
      e.object = ObjExpr::stable(i, j, 0);
      e.phase = p;
      e.handle.base = {i, j, 0};
      S.stables.push_back(std::move(e));
    }
  return S;
}

std::optional<StableMatch> match_stable(const StabilityCondition& S, const ObjExpr& e) {
  if (e.is_zero() || e.kind() == ObjExpr::Kind::Sum) return std::nullopt;
  // The shift is carried by the leaves, so compare against X[m] for the
  // shift read off the first leaf.
  const ObjExpr* leaf = &e;
  while (!leaf->is_stable()) leaf = &leaf->children().front();
  for (const auto& st : S.stables) {
    const ObjExpr* sl = &st.object;
    while (!sl->is_stable()) sl = &sl->children().front();
    if (sl->interval().i != leaf->interval().i || sl->interval().j != leaf->interval().j) continue;
    int m = leaf->interval().m - sl->interval().m;
    if (shift(st.object, m) == e) return StableMatch{st.i, st.j, m, st.phase.shifted(m)};
  }
  return std::nullopt;
}

namespace {

void fail(AxiomCheck& c, const std::string& w) {
  c.pass = false;
  if (c.witnesses.size() < 20) c.witnesses.push_back(w);
}

}  // namespace

AxiomReport check_axioms(const StabilityCondition& S, const std::vector<ObjExpr>& sample, int shift_window) {
  AxiomReport rep;
  const Category& cat = S.cat();

  AxiomCheck a{"a", true, {}};
  for (const auto& st : S.stables)
    for (int m = -shift_window; m <= shift_window; ++m) {
      auto mt = match_stable(S, shift(st.object, m));
      if (!mt || mt->phase != st.phase.shifted(m) || !mt->phase.matches(charge(S, k_class_expr(shift(st.object, m), S.k))))
        fail(a, "shift " + std::to_string(m) + " of " + st.object.key());
    }

  AxiomCheck b{"b", true, {}};
  for (const auto& st : S.stables) {
    KVector v = k_class_expr(st.object, S.k);
    if (v != unit_class(st.i, st.j, S.k)) fail(b, st.object.key() + " has the wrong K-class");
    GaussianRational z = charge(S, v);
    if (z.is_zero() || !st.phase.matches(z)) fail(b, st.object.key() + " phase " + to_string(st.phase) + " vs Z = " + to_string(z));
  }

  AxiomCheck d{"d", true, {}};
  for (const auto& x : S.stables)
    for (const auto& y : S.stables) {
      GradedDims h = cat.hom(x.object, y.object);
      for (const auto& [deg, n] : h) {
        // Hom(X, Y[deg]) != 0 needs phi(X) <= phi(Y) + deg.
        if (x.phase > y.phase.shifted(deg))
          fail(d, "Hom^" + std::to_string(deg) + "(" + x.object.key() + ", " + y.object.key() + ") != 0");
      }
    }

  AxiomCheck e{"e", true, {}};
  for (const auto& st : S.stables)
    if (charge(S, k_class_expr(st.object, S.k)).is_zero()) fail(e, st.object.key() + " has zero mass");

  AxiomCheck c{"c", true, {}};
  for (const auto& obj : sample) {
    try {
      HNFiltration f = hn(S, obj);
      std::string why;
      if (!valid_filtration(S, obj, f, &why)) fail(c, obj.key() + ": " + why);
    } catch (const Error& err) {
      fail(c, obj.key() + ": " + err.name() + " " + err.what());
    }
  }

  rep.checks = {a, b, c, d, e};
  for (const auto& ch : rep.checks) rep.pass = rep.pass && ch.pass;
  return rep;
}

bool heart_membership(const StabilityCondition& S, const ObjExpr& e, const PhaseLift& t) {
  HNFiltration f = hn(S, e);
  for (const auto& fac : f.factors)
    if (!(fac.phase > t && fac.phase <= t.shifted(1))) return false;
  return true;
}

bool termination_potential(const std::vector<Quadruple>& quads, int x_max, const Rational& A, const Rational& r) {
  if (!(r > 0 && r < 1 && A > 1)) throw Error(ErrorCode::InvalidArgument, "need 0 < r < 1 and A > 1");
  for (const auto& q : quads)
    if (!(q.phi < q.alpha && q.alpha <= q.beta && q.beta < q.psi))
      throw Error(ErrorCode::InvalidQuadruple, "need phi < alpha <= beta < psi");
  Rational rx = 1;  // r^x
  for (int x = 0; x <= x_max; ++x) {
    Rational fx = A - rx, fx1 = A - rx * r;
    for (const auto& q : quads)
      if (!(fx * q.phi + fx1 * q.psi > fx * q.beta + fx1 * q.alpha)) return false;
    rx *= r;
  }
  return true;
}

}  // namespace akstab
