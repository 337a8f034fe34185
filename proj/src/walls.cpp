#include "akstab/walls.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace akstab {

const char* to_string(WallKind k) { return k == WallKind::Parallel ? "parallel" : "antiparallel"; }

namespace {

std::vector<std::pair<int, int>> all_classes(int k) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) out.push_back({i, j});
  return out;
}

GaussianRational class_charge(const std::vector<GaussianRational>& Z, std::pair<int, int> c) {
  GaussianRational z(0, 0);
  for (int t = c.first; t <= c.second; ++t) z += Z[t - 1];
  return z;
}

QuadNum eval(const Rational& a, const Rational& b, const Rational& c, const QuadNum& t) {
  return QuadNum(a) * t * t + QuadNum(b) * t + QuadNum(c);
}

struct Root {
  QuadNum t;
  Rational qa, qb, qc;
  int root;
  size_t u, v;
};

std::string class_name(std::pair<int, int> c) { return "P" + std::to_string(c.first) + std::to_string(c.second); }

// The integer n at which phi_u - phi_v - n changes sign between the two
// states.
long crossing_shift(const PhaseLift& u0, const PhaseLift& v0, const PhaseLift& u1, const PhaseLift& v1) {
  long guess = static_cast<long>(std::floor(u0.value() - v0.value()));
  for (long n = guess - 2; n <= guess + 3; ++n) {
    bool before = u0 < v0.shifted(n), after = u1 < v1.shifted(n);
    if (before != after && u0 != v0.shifted(n) && u1 != v1.shifted(n)) return n;
  }
  throw Error(ErrorCode::NonGenericPath, "colliding phases do not cross");
}

bool has_degree(const GradedDims& h, int d) { return h.count(d) && h.at(d) > 0; }
int dim_at(const GradedDims& h, int d) { return h.count(d) ? h.at(d) : 0; }

}  // namespace

std::string describe(const WallEvent& e) {
  std::string s = "t=" + to_string(e.time) + " {";
  for (size_t t = 0; t < e.classes.size(); ++t) s += (t ? "," : "") + class_name(e.classes[t]);
  return s + "} " + to_string(e.kind);
}

std::vector<GaussianRational> interpolate(const std::vector<GaussianRational>& from,
                                          const std::vector<GaussianRational>& to, const Rational& t) {
  std::vector<GaussianRational> out;
  for (size_t c = 0; c < from.size(); ++c) out.push_back(Rational(1 - t) * from[c] + t * to[c]);
  return out;
}

std::vector<WallEvent> walls_on_segment(const StabilityCondition& S, const std::vector<GaussianRational>& target) {
  const int k = S.k;
  if (static_cast<int>(target.size()) != k) throw Error(ErrorCode::InvalidArgument, "target needs k charges");
  auto classes = all_classes(k);
  std::vector<GaussianRational> a, b;
  for (auto c : classes) {
    a.push_back(class_charge(S.Z, c));
    b.push_back(class_charge(target, c) - a.back());
  }
  for (size_t c = 0; c < classes.size(); ++c) {
    if (b[c].is_zero()) continue;
    if (sgn(cross(a[c], b[c])) != 0) continue;
    Rational t = -dot(a[c], b[c]) / b[c].norm2();
    if (t >= 0 && t <= 1) throw Error(ErrorCode::MassVanishes, "Z(" + class_name(classes[c]) + ") vanishes at t=" + to_string(t));
  }

  std::vector<Root> roots;
  auto consider = [&](const QuadNum& t, const Rational& qa, const Rational& qb, const Rational& qc, int r, size_t u, size_t v) {
    if (t.sign() <= 0) return;
    int c1 = compare(t, QuadNum(Rational(1)));
    if (c1 > 0) return;
    if (c1 == 0)
      throw Error(ErrorCode::NonGenericPath, "segment ends on a wall of " + class_name(classes[u]) + "," + class_name(classes[v]));
    roots.push_back({t, qa, qb, qc, r, u, v});
  };
  for (size_t u = 0; u < classes.size(); ++u)
    for (size_t v = u + 1; v < classes.size(); ++v) {
      Rational A = cross(b[u], b[v]), B = cross(a[u], b[v]) + cross(b[u], a[v]), C = cross(a[u], a[v]);
      if (sgn(A) == 0) {
        if (sgn(B) != 0) consider(QuadNum(-C / B), A, B, C, 0, u, v);
        continue;
      }
      Rational disc = B * B - 4 * A * C;
      if (sgn(disc) <= 0) continue;  // no root or a tangency
      Rational inv = 1 / (2 * A);
      QuadNum r1(-B * inv, -inv, disc), r2(-B * inv, inv, disc);
      if (r2 < r1) std::swap(r1, r2);
      consider(r1, A, B, C, -1, u, v);
      consider(r2, A, B, C, 1, u, v);
    }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) { return x.t < y.t; });

  std::vector<WallEvent> events;
  for (size_t s = 0; s < roots.size();) {
    size_t e = s;
    while (e < roots.size() && compare(roots[e].t, roots[s].t) == 0) ++e;
    std::set<size_t> members;
    for (size_t r = s; r < e; ++r) members.insert({roots[r].u, roots[r].v});
    const size_t pairs = e - s;
    bool ok = (members.size() == 2 && pairs == 1);
    if (members.size() == 3 && pairs == 3) {
      std::vector<size_t> m(members.begin(), members.end());
      // three interval classes are dependent iff one is the union of the others
      for (int r = 0; r < 3 && !ok; ++r) {
        auto R = classes[m[r]], X = classes[m[(r + 1) % 3]], Y = classes[m[(r + 2) % 3]];
        if (X.first > Y.first) std::swap(X, Y);
        ok = X.first == R.first && Y.second == R.second && Y.first == X.second + 1;
      }
    }
    if (!ok) throw Error(ErrorCode::NonGenericPath, "codimension-two collision at t=" + to_string(roots[s].t));
    WallEvent ev;
    ev.from = S.Z;
    ev.to = target;
    ev.time = roots[s].t;
    ev.qa = roots[s].qa;
    ev.qb = roots[s].qb;
    ev.qc = roots[s].qc;
    ev.root = roots[s].root;
    for (size_t m : members) ev.classes.push_back(classes[m]);
    ev.kind = WallKind::Parallel;
    for (size_t r = s; r < e; ++r) {
      size_t u = roots[r].u, v = roots[r].v;
      Rational da = dot(a[u], a[v]), db = dot(a[u], b[v]) + dot(b[u], a[v]), dc = dot(b[u], b[v]);
      if (eval(dc, db, da, roots[r].t).sign() < 0) ev.kind = WallKind::Antiparallel;
    }
    events.push_back(std::move(ev));
    s = e;
  }
  for (size_t t = 0; t < events.size(); ++t)
    events[t].after = t + 1 < events.size() ? rational_between(events[t].time, events[t + 1].time) : Rational(1);
  return events;
}

namespace {

StabilityCondition moved(const StabilityCondition& S, const std::vector<GaussianRational>& Z) {
  StabilityCondition out = S;
  out.Z = Z;
  out.standard = false;
  for (auto& st : out.stables) {
    GaussianRational z = out.class_charge(st.i, st.j);
    if (z.is_zero()) throw Error(ErrorCode::MassVanishes, "Z(P" + std::to_string(st.i) + std::to_string(st.j) + ") = 0");
    st.phase = nearest_lift(z, st.phase);
  }
  return out;
}

}  // namespace

StabilityCondition cross(const StabilityCondition& S, const WallEvent& e) {
  if (S.N != 2) throw Error(ErrorCode::InvalidArgument, "wall crossing is implemented for N = 2");
  const Category& cat = S.cat();
  StabilityCondition T = moved(S, interpolate(e.from, e.to, e.after));

  std::vector<size_t> idx;
  for (auto c : e.classes) idx.push_back(stable_index(c.first, c.second, S.k));
  const auto& st0 = S.stables;
  const auto& st1 = T.stables;
  // Shift each colliding stable so that all meet at the phase of the first.
  std::vector<long> n(idx.size(), 0);
  for (size_t r = 1; r < idx.size(); ++r)
    n[r] = crossing_shift(st0[idx[0]].phase, st0[idx[r]].phase, st1[idx[0]].phase, st1[idx[r]].phase);
  std::vector<ObjExpr> obj;
  std::vector<KVector> cls;
  for (size_t r = 0; r < idx.size(); ++r) {
    obj.push_back(shift(st0[idx[r]].object, n[r]));
    cls.push_back(scaled(unit_class(st0[idx[r]].i, st0[idx[r]].j, S.k), n[r] % 2 ? -1 : 1));
  }

  if (idx.size() == 2) {
    GradedDims h = cat.hom(obj[0], obj[1]), g = cat.hom(obj[1], obj[0]);
    if (has_degree(h, 0) || has_degree(g, 0) || has_degree(h, 1))
      throw Error(ErrorCode::NotSimple, "colliding stables without a third class have morphisms: " + describe(e));
    return T;
  }

  // Triple: the class that is the sum of the other two is the extension.
  size_t R = 3;
  for (size_t r = 0; r < 3; ++r)
    if (cls[r] == cls[(r + 1) % 3] + cls[(r + 2) % 3]) R = r;
  if (R == 3) throw Error(ErrorCode::NotSimple, "colliding classes are not additive after shifting: " + describe(e));
  size_t p = (R + 1) % 3, q = (R + 2) % 3;
  auto before = [&](size_t r) { return st0[idx[r]].phase.shifted(n[r]); };
  if (before(q) < before(p)) std::swap(p, q);
  const ObjExpr& A = obj[p];  // lower phase before the wall
  const ObjExpr& B = obj[q];
  GradedDims ab = cat.hom(A, B), ba = cat.hom(B, A);
  if (!has_degree(ab, 1) && !has_degree(ba, 1)) return T;
  if (dim_at(ba, 1) != 1 || dim_at(ab, 1) != 1) throw Error(ErrorCode::UnknownHom, "extension classes are not unique: " + describe(e));
  if (!cat.iso(obj[R], ObjExpr::make_ext(A, B)))
    throw Error(ErrorCode::NotSimple, "stable " + obj[R].key() + " is not the extension " + A.key() + " # " + B.key());

  StableEntry& target = T.stables[idx[R]];
  ObjExpr fresh = shift(ObjExpr::make_ext(B, A), -n[R]);
  auto& hist = target.handle.history;
  if (!hist.empty() && cat.iso(fresh, hist.back().previous)) {
    target.object = hist.back().previous;
    hist.pop_back();
  } else {
    hist.push_back({target.object, describe(e)});
    target.object = fresh;
  }
  return T;
}

StabilityCondition move_along(const StabilityCondition& S, const std::vector<GaussianRational>& target,
                              std::vector<WallEvent>* events) {
  auto evs = walls_on_segment(S, target);
  if (evs.empty()) return moved(S, target);
  StabilityCondition cur = S;
  for (const auto& e : evs) cur = cross(cur, e);
  if (events) events->insert(events->end(), evs.begin(), evs.end());
  return cur;
}

StabilityCondition track_path(const StabilityCondition& S, const std::vector<std::vector<GaussianRational>>& vertices,
                              std::vector<WallEvent>* events) {
  StabilityCondition cur = S;
  for (const auto& v : vertices) cur = move_along(cur, v, events);
  return cur;
}

SimpleReport is_simple(const StabilityCondition& S, bool pedantic) {
  SimpleReport rep;
  auto fail = [&](const std::string& w) {
    rep.simple = false;
    rep.failures.push_back(w);
  };
  const Category& cat = S.cat();
  const int k = S.k, N = S.N;
  if (static_cast<int>(S.stables.size()) != k * (k + 1) / 2) {
    fail("expected " + std::to_string(k * (k + 1) / 2) + " stables, found " + std::to_string(S.stables.size()));
    return rep;
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& st : S.stables) {
    if (!seen.insert({st.i, st.j}).second) fail("class P" + std::to_string(st.i) + std::to_string(st.j) + " repeated");
    if (k_class_expr(st.object, k) != unit_class(st.i, st.j, k)) fail(st.object.key() + " has the wrong K-class");
    GradedDims self = cat.hom(st.object, st.object);
    if (self != GradedDims{{0, 1}, {N, 1}}) fail(st.object.key() + " is not spherical: " + to_string(self));
  }
  for (const auto& x : S.stables)
    for (const auto& y : S.stables) {
      if (&x == &y) continue;
      GradedDims h = cat.hom(x.object, y.object);
      const int a = x.i, b = x.j, c = y.i, d = y.j;
      const bool adjacent = c == b + 1 || a == d + 1;
      const bool shared = a == c || b == d;
      const std::string pair = x.object.key() + ", " + y.object.key();
      if (adjacent || shared) {
        if (total_dim(h) != 1) fail("Hom*(" + pair + ") = " + to_string(h) + " is not a single morphism");
      } else if (euler_characteristic(h) != euler_form(unit_class(a, b, k), unit_class(c, d, k), N)) {
        // zero at N = 2; for other N the value the classes force
        fail("chi(" + pair + ") does not match the Euler form");
      }
      if (pedantic && a < c && c != b + 1 && euler_characteristic(h) != 0)
        rep.literal_discrepancies.push_back("chi(" + pair + ") = " + std::to_string(euler_characteristic(h)));
      // equal phases up to shift: no degree-0 maps, so semistables split
      for (long m = -3; m <= 3; ++m)
        if (x.phase == y.phase.shifted(m) && has_degree(h, static_cast<int>(m)))
          fail("equal-phase stables " + pair + " have a morphism");
    }
  return rep;
}

GaussianRational unit_point(double theta) {
  double c = std::cos(theta);
  if (std::abs(c + 1) < 1e-12) return GaussianRational(-1);
  double s = std::tan(theta / 2);
  Rational q(static_cast<long>(std::llround(s * 256)), 256);
  q.canonicalize();
  Rational den = 1 + q * q;
  return {(1 - q * q) / den, 2 * q / den};
}

std::vector<std::vector<GaussianRational>> rotation_path(const std::vector<GaussianRational>& Z, int i, int sides,
                                                        int half_turns) {
  if (i < 1 || i > static_cast<int>(Z.size())) throw Error(ErrorCode::IndexOutOfRange, "rotation index out of range");
  if (sides < 8 || sides % 2) throw Error(ErrorCode::InvalidArgument, "sides must be even and at least 8");
  std::vector<std::vector<GaussianRational>> out;
  const int steps = sides * std::abs(half_turns) / 2;
  const double dir = half_turns < 0 ? -1 : 1;
  // Vertices sit half a step off the starting ray so that the polygon
  // closes exactly at the rotated charge.
  for (int m = 1; m <= steps + 1; ++m) {
    auto W = Z;
    double theta = m <= steps ? M_PI * (2 * m - 1) / sides : M_PI * std::abs(half_turns);
    W[i - 1] = Z[i - 1] * unit_point(dir * theta);
    out.push_back(W);
  }
  return out;
}

LoopReport generator_loop(const StabilityCondition& S, int i, int sides, int half_turns) {
  if (S.N != 2) throw Error(ErrorCode::InvalidArgument, "generator loops are tracked for N = 2");
  if (i < 1 || i > S.k) throw Error(ErrorCode::IndexOutOfRange, "generator index out of range");
  if (sides < 8 || sides % 2) throw Error(ErrorCode::InvalidArgument, "sides must be even and at least 8");
  if (half_turns < 1) throw Error(ErrorCode::InvalidArgument, "half_turns must be positive");
  const Rational mi = S.Z[i - 1].norm2();
  for (const auto& st : S.stables)
    if (!(st.i == i && st.j == i) && !(mi < S.class_charge(st.i, st.j).norm2()))
      throw Error(ErrorCode::InvalidArgument, "|Z(P_" + std::to_string(i) + ")| is not strictly the smallest mass");

  LoopReport rep;
  rep.index = i;
  rep.half_turns = half_turns;
  rep.vertices = rotation_path(S.Z, i, sides, half_turns);
  rep.final_condition = track_path(S, rep.vertices, &rep.events);
  for (const auto& e : rep.events)
    if (std::find(e.classes.begin(), e.classes.end(), std::make_pair(i, i)) == e.classes.end())
      throw Error(ErrorCode::InvalidArgument, "Z(P_" + std::to_string(i) + ") is too large: wall " + describe(e) + " away from it");

  const Category& cat = S.cat();
  std::vector<int> word(half_turns, i);
  rep.k_predicted = identity_matrix(S.k);
  for (int t = 0; t < half_turns; ++t) rep.k_predicted = twist_K(i, S.k, S.N) * rep.k_predicted;
  rep.k_action = identity_matrix(S.k);
  const auto& fin = rep.final_condition;
  if (half_turns % 2 == 0) {
    for (size_t c = 0; c < S.stables.size(); ++c) {
      const auto& x = S.stables[c];
      const auto& y = fin.stables[c];
      ClassMatch m{x.i, x.j, y.object, twist_word(cat, word, x.object)};
      m.shift = static_cast<int>(y.phase.winding() - x.phase.winding());
      m.match = y.phase == x.phase.shifted(m.shift) && cat.iso(y.object, shift(m.predicted, m.shift));
      rep.all_match = rep.all_match && m.match;
      if (x.i == x.j) {
        KVector v = k_class_expr(shift(y.object, -m.shift), S.k);
        for (int r = 0; r < S.k; ++r) rep.k_action[r][x.i - 1] = v[r];
      }
      rep.matches.push_back(std::move(m));
    }
  } else {
    // The stable set is the image of the initial one up to reindexing.
    for (const auto& y : fin.stables) {
      ClassMatch m{y.i, y.j, y.object, ObjExpr()};
      for (const auto& x : S.stables) {
        ObjExpr pred = twist_word(cat, word, x.object);
        for (int s = -3; s <= 3 && !m.match; ++s)
          if (k_class_expr(shift(pred, s), S.k) == k_class_expr(y.object, S.k) && cat.iso(y.object, shift(pred, s))) {
            m.predicted = pred;
            m.shift = s;
            m.match = true;
          }
        if (m.match) break;
      }
      rep.all_match = rep.all_match && m.match;
      rep.matches.push_back(std::move(m));
    }
    rep.k_action.clear();
  }
  return rep;
}

}  // namespace akstab
