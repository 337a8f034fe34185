#include "akstab/monodromy.hpp"

#include <cmath>

namespace akstab {

std::vector<ObjExpr> act_on_chain(const Category& cat, const BraidWord& w) {
  std::vector<ObjExpr> out;
  for (int j = 1; j <= cat.k(); ++j) out.push_back(twist_word(cat, w, ObjExpr::stable(j, j, 0)));
  return out;
}

IntMatrix word_K(const BraidWord& w, int k, int N) {
  IntMatrix m = identity_matrix(k);
  for (int g : w) m = m * (g > 0 ? twist_K(g, k, N) : twist_K_inverse(-g, k, N));
  return m;
}

GaussianRational projection_rotation(const std::vector<GaussianRational>& Z) {
  auto ordered = [&](const GaussianRational& u) {
    for (const auto& z : Z)
      if (sgn((z * u).re) <= 0) return false;
    return true;
  };
  // Try directions opposite to each charge and to pairwise bisectors.
  std::vector<double> angles;
  for (const auto& z : Z) angles.push_back(-z.arg());
  for (size_t a = 0; a < Z.size(); ++a)
    for (size_t b = a + 1; b < Z.size(); ++b) angles.push_back(-(Z[a].arg() + Z[b].arg()) / 2);
  for (size_t a = 0; a < Z.size(); ++a)
    for (size_t b = 0; b < Z.size(); ++b) angles.push_back(-(Z[a].arg() + Z[b].arg() + 2 * M_PI) / 2);
  for (double th : angles) {
    GaussianRational u = unit_point(th);
    if (ordered(u)) return u;
  }
  throw Error(ErrorCode::NonGenericLoop, "charges do not lie in an open half-plane");
}

BraidWord braid_of_charge_loop(const std::vector<GaussianRational>& Z0,
                               const std::vector<std::vector<GaussianRational>>& vertices) {
  GaussianRational u = projection_rotation(Z0);
  // Small extra rotations keep the base order while breaking ties.
  static const double jitter[] = {0, 1.0 / 97, -1.0 / 89, 1.0 / 53, -1.0 / 47, 1.0 / 211};
  for (double j : jitter) {
    GaussianRational v = u * unit_point(j);
    Configuration base = rotated(config_from_charge(Z0), v);
    bool ordered = true;
    for (size_t t = 0; t + 1 < base.points.size(); ++t) ordered = ordered && base.points[t].re < base.points[t + 1].re;
    if (!ordered) continue;
    std::vector<Configuration> loop{base};
    for (const auto& Z : vertices) {
      if (Z == Z0) continue;
      loop.push_back(rotated(config_from_charge(Z), v));
    }
    try {
      return braid_of_loop(loop);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::NonGenericLoop) throw;
    }
  }
  throw Error(ErrorCode::NonGenericLoop, "no generic projection found for the loop");
}

MonodromyReport monodromy_compare(const StabilityCondition& S, const std::vector<std::vector<GaussianRational>>& vertices) {
  if (S.N != 2) throw Error(ErrorCode::InvalidArgument, "monodromy is tracked for N = 2");
  MonodromyReport rep;
  auto path = vertices;
  if (path.empty() || path.back() != S.Z) path.push_back(S.Z);
  rep.final_condition = track_path(S, path, &rep.events);
  rep.word = braid_of_charge_loop(S.Z, path);
  rep.word_trivial = is_trivial(rep.word, S.k + 1);

  const Category& cat = S.cat();
  rep.k_predicted = word_K(rep.word, S.k, S.N);
  rep.k_action = identity_matrix(S.k);
  const auto& fin = rep.final_condition;
  for (size_t c = 0; c < S.stables.size(); ++c) {
    const auto& x = S.stables[c];
    const auto& y = fin.stables[c];
    ClassMatch m{x.i, x.j, y.object, twist_word(cat, rep.word, x.object)};
    m.shift = static_cast<int>(y.phase.winding() - x.phase.winding());
    bool same_phase = y.phase == x.phase.shifted(m.shift);
    m.match = same_phase && cat.iso(y.object, shift(m.predicted, m.shift));
    rep.objects_match = rep.objects_match && m.match;
    bool unchanged = y.phase == x.phase && cat.iso(y.object, x.object);
    rep.identity_transformation = rep.identity_transformation && unchanged;
    if (x.i == x.j) {
      KVector v = k_class_expr(shift(y.object, -m.shift), S.k);
      for (int r = 0; r < S.k; ++r) rep.k_action[r][x.i - 1] = v[r];
    }
    rep.matches.push_back(std::move(m));
  }
  rep.k_match = rep.k_action == rep.k_predicted;
  rep.consistent = rep.word_trivial == rep.identity_transformation;
  return rep;
}

}  // namespace akstab
