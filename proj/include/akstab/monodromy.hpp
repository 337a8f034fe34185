#pragma once

#include <vector>

#include "akstab/braid.hpp"
#include "akstab/walls.hpp"

namespace akstab {

// Images of the chain (P_1, ..., P_k) under T_{w1} o ... o T_{wL}, with
// sigma_j acting as T_{P_j}.
std::vector<ObjExpr> act_on_chain(const Category& cat, const BraidWord& w);
IntMatrix word_K(const BraidWord& w, int k, int N);

// Rotation of the plane that orders the partial sums of Z by real part
// (exists for standard conditions: all charges lie in an open half-plane).
GaussianRational projection_rotation(const std::vector<GaussianRational>& Z);

// Braid word of the point loop induced by a closed loop of charge vectors
// starting and ending at Z0.
BraidWord braid_of_charge_loop(const std::vector<GaussianRational>& Z0,
                               const std::vector<std::vector<GaussianRational>>& vertices);

struct MonodromyReport {
  BraidWord word;
  bool word_trivial = true;
  std::vector<WallEvent> events;
  StabilityCondition final_condition;
  std::vector<ClassMatch> matches;
  bool objects_match = true;
  IntMatrix k_action;
  IntMatrix k_predicted;
  bool k_match = true;
  // every final stable is its initial object with the same phase
  bool identity_transformation = true;
  bool consistent = true;  // word_trivial == identity_transformation
};

// vertices: the loop after Z0 = S.Z; closed back to S.Z automatically.
MonodromyReport monodromy_compare(const StabilityCondition& S, const std::vector<std::vector<GaussianRational>>& vertices);

}  // namespace akstab
