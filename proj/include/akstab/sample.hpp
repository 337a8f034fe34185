#pragma once

#include <random>
#include <vector>

#include "akstab/stability.hpp"

namespace akstab {

// Charges in the open upper half-plane with strictly increasing argument.
StabilityCondition random_standard(int k, int N, std::mt19937_64& rng);

// Shifted stables of S with shifts in [lo, hi].
std::vector<ObjExpr> stable_leaves(const StabilityCondition& S, int lo, int hi);

// Every expression with at most max_leaves leaves from the given list, built
// by direct sums and by extensions whose class is unique up to scale.
std::vector<ObjExpr> small_expressions(const StabilityCondition& S, const std::vector<ObjExpr>& leaves,
                                       int max_leaves);

// Right-comb tower of n random leaves; each step is a nonsplit extension
// when the class is unique, a direct sum otherwise.
ObjExpr random_tower(const StabilityCondition& S, int n, int lo, int hi, std::mt19937_64& rng);

// Whether Ext(a, b) has a unique class up to scale.
bool unique_extension(const Category& cat, const ObjExpr& a, const ObjExpr& b);

}  // namespace akstab
