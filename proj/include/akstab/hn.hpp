#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "akstab/stability.hpp"

namespace akstab {

enum class RewriteStrategy { Leftmost, Rightmost, Random };

struct HNFactor {
  std::vector<ObjExpr> stables;  // shifted stables of S, all of this phase
  PhaseLift phase;
};

struct HNFiltration {
  std::vector<HNFactor> factors;  // strictly decreasing phase
  // mass = sum c * sqrt(q)
  std::vector<std::pair<Rational, Rational>> mass_terms;
  int steps = 0;
};

// Harder-Narasimhan filtration by the rewriting procedure: the object is
// flattened to a tower of shifted stables, realized as a block-triangular
// twisted complex, and adjacent pairs in the wrong phase order are swapped
// (split extension) or replaced by their cone decomposition.
HNFiltration hn(const StabilityCondition& S, const ObjExpr& e, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                std::uint64_t seed = 0);

// Every distinct result reachable by some order of rewrites (depth-first,
// at most max_states states visited).
std::vector<HNFiltration> hn_all_orders(const StabilityCondition& S, const ObjExpr& e, size_t max_states = 20000);

bool same_filtration(const HNFiltration& a, const HNFiltration& b);
bool valid_filtration(const StabilityCondition& S, const ObjExpr& e, const HNFiltration& f, std::string* why = nullptr);
double mass_value(const HNFiltration& f);
// sign(mass - |z|)
int compare_mass(const HNFiltration& f, const GaussianRational& z);
std::string to_string(const HNFiltration& f);

}  // namespace akstab
