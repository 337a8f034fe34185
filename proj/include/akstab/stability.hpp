#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "akstab/expr.hpp"
#include "akstab/phase.hpp"

namespace akstab {

struct HistoryEntry {
  ObjExpr previous;
  std::string wall;
};

// Provenance of a stable object: the interval it started as and the
// crossing substitutions applied since.
struct StableHandle {
  IntervalObject base;
  std::vector<HistoryEntry> history;
};

// The stable object of class [P_ij]: its K-class is exactly [P_ij].
struct StableEntry {
  int i = 1;
  int j = 1;
  ObjExpr object;
  PhaseLift phase;
  StableHandle handle;
};

struct StabilityCondition {
  std::shared_ptr<const Category> category;
  int k = 1;
  int N = 2;
  std::vector<GaussianRational> Z;
  std::vector<StableEntry> stables;  // (i,j) in lexicographic order
  bool standard = true;

  const Category& cat() const { return *category; }
  const StableEntry& stable(int i, int j) const;
  StableEntry& stable(int i, int j);
  GaussianRational class_charge(int i, int j) const;
};

int stable_index(int i, int j, int k);
bool same_condition(const StabilityCondition& a, const StabilityCondition& b);

StabilityCondition standard_condition(int k, int N, const std::vector<GaussianRational>& Z,
                                      const std::vector<long>& windings);
// Rebuild of the stable set of a standard condition for new charges, keeping
// the category context.
GaussianRational charge(const StabilityCondition& S, const KVector& v);
GaussianRational charge(const std::vector<GaussianRational>& Z, const KVector& v);

// A stable of S (possibly shifted) matching e, with its phase.
struct StableMatch {
  int i;
  int j;
  int shift;
  PhaseLift phase;
};
std::optional<StableMatch> match_stable(const StabilityCondition& S, const ObjExpr& e);

struct AxiomCheck {
  std::string axiom;
  bool pass = true;
  std::vector<std::string> witnesses;
};

struct AxiomReport {
  bool pass = true;
  std::vector<AxiomCheck> checks;
};

AxiomReport check_axioms(const StabilityCondition& S, const std::vector<ObjExpr>& sample, int shift_window = 2);

bool heart_membership(const StabilityCondition& S, const ObjExpr& e, const PhaseLift& t);

struct Quadruple {
  Rational phi, psi, alpha, beta;
};

// Whether f(x) = A - r^x satisfies f(x)phi + f(x+1)psi > f(x)beta + f(x+1)alpha
// for every quadruple and every integer x in [0, x_max].
bool termination_potential(const std::vector<Quadruple>& quads, int x_max, const Rational& A, const Rational& r);

}  // namespace akstab
