#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "akstab/numeric.hpp"

namespace akstab {

// degree -> dimension; absent keys are zero.
using GradedDims = std::map<int, int>;

int total_dim(const GradedDims& g);
GradedDims shift_degrees(const GradedDims& g, int by);
GradedDims dual_degrees(const GradedDims& g, int N);
std::string to_string(const GradedDims& g);

enum class BasisKind { Idempotent, Up, Down, Loop };

// Up(i) is the arrow (i,i+1) of degree 1, Down(i) the arrow (i+1,i) of
// degree N-1, Loop(i) is f_i. Paths compose diagrammatically.
struct BasisElement {
  BasisKind kind;
  int index;
  int degree;
  int source;
  int target;
};

std::string to_string(const BasisElement& b);

// Rational combination of basis elements, keyed by basis position.
using AlgebraElement = std::map<int, Rational>;

class GradedAlgebra {
 public:
  GradedAlgebra(int k, int N);

  int k() const { return k_; }
  int N() const { return N_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<BasisElement>& basis() const { return basis_; }
  const BasisElement& element(int pos) const { return basis_.at(pos); }

  int idempotent(int i) const;
  int up(int i) const;
  int down(int i) const;
  int loop(int i) const;
  // Position of the basis path from a to b of the given degree, if any.
  std::optional<int> path(int a, int b, int degree) const;
  // Basis paths from a to b, any degree.
  const std::vector<int>& paths(int a, int b) const;

  // Product of two basis elements (x first, then y).
  std::optional<int> product(int x, int y) const { return table_[x * dim() + y]; }

  AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) const;

  // dim Hom^d(E_a,E_b) read off the basis.
  GradedDims node_homs(int a, int b) const;

 private:
  int k_;
  int N_;
  std::vector<BasisElement> basis_;
  std::vector<std::optional<int>> table_;
  std::vector<std::vector<int>> paths_;
};

inline GradedAlgebra build_algebra(int k, int N) { return GradedAlgebra(k, N); }

AlgebraElement unit(const GradedAlgebra& alg);
AlgebraElement basis_vector(int pos, Rational c = 1);
void add_to(AlgebraElement& acc, const AlgebraElement& x, const Rational& scale = 1);
std::string to_string(const GradedAlgebra& alg, const AlgebraElement& x);

struct PairingReport {
  bool perfect = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

PairingReport check_duality_pairing(const GradedAlgebra& alg);

}  // namespace akstab
