#pragma once

#include <optional>
#include <vector>

#include "akstab/algebra.hpp"
#include "akstab/interval.hpp"

namespace akstab {

// One-sided twisted complex over the projectives: generators P_node[shift]
// and a degree-one differential. delta[t][s] is the component from
// generator s to generator t, an element of Hom(P_s, P_t), i.e. a
// combination of algebra paths from node t to node s. Composition of
// components is the algebra product g*f for g after f.
struct Generator {
  int node;
  int shift;
  friend bool operator==(const Generator& a, const Generator& b) {
    return a.node == b.node && a.shift == b.shift;
  }
};

using ComponentMatrix = std::vector<std::vector<AlgebraElement>>;

struct Complex {
  std::vector<Generator> gens;
  ComponentMatrix delta;

  int size() const { return static_cast<int>(gens.size()); }
  bool empty() const { return gens.empty(); }
};

// A morphism X -> Y of a fixed degree: comps[t][s] from X_s to Y_t.
struct Morphism {
  int degree = 0;
  ComponentMatrix comps;
};

Complex zero_complex();
Complex projective_complex(int node, int shift);
Complex interval_complex(const GradedAlgebra& alg, const IntervalObject& p);
Complex shifted(const Complex& X, int n);
Complex direct_sum(const Complex& X, const Complex& Y);
// Cone of a closed degree-one class e : B -> A, realizing the extension
// A -> A#B -> B.
Complex extension_cone(const Complex& A, const Complex& B, const Morphism& e);
// Cone of a closed degree-zero map f : X -> Y.
Complex mapping_cone(const Complex& X, const Complex& Y, const Morphism& f);

bool is_valid(const GradedAlgebra& alg, const Complex& X);

// Removes contractible pieces (invertible components) by Gaussian elimination.
Complex minimize(const GradedAlgebra& alg, const Complex& X);
// Same, eliminating only pairs of generators inside [begin, end); end is
// updated to the new end of the range.
Complex minimize_range(const GradedAlgebra& alg, const Complex& X, int begin, int& end);

GradedDims hom_dims(const GradedAlgebra& alg, const Complex& X, const Complex& Y);
// Closed representatives of a basis of H^d Hom(X,Y).
std::vector<Morphism> cohomology_basis(const GradedAlgebra& alg, const Complex& X, const Complex& Y, int d);

// g after f.
Morphism compose(const GradedAlgebra& alg, const Morphism& g, const Morphism& f);
// Whether a closed morphism X -> Y is a coboundary.
bool is_exact(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f);
// Some h of degree f.degree - 1 with D(h) = f, if f is exact.
std::optional<Morphism> solve_coboundary(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f);
// Two-sided inverse of a closed degree-zero map between minimal complexes.
std::optional<Morphism> invert(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f);
// An explicit isomorphism X -> Y of minimal complexes, if one is found.
std::optional<Morphism> find_isomorphism(const GradedAlgebra& alg, const Complex& X, const Complex& Y);
Morphism identity_morphism(const Complex& X);
Morphism zero_morphism(int rows, int cols, int degree);

// Structure maps of extension_cone(A, B, e): A -> A#B and A#B -> B.
Morphism cone_inclusion(const Complex& A, const Complex& B);
Morphism cone_projection(const Complex& A, const Complex& B);

bool is_zero(const GradedAlgebra& alg, const Complex& X);
bool isomorphic(const GradedAlgebra& alg, const Complex& X, const Complex& Y);

// Cone of evaluation P_a (x) Hom*(P_a,X) -> X.
Complex twist_complex(const GradedAlgebra& alg, int a, const Complex& X);
// Shifted cone of coevaluation X -> P_a (x) Hom*(X,P_a)^*.
Complex twist_inverse_complex(const GradedAlgebra& alg, int a, const Complex& X);

KVector k_class(const Complex& X, int k);

}  // namespace akstab
