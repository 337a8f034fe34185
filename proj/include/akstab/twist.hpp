#pragma once

#include <vector>

#include "akstab/expr.hpp"

namespace akstab {

// Spherical twist T_{P_a}: triangle P_a (x) Hom*(P_a,E) -> E -> T(E).
ObjExpr twist(const Category& cat, int a, const ObjExpr& e);
ObjExpr twist_inverse(const Category& cat, int a, const ObjExpr& e);
// Twist word applied right to left: word {w1, ..., wL} gives T_w1(...T_wL(e)).
// Negative entries stand for inverse twists.
ObjExpr twist_word(const Category& cat, const std::vector<int>& word, const ObjExpr& e);

using IntMatrix = std::vector<std::vector<long long>>;

// Action on K-theory: v -> v - chi(P_a, v) [P_a].
IntMatrix twist_K(int a, int k, int N);
// v -> v - chi(v, P_a) [P_a].
IntMatrix twist_K_inverse(int a, int k, int N);
IntMatrix identity_matrix(int n);
IntMatrix operator*(const IntMatrix& x, const IntMatrix& y);
KVector operator*(const IntMatrix& m, const KVector& v);

}  // namespace akstab
