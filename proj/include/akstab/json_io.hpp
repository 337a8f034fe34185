#pragma once

#include <json.hpp>

#include "akstab/monodromy.hpp"

namespace akstab {

using json = nlohmann::json;

json to_json(const Rational& q);
Rational rational_from_json(const json& j);
json to_json(const GaussianRational& z);
GaussianRational gaussian_from_json(const json& j);
json to_json(const std::vector<GaussianRational>& zs);
std::vector<GaussianRational> charges_from_json(const json& j);
json to_json(const QuadNum& x);
json to_json(const GradedDims& d);
json to_json(const KVector& v);
json to_json(const IntMatrix& m);

// Text syntax: 0 | P12 | P(10,11) | X[m] | Ext(A, B) | (A + B) | Sum(A, B, ...)
ObjExpr parse_expr(const std::string& text);
// Either a string in the text syntax or a tree
// {"stable":[i,j,m]} | {"sum":[...]} | {"ext":[A,B]} | {"zero":true}.
ObjExpr expr_from_json(const json& j);
json expr_tree(const ObjExpr& e);
json to_json(const ObjExpr& e);  // {"expr": text, "tree": tree}

json to_json(const PhaseLift& p);
PhaseLift phase_from_json(const json& j);

json to_json(const StabilityCondition& S);
// Accepts {"k","N","Z","windings"} (standard) or a full emitted condition.
StabilityCondition condition_from_json(const json& j);

json to_json(const HNFiltration& f);
HNFiltration hn_from_json(const json& j);
json to_json(const AxiomReport& r);
json to_json(const WallEvent& e);
WallEvent wall_from_json(const json& j);
json to_json(const SimpleReport& r);
json to_json(const Configuration& c);
Configuration configuration_from_json(const json& j);
json to_json(const ClassMatch& m);
json to_json(const LoopReport& r);
json to_json(const MonodromyReport& r);
json to_json(const AssocCommuteReport& r);

json error_json(const Error& e);

}  // namespace akstab
