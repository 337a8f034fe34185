#pragma once

#include <map>
#include <optional>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "akstab/complex.hpp"
#include "akstab/interval.hpp"

namespace akstab {

// Formal object of D_k^N. Shifts live on the leaves; Ext(A,B) is the
// extension A -> A#B -> B by the unique nonzero class of Ext^1(B,A).
class ObjExpr {
 public:
  enum class Kind { Zero, Stable, Sum, Ext };

  ObjExpr();  // zero
  static ObjExpr zero() { return ObjExpr(); }
  static ObjExpr stable(const IntervalObject& p);
  static ObjExpr stable(int i, int j, int m = 0) { return stable(IntervalObject{i, j, m}); }

  Kind kind() const { return node_->kind; }
  bool is_zero() const { return kind() == Kind::Zero; }
  bool is_stable() const { return kind() == Kind::Stable; }
  const IntervalObject& interval() const { return node_->leaf; }
  // Sum: summands. Ext: {A, B}.
  const std::vector<ObjExpr>& children() const { return node_->kids; }
  const ObjExpr& sub() const { return node_->kids.at(0); }
  const ObjExpr& quotient() const { return node_->kids.at(1); }
  // Canonical serialization; equal strings iff structurally equal.
  const std::string& key() const { return node_->key; }

  friend bool operator==(const ObjExpr& a, const ObjExpr& b) { return a.key() == b.key(); }
  friend bool operator!=(const ObjExpr& a, const ObjExpr& b) { return !(a == b); }

  // Unchecked Ext node; use extension() or ext() instead.
  static ObjExpr make_ext(const ObjExpr& a, const ObjExpr& b);
  static ObjExpr make_sum(std::vector<ObjExpr> parts);

 private:
  struct Node {
    Kind kind = Kind::Zero;
    IntervalObject leaf;
    std::vector<ObjExpr> kids;
    std::string key;
  };
  explicit ObjExpr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const ObjExpr& e);

ObjExpr shift(const ObjExpr& e, int n);
ObjExpr sum(const ObjExpr& a, const ObjExpr& b);
ObjExpr sum(std::vector<ObjExpr> parts);
// Summands of a sum, the expression itself otherwise, nothing for zero.
std::vector<ObjExpr> summands(const ObjExpr& e);
KVector k_class_expr(const ObjExpr& e, int k);
bool is_interval_sum(const ObjExpr& e);
int leaf_count(const ObjExpr& e);
void validate(const ObjExpr& e, int k);

// Category context: the algebra plus certified Hom computations. Hom
// spaces between interval sums come from the table; anything involving an
// Ext node is computed on a twisted-complex realization.
class Category {
 public:
  Category(int k, int N);

  int k() const { return alg_.k(); }
  int N() const { return alg_.N(); }
  const GradedAlgebra& algebra() const { return alg_; }

  Complex realize(const ObjExpr& e) const;
  GradedDims hom(const ObjExpr& a, const ObjExpr& b) const;
  bool is_zero(const ObjExpr& e) const;
  bool iso(const ObjExpr& a, const ObjExpr& b) const;

 private:
  GradedAlgebra alg_;
  mutable std::mutex mu_;
  mutable std::map<std::string, Complex> cache_;
};

// Certified extension node: requires dim Ext^1(B,A) = 1, no rewriting.
ObjExpr extension(const Category& cat, const ObjExpr& a, const ObjExpr& b);
// Normalized extension: splits off summands that do not carry the class and
// applies the interval rewrite table; opaque Ext node otherwise.
ObjExpr ext(const Category& cat, const ObjExpr& a, const ObjExpr& b);
// Rewrite table for two interval stables; nullopt when no rule applies.
std::optional<ObjExpr> rewrite_pair(const IntervalObject& a, const IntervalObject& b);

enum class IdentityStatus { Holds, Fails, NotApplicable };
const char* to_string(IdentityStatus s);

struct AssocCommuteReport {
  IdentityStatus commute = IdentityStatus::NotApplicable;  // A#(B#C) vs B#(A#C)
  IdentityStatus assoc = IdentityStatus::NotApplicable;    // A#(B#C) vs (A#B)#C
  std::vector<std::string> trace;
};

AssocCommuteReport assoc_commute_check(const Category& cat, const ObjExpr& a, const ObjExpr& b, const ObjExpr& c);

}  // namespace akstab
