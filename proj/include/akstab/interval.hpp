#pragma once

#include <string>
#include <vector>

#include "akstab/algebra.hpp"

namespace akstab {

// P_ij[m]
struct IntervalObject {
  int i = 1;
  int j = 1;
  int m = 0;

  IntervalObject shifted(int n) const { return {i, j, m + n}; }
  bool same_interval(const IntervalObject& o) const { return i == o.i && j == o.j; }
  friend bool operator==(const IntervalObject& a, const IntervalObject& b) {
    return a.i == b.i && a.j == b.j && a.m == b.m;
  }
  friend bool operator!=(const IntervalObject& a, const IntervalObject& b) { return !(a == b); }
};

std::string to_string(const IntervalObject& p);
void validate(const IntervalObject& p, int k);

using KVector = std::vector<long long>;

KVector operator+(const KVector& a, const KVector& b);
KVector operator-(const KVector& a);
KVector scaled(const KVector& a, long long s);
std::string to_string(const KVector& v);

// Graded Hom dimensions Hom^d(A,B) = Hom(A,B[d]).
GradedDims hom_dims(const IntervalObject& A, const IntervalObject& B, int N);

KVector k_class(const IntervalObject& A, int k);
KVector unit_class(int i, int j, int k);

long long euler_form(const KVector& v, const KVector& w, int N);
long long euler_characteristic(const GradedDims& g);

struct SerreReport {
  bool pass = true;
  int pairs_checked = 0;
  std::vector<std::string> failures;
};

SerreReport serre_check(int k, int N);

// All intervals (i,j), 1 <= i <= j <= k, in lexicographic order.
std::vector<IntervalObject> all_intervals(int k);

}  // namespace akstab
