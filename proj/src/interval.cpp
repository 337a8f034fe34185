#include "akstab/interval.hpp"

#include <sstream>

namespace akstab {

std::string to_string(const IntervalObject& p) {
  std::string s = "P" + std::to_string(p.i) + std::to_string(p.j);
  if (p.i > 9 || p.j > 9) s = "P(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")";
  if (p.m != 0) s += "[" + std::to_string(p.m) + "]";
  return s;
}

void validate(const IntervalObject& p, int k) {
  if (p.i < 1 || p.i > p.j || p.j > k)
    throw Error(ErrorCode::InvalidArgument,
                "interval (" + std::to_string(p.i) + "," + std::to_string(p.j) + ") invalid for k=" + std::to_string(k));
}

KVector operator+(const KVector& a, const KVector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::InvalidArgument, "K-vector length mismatch");
  KVector c(a.size());
  for (size_t t = 0; t < a.size(); ++t) c[t] = a[t] + b[t];
  return c;
}

KVector operator-(const KVector& a) { return scaled(a, -1); }

KVector scaled(const KVector& a, long long s) {
  KVector c(a);
  for (auto& x : c) x *= s;
  return c;
}

std::string to_string(const KVector& v) {
  std::ostringstream os;
  os << '(';
  for (size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
  os << ')';
  return os.str();
}

namespace {

// Shift-zero table with source P_kl and target P_ij.
GradedDims base_homs(int k, int l, int i, int j, int N) {
  if (k == i && l == j) return {{0, 1}, {N, 1}};
  if (i < k && k <= j && j < l) return {{1, 1}, {N, 1}};
  if ((i == k && j < l) || (i < k && j == l)) return {{N, 1}};
  if (k == j + 1) return {{1, 1}};
  // Mirror cases: swap arguments, d -> N - d.
  if (k < i && i <= l && l < j) return {{N - 1, 1}, {0, 1}};
  if ((k == i && l < j) || (k < i && l == j)) return {{0, 1}};
  if (i == l + 1) return {{N - 1, 1}};
  return {};
}

}  // namespace

GradedDims hom_dims(const IntervalObject& A, const IntervalObject& B, int N) {
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "N must be >= 2");
  // Hom^d(A[mA],B[mB]) = Hom^{d+mB-mA}(A,B)
  return shift_degrees(base_homs(A.i, A.j, B.i, B.j, N), A.m - B.m);
}

KVector unit_class(int i, int j, int k) {
  KVector v(k, 0);
  for (int t = i; t <= j; ++t) v[t - 1] = 1;
  return v;
}

KVector k_class(const IntervalObject& A, int k) {
  validate(A, k);
  return scaled(unit_class(A.i, A.j, k), (A.m % 2 == 0) ? 1 : -1);
}

long long euler_form(const KVector& v, const KVector& w, int N) {
  if (v.size() != w.size()) throw Error(ErrorCode::InvalidArgument, "K-vector length mismatch");
  const long long self = (N % 2 == 0) ? 2 : 0;
  const long long back = ((N - 1) % 2 == 0) ? 1 : -1;
  long long s = 0;
  const size_t k = v.size();
  for (size_t a = 0; a < k; ++a) {
    s += self * v[a] * w[a];
    if (a + 1 < k) {
      // Hom*(P_a,P_{a+1}) sits in degree N-1, Hom*(P_{a+1},P_a) in degree 1.
      s += back * v[a] * w[a + 1];
      s -= v[a + 1] * w[a];
    }
  }
  return s;
}

long long euler_characteristic(const GradedDims& g) {
  long long s = 0;
  for (const auto& [d, n] : g) s += ((d % 2 == 0) ? 1 : -1) * n;
  return s;
}

std::vector<IntervalObject> all_intervals(int k) {
  std::vector<IntervalObject> out;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) out.push_back({i, j, 0});
  return out;
}

SerreReport serre_check(int k, int N) {
  SerreReport rep;
  auto ivs = all_intervals(k);
  for (const auto& a : ivs) {
    for (const auto& b : ivs) {
      ++rep.pairs_checked;
      if (hom_dims(a, b, N) != dual_degrees(hom_dims(b, a, N), N)) {
        rep.pass = false;
        rep.failures.push_back(to_string(a) + " -> " + to_string(b));
      }
    }
  }
  return rep;
}

}  // namespace akstab
