#include "akstab/algebra.hpp"

#include <sstream>

namespace akstab {

int total_dim(const GradedDims& g) {
  int s = 0;
  for (const auto& [d, n] : g) s += n;
  return s;
}

GradedDims shift_degrees(const GradedDims& g, int by) {
  GradedDims out;
  for (const auto& [d, n] : g) out[d + by] = n;
  return out;
}

GradedDims dual_degrees(const GradedDims& g, int N) {
  GradedDims out;
  for (const auto& [d, n] : g) out[N - d] = n;
  return out;
}

std::string to_string(const GradedDims& g) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [d, n] : g) {
    if (!first) os << ", ";
    first = false;
    os << d << ':' << n;
  }
  os << '}';
  return os.str();
}

std::string to_string(const BasisElement& b) {
  switch (b.kind) {
    case BasisKind::Idempotent: return "e" + std::to_string(b.index);
    case BasisKind::Loop: return "f" + std::to_string(b.index);
    case BasisKind::Up:
    case BasisKind::Down:
      return "(" + std::to_string(b.source) + "," + std::to_string(b.target) + ")";
  }
  return "?";
}

GradedAlgebra::GradedAlgebra(int k, int N) : k_(k), N_(N) {
  if (k < 1) throw Error(ErrorCode::InvalidArgument, "k must be >= 1");
  if (N < 2) throw Error(ErrorCode::InvalidArgument, "N must be >= 2");
  for (int i = 1; i <= k; ++i) basis_.push_back({BasisKind::Idempotent, i, 0, i, i});
  for (int i = 1; i < k; ++i) basis_.push_back({BasisKind::Up, i, 1, i, i + 1});
  for (int i = 1; i < k; ++i) basis_.push_back({BasisKind::Down, i, N - 1, i + 1, i});
  for (int i = 1; i <= k; ++i) basis_.push_back({BasisKind::Loop, i, N, i, i});

  int n = dim();
  table_.assign(n * n, std::nullopt);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const auto& bx = basis_[x];
      const auto& by = basis_[y];
      if (bx.target != by.source) continue;
      if (bx.kind == BasisKind::Idempotent) {
        table_[x * n + y] = y;
      } else if (by.kind == BasisKind::Idempotent) {
        table_[x * n + y] = x;
      } else if (bx.kind == BasisKind::Up && by.kind == BasisKind::Down && bx.index == by.index) {
        table_[x * n + y] = loop(bx.source);
      } else if (bx.kind == BasisKind::Down && by.kind == BasisKind::Up && bx.index == by.index) {
        table_[x * n + y] = loop(bx.source);
      }
    }
  }

  paths_.assign((k + 1) * (k + 1), {});
  for (int p = 0; p < n; ++p) paths_[basis_[p].source * (k + 1) + basis_[p].target].push_back(p);
}

int GradedAlgebra::idempotent(int i) const { return i - 1; }
int GradedAlgebra::up(int i) const { return k_ + i - 1; }
int GradedAlgebra::down(int i) const { return 2 * k_ - 1 + i - 1; }
int GradedAlgebra::loop(int i) const { return 3 * k_ - 2 + i - 1; }

const std::vector<int>& GradedAlgebra::paths(int a, int b) const {
  static const std::vector<int> none;
  if (a < 1 || a > k_ || b < 1 || b > k_) return none;
  return paths_[a * (k_ + 1) + b];
}

std::optional<int> GradedAlgebra::path(int a, int b, int degree) const {
  for (int p : paths(a, b))
    if (basis_[p].degree == degree) return p;
  return std::nullopt;
}

AlgebraElement GradedAlgebra::multiply(const AlgebraElement& x, const AlgebraElement& y) const {
  AlgebraElement out;
  for (const auto& [bx, cx] : x) {
    for (const auto& [by, cy] : y) {
      auto p = product(bx, by);
      if (!p) continue;
      Rational& slot = out[*p];
      slot += cx * cy;
      if (sgn(slot) == 0) out.erase(*p);
    }
  }
  return out;
}

GradedDims GradedAlgebra::node_homs(int a, int b) const {
  GradedDims g;
  for (int p : paths(a, b)) g[basis_[p].degree] += 1;
  return g;
}

AlgebraElement unit(const GradedAlgebra& alg) {
  AlgebraElement u;
  for (int i = 1; i <= alg.k(); ++i) u[alg.idempotent(i)] = 1;
  return u;
}

AlgebraElement basis_vector(int pos, Rational c) {
  AlgebraElement e;
  if (sgn(c) != 0) e[pos] = std::move(c);
  return e;
}

void add_to(AlgebraElement& acc, const AlgebraElement& x, const Rational& scale) {
  for (const auto& [b, c] : x) {
    Rational& slot = acc[b];
    slot += scale * c;
    if (sgn(slot) == 0) acc.erase(b);
  }
}

std::string to_string(const GradedAlgebra& alg, const AlgebraElement& x) {
  if (x.empty()) return "0";
  std::string s;
  for (const auto& [b, c] : x) {
    if (!s.empty()) s += " + ";
    if (c != 1) s += to_string(c) + "*";
    s += to_string(alg.element(b));
  }
  return s;
}

PairingReport check_duality_pairing(const GradedAlgebra& alg) {
  PairingReport rep;
  const int N = alg.N();
  for (int a = 1; a <= alg.k(); ++a) {
    for (int b = 1; b <= alg.k(); ++b) {
      ++rep.pairs_checked;
      for (int d = 0; d <= N; ++d) {
        // Hom^d(E_a,E_b) x Hom^{N-d}(E_b,E_a) -> span(f_a)
        std::vector<int> left, right;
        for (int p : alg.paths(a, b))
          if (alg.element(p).degree == d) left.push_back(p);
        for (int p : alg.paths(b, a))
          if (alg.element(p).degree == N - d) right.push_back(p);
        bool ok = left.size() == right.size();
        if (ok && !left.empty()) {
          // With one-dimensional pieces the pairing matrix is a single entry.
          if (left.size() != 1) {
            ok = false;
          } else {
            auto p = alg.product(left[0], right[0]);
            ok = p && *p == alg.loop(a);
          }
        }
        if (!ok) {
          rep.perfect = false;
          rep.failures.push_back("nodes (" + std::to_string(a) + "," + std::to_string(b) + ") degree " +
                                 std::to_string(d));
        }
      }
    }
  }
  return rep;
}

}  // namespace akstab
