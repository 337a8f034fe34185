#include "akstab/complex.hpp"

#include <algorithm>
#include <cstdint>

namespace akstab {

namespace {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

// Echelon basis with rows reduced in insertion order.
class Echelon {
 public:
  explicit Echelon(size_t n) : n_(n) {}

  bool insert(Vec v) {
    for (size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (sgn(c) == 0) continue;
      Rational f = c;
      for (size_t t = 0; t < n_; ++t)
        if (sgn(rows_[r][t]) != 0) v[t] -= f * rows_[r][t];
    }
    size_t p = 0;
    while (p < n_ && sgn(v[p]) == 0) ++p;
    if (p == n_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  size_t rank() const { return rows_.size(); }

 private:
  size_t n_;
  Mat rows_;
  std::vector<size_t> pivots_;
};

// Reduced row echelon form in place; returns pivot columns.
std::vector<size_t> rref(Mat& m, size_t cols) {
  std::vector<size_t> piv;
  size_t row = 0;
  for (size_t c = 0; c < cols && row < m.size(); ++c) {
    size_t sel = row;
    while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    Rational inv = 1 / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (size_t r = 0; r < m.size(); ++r) {
      if (r == row || sgn(m[r][c]) == 0) continue;
      Rational f = m[r][c];
      for (size_t t = c; t < cols; ++t)
        if (sgn(m[row][t]) != 0) m[r][t] -= f * m[row][t];
    }
    piv.push_back(c);
    ++row;
  }
  return piv;
}

size_t rank_of(Mat m, size_t cols) { return rref(m, cols).size(); }

std::vector<Vec> kernel(Mat m, size_t cols) {
  auto piv = rref(m, cols);
  std::vector<bool> is_piv(cols, false);
  for (size_t c : piv) is_piv[c] = true;
  std::vector<Vec> out;
  for (size_t f = 0; f < cols; ++f) {
    if (is_piv[f]) continue;
    Vec v(cols, 0);
    v[f] = 1;
    for (size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

struct Entry {
  int t;  // target generator (in Y)
  int s;  // source generator (in X)
  int p;  // algebra basis path
};

struct HomBasis {
  std::vector<Entry> entries;
  std::vector<int> index;  // (t, s, p) -> position or -1
};

class HomComplex {
 public:
  HomComplex(const GradedAlgebra& alg, const Complex& X, const Complex& Y) : alg_(alg), X_(X), Y_(Y) {
    if (X.empty() || Y.empty()) return;
    lo_ = 1 << 30;
    hi_ = -(1 << 30);
    for (const auto& gy : Y.gens)
      for (const auto& gx : X.gens) {
        lo_ = std::min(lo_, gx.shift - gy.shift);
        hi_ = std::max(hi_, alg.N() + gx.shift - gy.shift);
      }
  }

  bool trivial() const { return X_.empty() || Y_.empty(); }
  int lo() const { return lo_; }
  int hi() const { return hi_; }

  const HomBasis& basis(int d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return it->second;
    HomBasis b;
    const int nx = X_.size(), ny = Y_.size(), na = alg_.dim();
    b.index.assign(static_cast<size_t>(nx) * ny * na, -1);
    for (int t = 0; t < ny; ++t)
      for (int s = 0; s < nx; ++s) {
        int want = d + Y_.gens[t].shift - X_.gens[s].shift;
        for (int p : alg_.paths(Y_.gens[t].node, X_.gens[s].node)) {
          if (alg_.element(p).degree != want) continue;
          b.index[(static_cast<size_t>(t) * nx + s) * na + p] = static_cast<int>(b.entries.size());
          b.entries.push_back({t, s, p});
        }
      }
    return cache_.emplace(d, std::move(b)).first->second;
  }

  // Matrix of D : Hom^d -> Hom^{d+1}, rows indexed by Hom^{d+1}.
  Mat differential(int d) {
    const HomBasis& src = basis(d);
    const HomBasis& dst = basis(d + 1);
    const int nx = X_.size(), na = alg_.dim();
    Mat m(dst.entries.size(), Vec(src.entries.size(), 0));
    const Rational sign_right = (d % 2 == 0) ? Rational(-1) : Rational(1);
    for (size_t col = 0; col < src.entries.size(); ++col) {
      const Entry& e = src.entries[col];
      AlgebraElement phi = basis_vector(e.p);
      for (int u = 0; u < Y_.size(); ++u) {
        const auto& dy = Y_.delta[u][e.t];
        if (dy.empty()) continue;
        for (const auto& [p, c] : alg_.multiply(dy, phi)) {
          int row = dst.index[(static_cast<size_t>(u) * nx + e.s) * na + p];
          if (row < 0) throw Error(ErrorCode::InvalidArgument, "differential left the Hom basis");
          m[row][col] += c;
        }
      }
      for (int v = 0; v < nx; ++v) {
        const auto& dx = X_.delta[e.s][v];
        if (dx.empty()) continue;
        for (const auto& [p, c] : alg_.multiply(phi, dx)) {
          int row = dst.index[(static_cast<size_t>(e.t) * nx + v) * na + p];
          if (row < 0) throw Error(ErrorCode::InvalidArgument, "differential left the Hom basis");
          m[row][col] += sign_right * c;
        }
      }
    }
    return m;
  }

  Vec to_vector(const Morphism& f) {
    const HomBasis& b = basis(f.degree);
    const int nx = X_.size(), na = alg_.dim();
    Vec v(b.entries.size(), 0);
    for (int t = 0; t < Y_.size(); ++t)
      for (int s = 0; s < nx; ++s)
        for (const auto& [p, c] : f.comps[t][s]) {
          int pos = b.index[(static_cast<size_t>(t) * nx + s) * na + p];
          if (pos < 0) throw Error(ErrorCode::InvalidArgument, "morphism has wrong degree");
          v[pos] = c;
        }
    return v;
  }

  Morphism to_morphism(int d, const Vec& v) {
    const HomBasis& b = basis(d);
    Morphism f;
    f.degree = d;
    f.comps.assign(Y_.size(), std::vector<AlgebraElement>(X_.size()));
    for (size_t t = 0; t < b.entries.size(); ++t)
      if (sgn(v[t]) != 0) {
        const Entry& e = b.entries[t];
        f.comps[e.t][e.s][e.p] = v[t];
      }
    return f;
  }

 private:
  const GradedAlgebra& alg_;
  const Complex& X_;
  const Complex& Y_;
  int lo_ = 0;
  int hi_ = -1;
  std::map<int, HomBasis> cache_;
};

std::vector<AlgebraElement> empty_row(int n) { return std::vector<AlgebraElement>(n); }

}  // namespace

Complex zero_complex() { return {}; }

Complex projective_complex(int node, int shift) {
  Complex c;
  c.gens.push_back({node, shift});
  c.delta.assign(1, empty_row(1));
  return c;
}

Complex interval_complex(const GradedAlgebra& alg, const IntervalObject& p) {
  validate(p, alg.k());
  Complex c;
  const int n = p.j - p.i + 1;
  for (int r = p.i; r <= p.j; ++r) c.gens.push_back({r, 0});
  c.delta.assign(n, empty_row(n));
  for (int r = p.i; r < p.j; ++r) c.delta[r - p.i][r + 1 - p.i] = basis_vector(alg.up(r));
  return shifted(c, p.m);
}

Complex shifted(const Complex& X, int n) {
  Complex c = X;
  for (auto& g : c.gens) g.shift += n;
  if (n % 2 != 0)
    for (auto& row : c.delta)
      for (auto& e : row)
        for (auto& [p, coef] : e) coef = -coef;
  return c;
}

Complex direct_sum(const Complex& X, const Complex& Y) {
  Complex c;
  const int nx = X.size(), ny = Y.size(), n = nx + ny;
  c.gens = X.gens;
  c.gens.insert(c.gens.end(), Y.gens.begin(), Y.gens.end());
  c.delta.assign(n, empty_row(n));
  for (int t = 0; t < nx; ++t)
    for (int s = 0; s < nx; ++s) c.delta[t][s] = X.delta[t][s];
  for (int t = 0; t < ny; ++t)
    for (int s = 0; s < ny; ++s) c.delta[nx + t][nx + s] = Y.delta[t][s];
  return c;
}

Complex extension_cone(const Complex& A, const Complex& B, const Morphism& e) {
  Complex c = direct_sum(B, A);
  const int nb = B.size();
  for (int t = 0; t < A.size(); ++t)
    for (int s = 0; s < nb; ++s) c.delta[nb + t][s] = e.comps[t][s];
  return c;
}

Complex mapping_cone(const Complex& X, const Complex& Y, const Morphism& f) {
  Complex c = direct_sum(shifted(X, 1), Y);
  const int nx = X.size();
  for (int t = 0; t < Y.size(); ++t)
    for (int s = 0; s < nx; ++s) c.delta[nx + t][s] = f.comps[t][s];
  return c;
}

bool is_valid(const GradedAlgebra& alg, const Complex& X) {
  const int n = X.size();
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s)
      for (const auto& [p, c] : X.delta[t][s]) {
        const auto& b = alg.element(p);
        if (b.source != X.gens[t].node || b.target != X.gens[s].node) return false;
        if (b.degree != 1 + X.gens[t].shift - X.gens[s].shift) return false;
      }
  for (int t = 0; t < n; ++t)
    for (int s = 0; s < n; ++s) {
      AlgebraElement acc;
      for (int u = 0; u < n; ++u) add_to(acc, alg.multiply(X.delta[t][u], X.delta[u][s]));
      if (!acc.empty()) return false;
    }
  return true;
}

Complex minimize_range(const GradedAlgebra& alg, const Complex& X, int begin, int& end) {
  Complex c = X;
  for (;;) {
    int r = -1, s = -1;
    Rational unit_coef;
    for (int t = begin; t < end && r < 0; ++t)
      for (int u = begin; u < end; ++u) {
        if (c.gens[t].node != c.gens[u].node) continue;
        auto it = c.delta[t][u].find(alg.idempotent(c.gens[t].node));
        if (it == c.delta[t][u].end()) continue;
        r = t;
        s = u;
        unit_coef = it->second;
        break;
      }
    if (r < 0) return c;
    const Rational inv = 1 / unit_coef;
    std::vector<int> keep;
    for (int t = 0; t < c.size(); ++t)
      if (t != r && t != s) keep.push_back(t);
    Complex next;
    for (int t : keep) next.gens.push_back(c.gens[t]);
    const int n = static_cast<int>(keep.size());
    next.delta.assign(n, empty_row(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        const int t = keep[a], u = keep[b];
        AlgebraElement e = c.delta[t][u];
        if (!c.delta[t][s].empty() && !c.delta[r][u].empty())
          add_to(e, alg.multiply(c.delta[t][s], c.delta[r][u]), -inv);
        next.delta[a][b] = std::move(e);
      }
    c = std::move(next);
    end -= 2;
  }
}

Complex minimize(const GradedAlgebra& alg, const Complex& X) {
  int end = X.size();
  return minimize_range(alg, X, 0, end);
}

GradedDims hom_dims(const GradedAlgebra& alg, const Complex& X, const Complex& Y) {
  GradedDims g;
  HomComplex hc(alg, X, Y);
  if (hc.trivial()) return g;
  std::map<int, size_t> rank;
  for (int d = hc.lo() - 1; d <= hc.hi(); ++d) rank[d] = rank_of(hc.differential(d), hc.basis(d).entries.size());
  for (int d = hc.lo(); d <= hc.hi(); ++d) {
    long long h = static_cast<long long>(hc.basis(d).entries.size()) - rank[d] - rank[d - 1];
    if (h > 0) g[d] = static_cast<int>(h);
  }
  return g;
}

std::vector<Morphism> cohomology_basis(const GradedAlgebra& alg, const Complex& X, const Complex& Y, int d) {
  std::vector<Morphism> out;
  HomComplex hc(alg, X, Y);
  if (hc.trivial()) return out;
  const size_t n = hc.basis(d).entries.size();
  if (n == 0) return out;
  Mat below = hc.differential(d - 1);
  Echelon ech(n);
  const size_t nb = hc.basis(d - 1).entries.size();
  for (size_t col = 0; col < nb; ++col) {
    Vec v(n);
    for (size_t r = 0; r < n; ++r) v[r] = below[r][col];
    ech.insert(std::move(v));
  }
  for (auto& v : kernel(hc.differential(d), n))
    if (ech.insert(v)) out.push_back(hc.to_morphism(d, v));
  return out;
}

Morphism compose(const GradedAlgebra& alg, const Morphism& g, const Morphism& f) {
  Morphism h;
  h.degree = g.degree + f.degree;
  const size_t nz = g.comps.size(), ny = f.comps.size(), nx = ny ? f.comps[0].size() : 0;
  h.comps.assign(nz, std::vector<AlgebraElement>(nx));
  for (size_t t = 0; t < nz; ++t)
    for (size_t u = 0; u < ny; ++u) {
      if (g.comps[t][u].empty()) continue;
      for (size_t s = 0; s < nx; ++s)
        if (!f.comps[u][s].empty()) add_to(h.comps[t][s], alg.multiply(g.comps[t][u], f.comps[u][s]));
    }
  return h;
}

bool is_exact(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f) {
  HomComplex hc(alg, X, Y);
  if (hc.trivial()) return true;
  const int d = f.degree;
  const size_t n = hc.basis(d).entries.size();
  Vec v = hc.to_vector(f);
  bool nonzero = false;
  for (const auto& x : v) nonzero = nonzero || sgn(x) != 0;
  if (!nonzero) return true;
  Mat below = hc.differential(d - 1);
  Echelon ech(n);
  for (size_t col = 0; col < hc.basis(d - 1).entries.size(); ++col) {
    Vec w(n);
    for (size_t r = 0; r < n; ++r) w[r] = below[r][col];
    ech.insert(std::move(w));
  }
  return !ech.insert(std::move(v));
}

std::optional<Morphism> solve_coboundary(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f) {
  HomComplex hc(alg, X, Y);
  const int d = f.degree;
  if (hc.trivial()) return zero_morphism(Y.size(), X.size(), d - 1);
  const size_t n = hc.basis(d).entries.size();
  const size_t m = hc.basis(d - 1).entries.size();
  Vec target = hc.to_vector(f);
  Mat below = hc.differential(d - 1);
  // Augmented system [below | target].
  Mat aug(n, Vec(m + 1));
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < m; ++c) aug[r][c] = below[r][c];
    aug[r][m] = target[r];
  }
  auto piv = rref(aug, m + 1);
  if (!piv.empty() && piv.back() == m) return std::nullopt;
  Vec h(m, 0);
  for (size_t r = 0; r < piv.size(); ++r) h[piv[r]] = aug[r][m];
  if (m == 0) return zero_morphism(Y.size(), X.size(), d - 1);
  return hc.to_morphism(d - 1, h);
}

Morphism identity_morphism(const Complex& X) {
  Morphism f = zero_morphism(X.size(), X.size(), 0);
  for (int t = 0; t < X.size(); ++t) f.comps[t][t][X.gens[t].node - 1] = 1;
  return f;
}

Morphism zero_morphism(int rows, int cols, int degree) {
  Morphism f;
  f.degree = degree;
  f.comps.assign(rows, std::vector<AlgebraElement>(cols));
  return f;
}

std::optional<Morphism> invert(const GradedAlgebra& alg, const Complex& X, const Complex& Y, const Morphism& f) {
  const int n = X.size();
  if (Y.size() != n || f.degree != 0) return std::nullopt;
  if (n == 0) return zero_morphism(0, 0, 0);
  // Scalar part: coefficients of idempotents between equal generators.
  Mat a(n, Vec(2 * n, 0));
  for (int t = 0; t < n; ++t) {
    for (int s = 0; s < n; ++s) {
      if (Y.gens[t].node != X.gens[s].node) continue;
      auto it = f.comps[t][s].find(alg.idempotent(X.gens[s].node));
      if (it != f.comps[t][s].end()) a[t][s] = it->second;
    }
    a[t][n + t] = 1;
  }
  auto piv = rref(a, 2 * n);
  if (piv.size() < static_cast<size_t>(n) || piv[n - 1] != static_cast<size_t>(n - 1)) return std::nullopt;
  // g0 : Y -> X, inverse of the scalar part.
  Morphism g0 = zero_morphism(n, n, 0);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (sgn(a[s][n + t]) != 0) {
        if (X.gens[s].node != Y.gens[t].node) return std::nullopt;
        g0.comps[s][t][alg.idempotent(X.gens[s].node)] = a[s][n + t];
      }
  // f^{-1} = sum_k E^k g0 with E = 1 - g0 f nilpotent.
  Morphism e = identity_morphism(X);
  Morphism g0f = compose(alg, g0, f);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) add_to(e.comps[s][t], g0f.comps[s][t], -1);
  Morphism inv = g0;
  Morphism term = g0;
  for (int iter = 0; iter < 4 * (alg.N() + 2) * (n + 1); ++iter) {
    term = compose(alg, e, term);
    bool zero = true;
    for (const auto& row : term.comps)
      for (const auto& c : row) zero = zero && c.empty();
    if (zero) break;
    for (int s = 0; s < n; ++s)
      for (int t = 0; t < n; ++t) add_to(inv.comps[s][t], term.comps[s][t]);
  }
  // Verify both compositions.
  Morphism l = compose(alg, inv, f), r = compose(alg, f, inv);
  Morphism ix = identity_morphism(X), iy = identity_morphism(Y);
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (l.comps[s][t] != ix.comps[s][t] || r.comps[s][t] != iy.comps[s][t]) return std::nullopt;
  return inv;
}

std::optional<Morphism> find_isomorphism(const GradedAlgebra& alg, const Complex& X, const Complex& Y) {
  if (X.size() != Y.size()) return std::nullopt;
  if (X.empty()) return zero_morphism(0, 0, 0);
  auto maps = cohomology_basis(alg, X, Y, 0);
  if (maps.empty()) return std::nullopt;
  std::uint64_t state = 0x2545f4914f6cdd1dULL;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Morphism f = zero_morphism(Y.size(), X.size(), 0);
    for (const auto& g : maps) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      Rational c = attempt == 0 ? Rational(1) : Rational(static_cast<long>((state >> 33) % 97 + 1));
      for (int t = 0; t < Y.size(); ++t)
        for (int s = 0; s < X.size(); ++s) add_to(f.comps[t][s], g.comps[t][s], c);
    }
    if (invert(alg, X, Y, f)) return f;
  }
  return std::nullopt;
}

Morphism cone_inclusion(const Complex& A, const Complex& B) {
  Morphism f;
  const int na = A.size(), nb = B.size();
  f.comps.assign(na + nb, std::vector<AlgebraElement>(na));
  for (int t = 0; t < na; ++t) f.comps[nb + t][t][A.gens[t].node - 1] = 1;
  return f;
}

Morphism cone_projection(const Complex& A, const Complex& B) {
  Morphism f;
  const int na = A.size(), nb = B.size();
  f.comps.assign(nb, std::vector<AlgebraElement>(na + nb));
  for (int t = 0; t < nb; ++t) f.comps[t][t][B.gens[t].node - 1] = 1;
  return f;
}

bool is_zero(const GradedAlgebra& alg, const Complex& X) {
  Complex m = minimize(alg, X);
  if (m.empty()) return true;
  for (int a = 1; a <= alg.k(); ++a)
    if (!hom_dims(alg, projective_complex(a, 0), m).empty()) return false;
  return true;
}

bool isomorphic(const GradedAlgebra& alg, const Complex& X, const Complex& Y) {
  Complex mx = minimize(alg, X), my = minimize(alg, Y);
  for (int a = 1; a <= alg.k(); ++a) {
    Complex pa = projective_complex(a, 0);
    if (hom_dims(alg, pa, mx) != hom_dims(alg, pa, my)) return false;
  }
  if (is_zero(alg, mx)) return is_zero(alg, my);
  auto maps = cohomology_basis(alg, mx, my, 0);
  if (maps.empty()) return false;
  std::uint64_t state = 0x9e3779b97f4a7c15ULL;
  for (int attempt = 0; attempt < 4; ++attempt) {
    Morphism f;
    f.degree = 0;
    f.comps.assign(my.size(), std::vector<AlgebraElement>(mx.size()));
    for (const auto& g : maps) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      Rational c = attempt == 0 ? Rational(1) : Rational(static_cast<long>((state >> 33) % 997 + 1));
      for (int t = 0; t < my.size(); ++t)
        for (int s = 0; s < mx.size(); ++s) add_to(f.comps[t][s], g.comps[t][s], c);
    }
    if (is_zero(alg, mapping_cone(mx, my, f))) return true;
  }
  return false;
}

Complex twist_complex(const GradedAlgebra& alg, int a, const Complex& X) {
  Complex pa = projective_complex(a, 0);
  Complex W;
  std::vector<Morphism> reps;
  HomComplex hc(alg, pa, X);
  if (!hc.trivial())
    for (int d = hc.lo(); d <= hc.hi(); ++d)
      for (auto& f : cohomology_basis(alg, pa, X, d)) {
        W = direct_sum(W, projective_complex(a, -d));
        reps.push_back(std::move(f));
      }
  if (reps.empty()) return minimize(alg, X);
  Morphism ev;
  ev.comps.assign(X.size(), std::vector<AlgebraElement>(W.size()));
  for (size_t w = 0; w < reps.size(); ++w)
    for (int t = 0; t < X.size(); ++t) ev.comps[t][w] = reps[w].comps[t][0];
  return minimize(alg, mapping_cone(W, X, ev));
}

Complex twist_inverse_complex(const GradedAlgebra& alg, int a, const Complex& X) {
  Complex pa = projective_complex(a, 0);
  std::vector<Morphism> reps;
  std::vector<int> degs;
  HomComplex hc(alg, X, pa);
  if (!hc.trivial())
    for (int d = hc.lo(); d <= hc.hi(); ++d)
      for (auto& f : cohomology_basis(alg, X, pa, d)) {
        reps.push_back(std::move(f));
        degs.push_back(d);
      }
  if (reps.empty()) return minimize(alg, X);
  Complex c = X;
  const int nx = X.size();
  for (int d : degs) c = direct_sum(c, projective_complex(a, d - 1));
  for (size_t r = 0; r < reps.size(); ++r)
    for (int s = 0; s < nx; ++s) {
      AlgebraElement e;
      add_to(e, reps[r].comps[0][s], -1);
      c.delta[nx + r][s] = std::move(e);
    }
  return minimize(alg, c);
}

KVector k_class(const Complex& X, int k) {
  KVector v(k, 0);
  for (const auto& g : X.gens) v[g.node - 1] += (g.shift % 2 == 0) ? 1 : -1;
  return v;
}

}  // namespace akstab
