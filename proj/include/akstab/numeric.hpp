#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "akstab/error.hpp"

namespace akstab {

using Rational = mpq_class;
using Integer = mpz_class;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
int sign(const Rational& q);

/// Exact element of Q(i). Central charges live here.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}
  explicit GaussianRational(long r) : re(r), im(0) {}

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  Rational norm2() const { return re * re + im * im; }
  double arg() const;

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
    return {s * a.re, s * a.im};
  }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline Rational cross(const GaussianRational& a, const GaussianRational& b) {
  return a.re * b.im - a.im * b.re;
}
inline Rational dot(const GaussianRational& a, const GaussianRational& b) {
  return a.re * b.re + a.im * b.im;
}
std::string to_string(const GaussianRational& z);

/// a + b*sqrt(d) with rational a, b and rational d >= 0.
///
/// Values sharing the same radicand form a field, so arithmetic is only
/// defined between operands with equal d (or with b == 0). Comparison works
/// across radicands.
class QuadNum {
 public:
  QuadNum() = default;
  QuadNum(Rational a) : a_(std::move(a)) {}  // NOLINT: rationals embed
  QuadNum(Rational a, Rational b, Rational d);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  const Rational& d() const { return d_; }
  bool is_rational() const { return sgn(b_) == 0; }

  int sign() const;
  double to_double() const;
  /// Rational enclosure [lo, hi] of width at most 2^-bits.
  std::pair<Rational, Rational> bounds(unsigned bits) const;

  QuadNum operator-() const { return QuadNum(-a_, -b_, d_); }
  friend QuadNum operator+(const QuadNum& x, const QuadNum& y);
  friend QuadNum operator-(const QuadNum& x, const QuadNum& y) { return x + (-y); }
  friend QuadNum operator*(const QuadNum& x, const QuadNum& y);

  friend int compare(const QuadNum& x, const QuadNum& y);
  friend bool operator==(const QuadNum& x, const QuadNum& y) { return compare(x, y) == 0; }
  friend bool operator<(const QuadNum& x, const QuadNum& y) { return compare(x, y) < 0; }

 private:
  void normalize();

  Rational a_{0};
  Rational b_{0};
  Rational d_{0};
};

std::string to_string(const QuadNum& x);

/// Some rational strictly between x < y.
Rational rational_between(const QuadNum& x, const QuadNum& y);

/// Sign of sum_i c_i*sqrt(q_i) - sqrt(r), all q_i, r >= 0 and c_i >= 0.
/// Exact for up to two terms; certified interval refinement otherwise.
int compare_sqrt_sum(const std::vector<std::pair<Rational, Rational>>& terms, const Rational& r);

}  // namespace akstab
