#include "akstab/numeric.hpp"

#include <cmath>
#include <sstream>

namespace akstab {

const char* error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ExtUndefined: return "ExtUndefined";
    case ErrorCode::UnknownHom: return "UnknownHom";
    case ErrorCode::PhaseOrderViolation: return "PhaseOrderViolation";
    case ErrorCode::ZeroCharge: return "ZeroCharge";
    case ErrorCode::NonStableLeaf: return "NonStableLeaf";
    case ErrorCode::StepBudgetExceeded: return "StepBudgetExceeded";
    case ErrorCode::InvalidQuadruple: return "InvalidQuadruple";
    case ErrorCode::MassVanishes: return "MassVanishes";
    case ErrorCode::NonGenericPath: return "NonGenericPath";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::CoincidentPoints: return "CoincidentPoints";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::NonGenericLoop: return "NonGenericLoop";
    case ErrorCode::PointCollision: return "PointCollision";
  }
  return "Unknown";
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error(ErrorCode::InvalidArgument, "empty rational literal");
  try {
    auto dotpos = s.find('.');
    if (dotpos == std::string::npos) {
      Rational q(s, 10);
      if (q.get_den() == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator in '" + text + "'");
      q.canonicalize();
      return q;
    }
    // Decimal literal: exact conversion.
    bool negative = s[0] == '-';
    std::string body = (s[0] == '-' || s[0] == '+') ? s.substr(1) : s;
    dotpos = body.find('.');
    std::string digits = body.substr(0, dotpos) + body.substr(dotpos + 1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::InvalidArgument, "bad decimal literal '" + text + "'");
    Integer num(digits, 10);
    Integer den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, body.size() - dotpos - 1);
    Rational q(num, den);
    q.canonicalize();
    return negative ? Rational(-q) : q;
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::InvalidArgument, "bad rational literal '" + text + "'");
  }
}

std::string to_string(const Rational& q) { return q.get_str(10); }

int sign(const Rational& q) { return sgn(q); }

double GaussianRational::arg() const { return std::atan2(im.get_d(), re.get_d()); }

std::string to_string(const GaussianRational& z) {
  return "(" + to_string(z.re) + ", " + to_string(z.im) + ")";
}

namespace {

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

Integer isqrt(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Enclosure of sqrt(d) with width at most 2^-bits.
std::pair<Rational, Rational> sqrt_bounds(const Rational& d, unsigned bits) {
  if (sgn(d) == 0) return {0, 0};
  Integer p = d.get_num(), q = d.get_den();
  Integer scale = 1;
  scale <<= bits;
  Integer s = isqrt(p * q * scale * scale);
  Rational lo(s, q * scale), hi(s + 1, q * scale);
  lo.canonicalize();
  hi.canonicalize();
  return {lo, hi};
}

// sign(x*sqrt(d1) + y*sqrt(d2)), d1, d2 >= 0.
int sign_two_roots(const Rational& x, const Rational& d1, const Rational& y, const Rational& d2) {
  int sx = sgn(x) * (sgn(d1) != 0), sy = sgn(y) * (sgn(d2) != 0);
  if (sx == 0) return sy;
  if (sy == 0 || sx == sy) return sx;
  int c = cmp(Rational(x * x * d1), Rational(y * y * d2));
  return c > 0 ? sx : (c < 0 ? sy : 0);
}

}  // namespace

QuadNum::QuadNum(Rational a, Rational b, Rational d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (sgn(d_) < 0) throw Error(ErrorCode::InvalidArgument, "negative radicand");
  normalize();
}

void QuadNum::normalize() {
  if (sgn(b_) == 0 || sgn(d_) == 0) {
    b_ = 0;
    d_ = 0;
    return;
  }
  if (is_square(d_.get_num()) && is_square(d_.get_den())) {
    a_ += b_ * Rational(isqrt(d_.get_num()), isqrt(d_.get_den()));
    b_ = 0;
    d_ = 0;
  }
}

int QuadNum::sign() const {
  int sa = sgn(a_), sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  int c = cmp(Rational(a_ * a_), Rational(b_ * b_ * d_));
  return c > 0 ? sa : (c < 0 ? sb : 0);
}

double QuadNum::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(d_.get_d()); }

std::pair<Rational, Rational> QuadNum::bounds(unsigned bits) const {
  if (is_rational()) return {a_, a_};
  Rational target(1);
  target /= Rational(Integer(1) << bits);
  for (unsigned extra = bits + 8;; extra += 32) {
    auto [lo, hi] = sqrt_bounds(d_, extra);
    Rational x = a_ + b_ * lo, y = a_ + b_ * hi;
    if (x > y) std::swap(x, y);
    if (y - x <= target) return {x, y};
  }
}

QuadNum operator+(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return QuadNum(x.a_ + y.a_, y.b_, y.d_);
  if (y.is_rational()) return QuadNum(x.a_ + y.a_, x.b_, x.d_);
  if (x.d_ != y.d_) throw Error(ErrorCode::InvalidArgument, "QuadNum addition across radicands");
  return QuadNum(x.a_ + y.a_, x.b_ + y.b_, x.d_);
}

QuadNum operator*(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational()) return QuadNum(x.a_ * y.a_, x.a_ * y.b_, y.d_);
  if (y.is_rational()) return QuadNum(x.a_ * y.a_, x.b_ * y.a_, x.d_);
  if (x.d_ != y.d_) throw Error(ErrorCode::InvalidArgument, "QuadNum product across radicands");
  return QuadNum(x.a_ * y.a_ + x.b_ * y.b_ * x.d_, x.a_ * y.b_ + x.b_ * y.a_, x.d_);
}

int compare(const QuadNum& x, const QuadNum& y) {
  if (x.is_rational() || y.is_rational() || x.d_ == y.d_) return (x - y).sign();
  // alpha + beta*sqrt(d1) + gamma*sqrt(d2)
  Rational alpha = x.a_ - y.a_;
  const Rational& beta = x.b_;
  Rational gamma = -y.b_;
  int s = sign_two_roots(beta, x.d_, gamma, y.d_);
  int sa = sgn(alpha);
  if (sa == 0) return s;
  if (s == 0 || sa == s) return sa;
  QuadNum diff(alpha * alpha - beta * beta * x.d_ - gamma * gamma * y.d_, -2 * beta * gamma, x.d_ * y.d_);
  int c = diff.sign();
  return c > 0 ? sa : (c < 0 ? s : 0);
}

std::string to_string(const QuadNum& x) {
  if (x.is_rational()) return to_string(x.a());
  return to_string(x.a()) + " + " + to_string(x.b()) + "*sqrt(" + to_string(x.d()) + ")";
}

Rational rational_between(const QuadNum& x, const QuadNum& y) {
  if (!(x < y)) throw Error(ErrorCode::InvalidArgument, "rational_between needs x < y");
  for (unsigned bits = 16;; bits *= 2) {
    auto [xl, xh] = x.bounds(bits);
    auto [yl, yh] = y.bounds(bits);
    if (xh < yl) {
      // Prefer a short dyadic inside (xh, yl).
      for (unsigned b = 1; b <= bits + 2; ++b) {
        Rational step(1);
        step /= Rational(Integer(1) << b);
        Rational m = xh / step;
        Integer f = m.get_num() / m.get_den();
        Rational cand = Rational(f + 1) * step;
        if (cand > xh && cand < yl) return cand;
      }
      Rational mid = (xh + yl) / 2;
      return mid;
    }
  }
}

int compare_sqrt_sum(const std::vector<std::pair<Rational, Rational>>& terms, const Rational& r) {
  std::vector<std::pair<Rational, Rational>> t;
  for (const auto& [c, q] : terms)
    if (sgn(c) != 0 && sgn(q) != 0) t.push_back({c, q});
  if (t.empty()) return sgn(r) == 0 ? 0 : -1;
  if (t.size() == 1) return cmp(Rational(t[0].first * t[0].first * t[0].second), r) > 0 ? 1
         : cmp(Rational(t[0].first * t[0].first * t[0].second), r) < 0 ? -1 : 0;
  if (t.size() == 2) {
    const auto& [c1, q1] = t[0];
    const auto& [c2, q2] = t[1];
    QuadNum lhs2(c1 * c1 * q1 + c2 * c2 * q2 - r, 2 * c1 * c2, q1 * q2);
    return lhs2.sign();
  }
  for (unsigned bits = 32; bits <= 4096; bits *= 2) {
    Rational lo(0), hi(0);
    for (const auto& [c, q] : t) {
      auto [l, h] = sqrt_bounds(q, bits);
      lo += c * l;
      hi += c * h;
    }
    auto [rl, rh] = sqrt_bounds(r, bits);
    if (lo > rh) return 1;
    if (hi < rl) return -1;
  }
  return 0;
}

}  // namespace akstab
