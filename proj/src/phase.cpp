#include "akstab/phase.hpp"

#include <cmath>
#include <cstdio>

namespace akstab {

bool in_upper_half(const GaussianRational& z) { return sgn(z.im) > 0 || (sgn(z.im) == 0 && sgn(z.re) > 0); }

PhaseLift::PhaseLift(long winding, GaussianRational dir) : winding_(winding), dir_(std::move(dir)) {
  if (dir_.is_zero()) throw Error(ErrorCode::ZeroCharge, "phase of zero charge");
  if (!in_upper_half(dir_)) {
    dir_ = -dir_;
    winding_ += 1;
  }
}

PhaseLift PhaseLift::at_or_above(const GaussianRational& z, long floor) {
  if (z.is_zero()) throw Error(ErrorCode::ZeroCharge, "phase of zero charge");
  bool upper = in_upper_half(z);
  long parity = upper ? 0 : 1;
  long w = floor;
  if (((w % 2) + 2) % 2 != parity) ++w;
  return PhaseLift(w, upper ? z : -z);
}

GaussianRational PhaseLift::unit_charge() const { return (winding_ % 2 == 0) ? dir_ : -dir_; }

bool PhaseLift::matches(const GaussianRational& z) const {
  GaussianRational u = unit_charge();
  return sgn(cross(u, z)) == 0 && sgn(dot(u, z)) > 0;
}

double PhaseLift::value() const { return static_cast<double>(winding_) + dir_.arg() / M_PI; }

int compare(const PhaseLift& a, const PhaseLift& b) {
  if (a.winding_ != b.winding_) return a.winding_ < b.winding_ ? -1 : 1;
  // Both directions in the half-open upper half-plane: angular order is the
  // sign of the cross product.
  int c = sgn(cross(a.dir_, b.dir_));
  return c > 0 ? -1 : (c < 0 ? 1 : 0);
}

PhaseLift nearest_lift(const GaussianRational& z, const PhaseLift& ref) {
  PhaseLift c = PhaseLift::at_or_above(z, ref.winding() - 1);
  if (c <= ref.shifted(-1)) c = c.shifted(2);
  return c;  // in (ref - 1, ref + 1]
}

std::string to_string(const PhaseLift& p) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", p.value());
  return buf;
}

Rational rational_from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "non-finite number");
  return Rational(x);
}

}  // namespace akstab
