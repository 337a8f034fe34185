#pragma once

#include <string>

#include "akstab/numeric.hpp"

namespace akstab {

// Graded phase phi = winding + arg(dir)/pi, with dir in the half-open upper
// half-plane (im > 0, or im == 0 and re > 0), so arg(dir)/pi lies in [0,1).
// The charge of an object with this phase is a positive multiple of
// (-1)^winding * dir.
class PhaseLift {
 public:
  PhaseLift() = default;
  PhaseLift(long winding, GaussianRational dir);

  // The lift of charge z whose phase lies in [floor, floor + 2).
  static PhaseLift at_or_above(const GaussianRational& z, long floor);
  // Principal lift: phase in [0, 2).
  static PhaseLift principal(const GaussianRational& z) { return at_or_above(z, 0); }

  long winding() const { return winding_; }
  const GaussianRational& direction() const { return dir_; }

  PhaseLift shifted(long n) const { return PhaseLift(winding_ + n, dir_); }
  // Whether z is a positive multiple of exp(i pi phi).
  bool matches(const GaussianRational& z) const;
  GaussianRational unit_charge() const;  // (-1)^winding * dir
  double value() const;

  friend int compare(const PhaseLift& a, const PhaseLift& b);
  friend bool operator==(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) == 0; }
  friend bool operator!=(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) != 0; }
  friend bool operator<(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) < 0; }
  friend bool operator<=(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) <= 0; }
  friend bool operator>(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) > 0; }
  friend bool operator>=(const PhaseLift& a, const PhaseLift& b) { return compare(a, b) >= 0; }

 private:
  long winding_ = 0;
  GaussianRational dir_{1, 0};
};

bool in_upper_half(const GaussianRational& z);
// The lift of z in (ref - 1, ref + 1].
PhaseLift nearest_lift(const GaussianRational& z, const PhaseLift& ref);
std::string to_string(const PhaseLift& p);

Rational rational_from_double(double x);

}  // namespace akstab
