#pragma once

#include <string>

#include "neutro/scalar.hpp"

namespace neutro {

/// Closed sub-interval [lo, hi] of [0, 1]. A point chance is the degenerate
/// interval lo == hi, so every component of a triple has this one type.
class IntervalChance {
 public:
  IntervalChance() = default;
  IntervalChance(Scalar point);  // NOLINT: scalars promote to degenerate intervals
  IntervalChance(double point) : IntervalChance(Scalar(point)) {}  // NOLINT
  template <std::integral I>
  IntervalChance(I point) : IntervalChance(Scalar(point)) {}  // NOLINT
  IntervalChance(const Rational& point) : IntervalChance(Scalar(point)) {}  // NOLINT
  IntervalChance(Scalar lo, Scalar hi);

  /// Clips both ends into [0, 1] instead of rejecting them.
  static IntervalChance clamped(Scalar lo, Scalar hi);

  const Scalar& lo() const noexcept { return lo_; }
  const Scalar& hi() const noexcept { return hi_; }
  Scalar width() const { return hi_ - lo_; }
  Scalar midpoint() const { return (lo_ + hi_) / Scalar(2); }
  bool is_degenerate() const { return lo_ == hi_; }
  bool contains(double x, double tol = 0.0) const {
    return x >= lo_.value() - tol && x <= hi_.value() + tol;
  }

  std::string str() const;

  friend bool operator==(const IntervalChance&, const IntervalChance&) = default;

 private:
  Scalar lo_;
  Scalar hi_;
};

/// [a.lo + b.lo, a.hi + b.hi], clipped into [0, 1].
IntervalChance interval_add(const IntervalChance& a, const IntervalChance& b);
/// [a.lo - b.hi, a.hi - b.lo], clipped into [0, 1].
IntervalChance interval_sub(const IntervalChance& a, const IntervalChance& b);
/// [a.lo * b.lo, a.hi * b.hi]; endpoints are nonnegative so this is monotone.
IntervalChance interval_mul(const IntervalChance& a, const IntervalChance& b);

inline IntervalChance operator+(const IntervalChance& a, const IntervalChance& b) {
  return interval_add(a, b);
}
inline IntervalChance operator-(const IntervalChance& a, const IntervalChance& b) {
  return interval_sub(a, b);
}
inline IntervalChance operator*(const IntervalChance& a, const IntervalChance& b) {
  return interval_mul(a, b);
}

/// x = determinate + i with i in [0, indeterminacy_bound].
struct IndeterminateForm {
  Scalar determinate;
  Scalar indeterminacy_bound;
};

IndeterminateForm to_indeterminate_form(const IntervalChance& x);

}  // namespace neutro
