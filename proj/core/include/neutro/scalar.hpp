#pragma once

#include <compare>
#include <concepts>
#include <optional>
#include <string>

#include "neutro/rational.hpp"

namespace neutro {

/// A real number that stays an exact fraction for as long as it can.
///
/// Values built from integers, fractions, or via Scalar::decimal carry an
/// exact Rational alongside the double. Arithmetic between two exact
/// operands stays exact; anything else (a plain double operand, or a
/// result that overflows 64-bit fractions) degrades to floating point.
/// This is how count-based spaces reproduce values such as 34/90 with zero
/// error while ordinary float inputs keep working unchanged.
class Scalar {
 public:
  constexpr Scalar() noexcept : value_(0.0), exact_(Rational{}) {}
  constexpr Scalar(double v) noexcept : value_(v) {}  // NOLINT: implicit by design of the API
  template <std::integral I>
  Scalar(I v) : Scalar(Rational(static_cast<std::int64_t>(v))) {}  // NOLINT
  Scalar(const Rational& r) : value_(r.to_double()), exact_(r) {}  // NOLINT

  static Scalar fraction(std::int64_t num, std::int64_t den) {
    return Scalar(Rational(num, den));
  }

  /// Exact value of the shortest decimal that round-trips to v
  /// (0.15 becomes 3/20). Falls back to an inexact Scalar when the decimal
  /// needs more than 18 significant digits.
  static Scalar decimal(double v);

  double value() const noexcept { return value_; }
  bool is_exact() const noexcept { return exact_.has_value(); }
  const std::optional<Rational>& exact() const noexcept { return exact_; }

  /// Same number with the exact representation dropped.
  Scalar inexact() const noexcept { return Scalar(value_); }

  std::string str() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a);

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend bool operator==(const Scalar& a, const Scalar& b) noexcept;
  friend std::partial_ordering operator<=>(const Scalar& a,
                                           const Scalar& b) noexcept;

 private:
  double value_;
  std::optional<Rational> exact_;
};

Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);
Scalar clamp(const Scalar& v, const Scalar& lo, const Scalar& hi);
Scalar abs(const Scalar& v);

/// |a - b| <= tol, compared exactly when both sides are exact.
bool near(const Scalar& a, const Scalar& b, double tol);

}  // namespace neutro
