#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>

namespace neutro {

__extension__ using wide_int = __int128;

/// Reduced fraction over 64-bit integers with a positive denominator.
///
/// Arithmetic is checked: the static helpers return std::nullopt when the
/// reduced result does not fit in 64 bits, so callers can fall back to
/// floating point instead of silently wrapping.
class Rational {
 public:
  constexpr Rational() noexcept = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }
  std::string str() const;

  static std::optional<Rational> add(const Rational& a, const Rational& b);
  static std::optional<Rational> sub(const Rational& a, const Rational& b);
  static std::optional<Rational> mul(const Rational& a, const Rational& b);
  /// nullopt also when b is zero.
  static std::optional<Rational> div(const Rational& a, const Rational& b);

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) noexcept;

 private:
  static std::optional<Rational> reduce(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

}  // namespace neutro
