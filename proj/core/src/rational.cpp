#include "neutro/rational.hpp"

#include <limits>

#include "neutro/error.hpp"

namespace neutro {

namespace {

wide_int gcd128(wide_int a, wide_int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    wide_int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool fits(wide_int v) {
  return v >= std::numeric_limits<std::int64_t>::min() &&
         v <= std::numeric_limits<std::int64_t>::max();
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::invalid_input, "rational with zero denominator");
  auto r = reduce(num, den);
  if (!r) throw Error(Errc::invalid_input, "rational out of range");
  *this = *r;
}

std::optional<Rational> Rational::reduce(wide_int num, wide_int den) {
  if (den == 0) return std::nullopt;
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide_int g = gcd128(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (!fits(num) || !fits(den)) return std::nullopt;
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

std::optional<Rational> Rational::add(const Rational& a, const Rational& b) {
  return reduce(static_cast<wide_int>(a.num_) * b.den_ +
                    static_cast<wide_int>(b.num_) * a.den_,
                static_cast<wide_int>(a.den_) * b.den_);
}

std::optional<Rational> Rational::sub(const Rational& a, const Rational& b) {
  return reduce(static_cast<wide_int>(a.num_) * b.den_ -
                    static_cast<wide_int>(b.num_) * a.den_,
                static_cast<wide_int>(a.den_) * b.den_);
}

std::optional<Rational> Rational::mul(const Rational& a, const Rational& b) {
  // Cross-reduce first so products of already-reduced operands stay small.
  wide_int g1 = gcd128(a.num_, b.den_);
  wide_int g2 = gcd128(b.num_, a.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return reduce((a.num_ / g1) * (b.num_ / g2), (a.den_ / g2) * (b.den_ / g1));
}

std::optional<Rational> Rational::div(const Rational& a, const Rational& b) {
  if (b.num_ == 0) return std::nullopt;
  return reduce(static_cast<wide_int>(a.num_) * b.den_,
                static_cast<wide_int>(a.den_) * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) noexcept {
  wide_int lhs = static_cast<wide_int>(a.num_) * b.den_;
  wide_int rhs = static_cast<wide_int>(b.num_) * a.den_;
  return lhs <=> rhs;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace neutro
