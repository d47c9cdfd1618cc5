#include "neutro/scalar.hpp"

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <system_error>

namespace neutro {

namespace {

std::optional<std::int64_t> pow10(int k) {
  if (k < 0 || k > 18) return std::nullopt;
  std::int64_t p = 1;
  for (int j = 0; j < k; ++j) p *= 10;
  return p;
}

}  // namespace

Scalar Scalar::decimal(double v) {
  if (!std::isfinite(v)) return Scalar(v);
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific);
  if (res.ec != std::errc{}) return Scalar(v);
  std::string text(buf, res.ptr);

  // text looks like "-1.2345e-02"
  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '-') {
    negative = true;
    ++pos;
  }
  auto e_pos = text.find('e');
  std::string mantissa = text.substr(pos, e_pos - pos);
  int exponent = std::atoi(text.c_str() + e_pos + 1);

  std::string digits;
  int frac_digits = 0;
  bool after_point = false;
  for (char c : mantissa) {
    if (c == '.') {
      after_point = true;
      continue;
    }
    digits.push_back(c);
    if (after_point) ++frac_digits;
  }
  if (digits.size() > 18) return Scalar(v);

  std::int64_t num = std::stoll(digits);
  int scale = frac_digits - exponent;  // value = num * 10^-scale
  std::optional<Rational> r;
  if (scale >= 0) {
    auto den = pow10(scale);
    if (!den) return Scalar(v);
    r = Rational(num, *den);
  } else {
    auto mult = pow10(-scale);
    if (!mult) return Scalar(v);
    r = Rational::mul(Rational(num), Rational(*mult));
    if (!r) return Scalar(v);
  }
  if (negative) r = Rational(-r->num(), r->den());
  Scalar s(*r);
  s.value_ = v;
  return s;
}

std::string Scalar::str() const {
  if (exact_) return exact_->str();
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), value_);
  return std::string(buf, res.ptr);
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) {
    if (auto r = Rational::add(*a.exact_, *b.exact_)) return Scalar(*r);
  }
  return Scalar(a.value_ + b.value_);
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) {
    if (auto r = Rational::sub(*a.exact_, *b.exact_)) return Scalar(*r);
  }
  return Scalar(a.value_ - b.value_);
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) {
    if (auto r = Rational::mul(*a.exact_, *b.exact_)) return Scalar(*r);
  }
  return Scalar(a.value_ * b.value_);
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.exact_ && b.exact_) {
    if (auto r = Rational::div(*a.exact_, *b.exact_)) return Scalar(*r);
  }
  return Scalar(a.value_ / b.value_);
}

Scalar operator-(const Scalar& a) {
  if (a.exact_) return Scalar(Rational(-a.exact_->num(), a.exact_->den()));
  return Scalar(-a.value_);
}

bool operator==(const Scalar& a, const Scalar& b) noexcept {
  if (a.exact_ && b.exact_) return *a.exact_ == *b.exact_;
  return a.value_ == b.value_;
}

std::partial_ordering operator<=>(const Scalar& a, const Scalar& b) noexcept {
  if (a.exact_ && b.exact_) return *a.exact_ <=> *b.exact_;
  return a.value_ <=> b.value_;
}

Scalar min(const Scalar& a, const Scalar& b) { return b < a ? b : a; }
Scalar max(const Scalar& a, const Scalar& b) { return a < b ? b : a; }

Scalar clamp(const Scalar& v, const Scalar& lo, const Scalar& hi) {
  if (v < lo) return lo;
  if (hi < v) return hi;
  return v;
}

Scalar abs(const Scalar& v) { return v < Scalar(0) ? -v : v; }

bool near(const Scalar& a, const Scalar& b, double tol) {
  if (a.is_exact() && b.is_exact()) {
    Scalar d = abs(a - b);
    if (d.is_exact()) return d.value() <= tol;
  }
  return std::fabs(a.value() - b.value()) <= tol;
}

}  // namespace neutro
