#include "neutro/interval.hpp"

#include "neutro/error.hpp"

namespace neutro {

namespace {

// Floating sums such as 6 * 0.15 + 0.10 land a few ulps outside [0, 1];
// anything that close to a bound is snapped onto it.
constexpr double kBoundSlack = 1e-12;

Scalar snap(const Scalar& v) {
  if (v.is_exact()) return v;
  if (v.value() < 0.0 && v.value() >= -kBoundSlack) return Scalar(0);
  if (v.value() > 1.0 && v.value() <= 1.0 + kBoundSlack) return Scalar(1);
  return v;
}

}  // namespace

IntervalChance::IntervalChance(Scalar point) : IntervalChance(point, point) {}

IntervalChance::IntervalChance(Scalar lo, Scalar hi) : lo_(snap(lo)), hi_(snap(hi)) {
  if (!(lo_ >= Scalar(0)) || !(hi_ <= Scalar(1)) || !(lo_ <= hi_)) {
    throw Error(Errc::invalid_interval,
                "interval [" + lo.str() + ", " + hi.str() + "] is not inside [0, 1]");
  }
}

IntervalChance IntervalChance::clamped(Scalar lo, Scalar hi) {
  return IntervalChance(clamp(lo, 0, 1), clamp(hi, 0, 1));
}

std::string IntervalChance::str() const {
  if (is_degenerate()) return lo_.str();
  return "[" + lo_.str() + ", " + hi_.str() + "]";
}

IntervalChance interval_add(const IntervalChance& a, const IntervalChance& b) {
  return IntervalChance::clamped(a.lo() + b.lo(), a.hi() + b.hi());
}

IntervalChance interval_sub(const IntervalChance& a, const IntervalChance& b) {
  return IntervalChance::clamped(a.lo() - b.hi(), a.hi() - b.lo());
}

IntervalChance interval_mul(const IntervalChance& a, const IntervalChance& b) {
  return IntervalChance::clamped(a.lo() * b.lo(), a.hi() * b.hi());
}

IndeterminateForm to_indeterminate_form(const IntervalChance& x) {
  return {x.lo(), x.hi() - x.lo()};
}

}  // namespace neutro
