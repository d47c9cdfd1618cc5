#pragma once

#include <gtest/gtest.h>

#include <cstdint>
#include <string>

#include "neutro/probability.hpp"
#include "neutro/sample_space.hpp"

namespace neutro::testing {

inline ::testing::AssertionResult is_fraction(const Scalar& s, std::int64_t num, std::int64_t den) {
  if (!s.is_exact()) {
    return ::testing::AssertionFailure() << s.str() << " is not exact (wanted " << num << "/" << den << ")";
  }
  if (*s.exact() != Rational(num, den)) {
    return ::testing::AssertionFailure() << s.str() << " != " << Rational(num, den).str();
  }
  return ::testing::AssertionSuccess();
}

inline ::testing::AssertionResult is_fraction(const IntervalChance& x, std::int64_t num,
                                              std::int64_t den) {
  if (!x.is_degenerate()) return ::testing::AssertionFailure() << x.str() << " is not a point";
  return is_fraction(x.lo(), num, den);
}

inline ::testing::AssertionResult near_triple(const NeutrosophicProbability& np, double t,
                                              double i, double f, double tol) {
  auto bad = [&](const IntervalChance& x, double want) {
    return !x.is_degenerate() || std::fabs(x.lo().value() - want) > tol;
  };
  if (bad(np.t, t) || bad(np.i, i) || bad(np.f, f)) {
    return ::testing::AssertionFailure() << np.str() << " vs (" << t << ", " << i << ", " << f
                                         << ") tol " << tol;
  }
  return ::testing::AssertionSuccess();
}

/// Six faces at 3/20 and one crack at 1/10, exact when `exact` is set.
inline SampleSpace frequentist_die(bool exact) {
  Scalar face = exact ? Scalar::fraction(3, 20) : Scalar(0.15);
  Scalar crack = exact ? Scalar::fraction(1, 10) : Scalar(0.10);
  std::vector<LabeledChance> outcomes;
  for (int k = 1; k <= 6; ++k) outcomes.push_back({std::to_string(k), face});
  return SampleSpace(std::move(outcomes), {{"indeterm", crack}});
}

inline SampleSpace urn(std::int64_t a, std::int64_t i, std::int64_t b) {
  return SampleSpace::from_counts({{"A", a}, {"I", i, LabelKind::indeterminacy}, {"B", b}});
}

}  // namespace neutro::testing
