#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

#include "neutro/error.hpp"
#include "neutro/integral.hpp"
#include "neutro/measure.hpp"

namespace neutro {
namespace {

TEST(Measure, RejectsNegativeComponents) {
  EXPECT_THROW(NeutrosophicMeasure(-1, 0, 0), Error);
  EXPECT_THROW(NeutrosophicMeasure(0, NAN, 0), Error);
}

TEST(Measure, LeqExamples) {
  EXPECT_TRUE(nm_leq({1, 0, 5}, {2, 1, 3}));
  EXPECT_TRUE(nm_leq({2, 1, 3}, {2, 1, 3}));
  EXPECT_FALSE(nm_leq({2, 0, 3}, {1, 0, 4}));
}

TEST(Measure, LeqIsAPartialOrder) {
  std::mt19937_64 gen(17);
  std::uniform_int_distribution<int> d(0, 3);
  std::vector<NeutrosophicMeasure> ms;
  for (int k = 0; k < 60; ++k) ms.emplace_back(d(gen), d(gen), d(gen));
  for (const auto& a : ms) {
    EXPECT_TRUE(nm_leq(a, a));
    for (const auto& b : ms) {
      if (nm_leq(a, b) && nm_leq(b, a)) EXPECT_EQ(a, b);
      for (const auto& c : ms) {
        if (nm_leq(a, b) && nm_leq(b, c)) EXPECT_TRUE(nm_leq(a, c));
      }
    }
  }
}

TEST(Measure, LeqOnDeterminatePartMatchesRealOrder) {
  for (double x : {0.0, 0.3, 1.0}) {
    for (double y : {0.0, 0.3, 1.0}) {
      EXPECT_EQ(nm_leq({x, 0, 0}, {y, 0, 0}), x <= y);
    }
  }
}

TEST(Measure, AddExamples) {
  NeutrosophicMeasure r = nm_add({0.3, 0.1, 0.6}, {0.2, 0.1, 0.7}, {1.0});
  EXPECT_NEAR(r.det(), 0.5, 1e-15);
  EXPECT_NEAR(r.neut(), 0.2, 1e-15);
  EXPECT_NEAR(r.anti(), 0.3, 1e-15);

  NeutrosophicMeasure halves = nm_add({0.5, 0, 0.5}, {0.5, 0, 0.5}, {1.0});
  EXPECT_EQ(halves, NeutrosophicMeasure(1.0, 0, 0));

  NeutrosophicMeasure book = nm_add({97, 3, 0}, {0, 0, 100}, {100});
  EXPECT_EQ(book, NeutrosophicMeasure(97, 3, 0));
}

TEST(Measure, AddThirdComponentIsAntiSumMinusTotal) {
  std::mt19937_64 gen(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int k = 0; k < 200; ++k) {
    double m = 10.0;
    double c1 = 5.0 + 5.0 * u(gen), c2 = 10.0 - (10.0 - c1) * u(gen);
    NeutrosophicMeasure a(u(gen), u(gen), c1), b(u(gen), u(gen), c2);
    NeutrosophicMeasure r = nm_add(a, b, {m});
    EXPECT_EQ(r.det(), a.det() + b.det());
    EXPECT_EQ(r.neut(), a.neut() + b.neut());
    EXPECT_DOUBLE_EQ(r.anti(), std::max(0.0, c1 + c2 - m));
  }
}

TEST(Measure, AddRejectsInconsistentInputs) {
  try {
    nm_add({1, 0, 2}, {1, 0, 3}, {10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::inconsistent_measure);
  }
}

TEST(Measure, SumFoldsLeft) {
  std::vector<NeutrosophicMeasure> parts{{1, 0, 5}, {2, 1, 4}, {1, 1, 5}};
  NeutrosophicMeasure r = nm_sum(parts, {6});
  EXPECT_EQ(r, NeutrosophicMeasure(4, 2, 2));
}

TEST(Measure, Normalized) {
  EXPECT_TRUE(nm_normalized({0.97, 0.03, 0}));
  EXPECT_FALSE(nm_normalized({4, 2, 0}));
  EXPECT_FALSE(nm_normalized({1, 1, 1}));
}

TEST(Measure, ApproximateNumbers) {
  auto q = to_indeterminate_form(0.8, 0.9);
  EXPECT_DOUBLE_EQ(q.determinate, 0.8);
  EXPECT_NEAR(q.indeterminacy_bound, 0.1, 1e-15);
  auto r = to_indeterminate_form(-6, -4);
  EXPECT_DOUBLE_EQ(r.determinate, -6);
  EXPECT_DOUBLE_EQ(r.indeterminacy_bound, 2);
}

TEST(Integral, BandPolynomials) {
  auto zero = [](double) { return 0.0; };
  auto lin = integrate_band({[](double x) { return x; }, zero}, 0, 1, 100);
  EXPECT_NEAR(lin.determinate, 0.5, 1e-12);
  EXPECT_EQ(lin.indeterminacy, 0.0);

  auto flat = integrate_band({[](double) { return 1.0; }, [](double) { return 0.1; }}, 0, 1, 100);
  EXPECT_NEAR(flat.determinate, 1.0, 1e-9);
  EXPECT_NEAR(flat.indeterminacy, 0.1, 1e-9);

  auto quad = integrate_band({[](double x) { return x * x; }, [](double x) { return x; }}, 0, 2, 200);
  EXPECT_NEAR(quad.determinate, 8.0 / 3.0, 1e-9);
  EXPECT_NEAR(quad.indeterminacy, 2.0, 1e-9);
}

TEST(Integral, SimpsonIsExactForCubics) {
  std::mt19937_64 gen(23);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int k = 0; k < 50; ++k) {
    double c0 = u(gen), c1 = u(gen), c2 = u(gen), c3 = u(gen);
    double a = u(gen), b = a + 1.0 + std::fabs(u(gen));
    auto poly = [&](double x) { return c0 + x * (c1 + x * (c2 + x * c3)); };
    auto anti = [&](double x) { return x * (c0 + x * (c1 / 2 + x * (c2 / 3 + x * c3 / 4))); };
    EXPECT_NEAR(simpson(poly, a, b, 2), anti(b) - anti(a), 1e-9);
  }
}

TEST(Integral, SelectionStaysInsideBand) {
  auto g = [](double x) { return std::sin(x); };
  auto h = [](double x) { return 0.5 + 0.25 * std::cos(x); };
  auto r = integrate_band({g, h}, 0, 3, 300);
  for (double lambda : {0.0, 0.2, 0.7, 1.0}) {
    auto s = [&](double x) { return g(x) + lambda * h(x) * (0.5 + 0.5 * std::sin(7 * x)); };
    double q = simpson(s, 0, 3, 300);
    EXPECT_GE(q, r.determinate - 1e-9);
    EXPECT_LE(q, r.determinate + r.indeterminacy + 1e-9);
  }
}

TEST(Integral, NegativeBandRejected) {
  try {
    integrate_band({[](double) { return 1.0; }, [](double x) { return x - 0.5; }}, 0, 1, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_band);
  }
}

TEST(Integral, BadPanelsAndRange) {
  auto one = [](double) { return 1.0; };
  EXPECT_THROW(integrate_band({one, one}, 0, 1, 3), Error);
  EXPECT_THROW(integrate_band({one, one}, 1, 0, 4), Error);
}

TEST(Integral, UncertainLowerExamples) {
  auto r = integrate_uncertain_lower([](double) { return 1.0; }, 0, 0.1, 1, 100);
  EXPECT_NEAR(r.low_form.determinate, 1.0, 1e-12);
  EXPECT_NEAR(r.low_form.indeterminacy, 0.1, 1e-12);
  EXPECT_NEAR(r.high_form.determinate, 0.9, 1e-12);
  EXPECT_NEAR(r.high_form.indeterminacy, 0.1, 1e-12);

  auto lin = integrate_uncertain_lower([](double x) { return x; }, 0, 1, 2, 100);
  EXPECT_NEAR(lin.low_form.determinate, 2.0, 1e-12);
  EXPECT_NEAR(lin.high_form.determinate, 1.5, 1e-12);
  EXPECT_NEAR(lin.low_form.indeterminacy, 0.5, 1e-12);

  auto none = integrate_uncertain_lower([](double x) { return x * x; }, 0, 0, 1, 100);
  EXPECT_EQ(none.low_form.determinate, none.high_form.determinate);
  EXPECT_EQ(none.low_form.indeterminacy, 0.0);

  EXPECT_THROW(integrate_uncertain_lower([](double) { return 1.0; }, 0, -0.1, 1, 10), Error);
}

TEST(Integral, UncertainLowerFormsAgree) {
  auto f = [](double x) { return std::exp(-x) * (1 + x * x); };
  for (double eps : {0.05, 0.3, 1.0}) {
    auto r = integrate_uncertain_lower(f, 0.5, eps, 3, 400);
    EXPECT_NEAR(r.low_form.determinate - r.low_form.indeterminacy, r.high_form.determinate, 1e-9);
  }
}

}  // namespace
}  // namespace neutro
