#include <gtest/gtest.h>

#include <random>

#include "neutro/error.hpp"
#include "neutro/refined.hpp"
#include "support.hpp"

namespace neutro {
namespace {

using testing::is_fraction;
using testing::near_triple;

std::vector<RefinedPart> parts(std::initializer_list<double> chances, const char* prefix) {
  std::vector<RefinedPart> out;
  int k = 0;
  for (double c : chances) out.push_back({prefix + std::to_string(++k), c});
  return out;
}

TEST(Refined, Validation) {
  EXPECT_THROW(RefinedNP({}, parts({0.1}, "I"), parts({0.2}, "F")), Error);
  EXPECT_THROW(RefinedNP(parts({1.5}, "T"), parts({0.1}, "I"), parts({0.2}, "F")), Error);
}

TEST(Coarsen, Examples) {
  RefinedNP single(parts({0.7}, "T"), parts({0.1}, "I"), parts({0.2}, "F"));
  EXPECT_TRUE(near_triple(coarsen(single), 0.7, 0.1, 0.2, 0));
  EXPECT_EQ(single.arity(), 3u);

  RefinedNP handball(parts({0.4, 0.2, 0.05, 0.05}, "T"), parts({0.03, 0.05, 0.02}, "I"),
                     parts({0.1, 0.08, 0.02}, "F"));
  EXPECT_TRUE(near_triple(coarsen(handball), 0.7, 0.1, 0.2, 1e-15));
  EXPECT_EQ(handball.arity(), 10u);

  RefinedNP sure(parts({1, 0}, "T"), parts({0}, "I"), parts({0, 0}, "F"));
  EXPECT_TRUE(near_triple(coarsen(sure), 1, 0, 0, 0));
}

TEST(Coarsen, ClampsOverfullComponents) {
  RefinedNP over(parts({0.7, 0.6}, "T"), parts({0.1}, "I"), parts({0.2}, "F"));
  EXPECT_EQ(coarsen(over).t.lo().value(), 1.0);
  EXPECT_NEAR(part_sums(over).t.value(), 1.3, 1e-15);
}

TEST(Refine, Examples) {
  ScalarTriple np{Scalar::fraction(7, 10), Scalar::fraction(1, 10), Scalar::fraction(1, 5)};
  RefinementWeights t{{Scalar::fraction(4, 7), Scalar::fraction(2, 7), Scalar::fraction(1, 14),
                       Scalar::fraction(1, 14)},
                      {"win-by-1", "win-by-2", "win-by-3", "win-by-4-or-more"}};
  RefinedNP r = refine(np, t, {{1}, {}}, {{1}, {}});
  ASSERT_EQ(r.t_parts().size(), 4u);
  EXPECT_TRUE(is_fraction(r.t_parts()[0].chance, 2, 5));
  EXPECT_TRUE(is_fraction(r.t_parts()[1].chance, 1, 5));
  EXPECT_TRUE(is_fraction(r.t_parts()[3].chance, 1, 20));
  EXPECT_EQ(r.t_parts()[3].label, "win-by-4-or-more");

  RefinedNP passthrough = refine(np, {{1}, {}}, {{1}, {}}, {{1}, {}});
  EXPECT_EQ(passthrough.arity(), 3u);
  EXPECT_EQ(coarsen(passthrough), np.to_probability());

  RefinedNP zero = refine({0, 0.5, 0.5}, {{0.25, 0.75}, {}}, {{1}, {}}, {{1}, {}});
  for (const auto& p : zero.t_parts()) EXPECT_EQ(p.chance.value(), 0.0);
}

TEST(Refine, WeightErrors) {
  ScalarTriple np{0.7, 0.1, 0.2};
  auto code = [&](RefinementWeights w) {
    try {
      refine(np, w, {{1}, {}}, {{1}, {}});
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::parse_error;
  };
  EXPECT_EQ(code({{0.5, 0.4}, {}}), Errc::weight_sum_violation);
  EXPECT_EQ(code({{}, {}}), Errc::weight_sum_violation);
  EXPECT_EQ(code({{1.5, -0.5}, {}}), Errc::weight_sum_violation);
  EXPECT_EQ(code({{0.5, 0.5}, {"only-one"}}), Errc::invalid_input);
}

TEST(Refine, CoarsenUndoesRefineExactly) {
  std::mt19937_64 gen(15);
  std::uniform_int_distribution<int> d(0, 12);
  auto weights = [&](int n) {
    std::vector<int> raw(static_cast<std::size_t>(n));
    int total = 0;
    for (auto& x : raw) total += (x = d(gen) + 1);
    RefinementWeights w;
    for (int x : raw) w.weights.push_back(Scalar::fraction(x, total));
    return w;
  };
  for (int k = 0; k < 300; ++k) {
    int a = d(gen), b = d(gen) % (13 - a);
    ScalarTriple np{Scalar::fraction(a, 12), Scalar::fraction(b, 12), Scalar::fraction(12 - a - b, 12)};
    RefinedNP r = refine(np, weights(1 + k % 4), weights(1 + k % 3), weights(1 + k % 5));
    EXPECT_EQ(coarsen(r), np.to_probability());
    EXPECT_EQ(part_sums(r), np);
  }
}

TEST(Refinable, Examples) {
  EXPECT_FALSE(refinable({1, 1, 1}));
  auto cracks = refinable_components({1, 2, 1});
  EXPECT_TRUE(refinable({1, 2, 1}));
  EXPECT_FALSE(cracks.t);
  EXPECT_TRUE(cracks.i);
  EXPECT_FALSE(cracks.f);
  auto handball = refinable_components({4, 3, 3});
  EXPECT_TRUE(handball.t && handball.i && handball.f);
}

}  // namespace
}  // namespace neutro
