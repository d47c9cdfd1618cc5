#include <gtest/gtest.h>

#include <array>
#include <random>

#include "neutro/error.hpp"
#include "neutro/fusion.hpp"

namespace neutro {
namespace {

SubjectiveNP random_normalized(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double a = u(gen), b = u(gen), c = u(gen);
  double s = a + b + c;
  return {a / s, b / s, c / s, {}};
}

// Direct evaluation of the pairwise redistribution, written out term by term.
std::array<double, 3> pcr5_by_hand(const SubjectiveNP& a, const SubjectiveNP& b) {
  std::array<double, 3> x{a.t, a.i, a.f}, y{b.t, b.i, b.f};
  std::array<double, 3> out{};
  for (int e = 0; e < 3; ++e) {
    out[e] = x[e] * y[e];
    for (int o = 0; o < 3; ++o) {
      if (o == e) continue;
      if (x[e] + y[o] > 0) out[e] += x[e] * x[e] * y[o] / (x[e] + y[o]);
      if (y[e] + x[o] > 0) out[e] += y[e] * y[e] * x[o] / (y[e] + x[o]);
    }
  }
  return out;
}

TEST(Pcr5, SatelliteExample) {
  SubjectiveNP r = pcr5_fuse({0.6, 0.1, 0.3, "s1"}, {0.2, 0.3, 0.5, "s2"});
  EXPECT_NEAR(r.t, 0.44097, 5e-6);
  EXPECT_NEAR(r.i, 0.15000, 5e-6);
  EXPECT_NEAR(r.f, 0.40903, 5e-6);
}

TEST(Pcr5, AgreementAndHandOracle) {
  SubjectiveNP r = pcr5_fuse({1, 0, 0, {}}, {1, 0, 0, {}});
  EXPECT_EQ(r.t, 1.0);
  EXPECT_EQ(r.i, 0.0);
  EXPECT_EQ(r.f, 0.0);
  SubjectiveNP q{0.5, 0.25, 0.25, {}};
  SubjectiveNP s = pcr5_fuse(q, q);
  auto want = pcr5_by_hand(q, q);
  EXPECT_NEAR(s.t, want[0], 1e-15);
  EXPECT_NEAR(s.i, want[1], 1e-15);
  EXPECT_NEAR(s.f, want[2], 1e-15);
  EXPECT_NEAR(s.sum(), 1.0, 1e-12);
}

TEST(Pcr5, ConservesMassAndMatchesOracles) {
  std::mt19937_64 gen(99);
  for (int k = 0; k < 1000; ++k) {
    SubjectiveNP a = random_normalized(gen), b = random_normalized(gen);
    SubjectiveNP r = pcr5_fuse(a, b);
    EXPECT_NEAR(r.sum(), 1.0, 1e-9);

    auto hand = pcr5_by_hand(a, b);
    EXPECT_NEAR(r.t, hand[0], 1e-12);
    EXPECT_NEAR(r.i, hand[1], 1e-12);
    EXPECT_NEAR(r.f, hand[2], 1e-12);

    ProbabilityMap c = pcr5_classical({{"t", a.t}, {"i", a.i}, {"f", a.f}},
                                      {{"t", b.t}, {"i", b.i}, {"f", b.f}});
    EXPECT_NEAR(r.t, c["t"], 1e-12);
    EXPECT_NEAR(r.i, c["i"], 1e-12);
    EXPECT_NEAR(r.f, c["f"], 1e-12);

    SubjectiveNP swapped = pcr5_fuse(b, a);
    EXPECT_NEAR(swapped.t, r.t, 1e-15);
    EXPECT_NEAR(swapped.i, r.i, 1e-15);
    EXPECT_NEAR(swapped.f, r.f, 1e-15);
  }
}

TEST(Pcr5, ZeroDenominatorsContributeNothing) {
  SubjectiveNP r = pcr5_fuse({0, 0, 1, {}}, {0, 1, 0, {}});
  EXPECT_NEAR(r.i, 0.5, 1e-15);
  EXPECT_NEAR(r.f, 0.5, 1e-15);
  EXPECT_EQ(r.t, 0.0);
}

TEST(Pcr5Classical, Examples) {
  ProbabilityMap point{{"x", 1}, {"y", 0}, {"z", 0}};
  ProbabilityMap r = pcr5_classical(point, point);
  EXPECT_EQ(r["x"], 1.0);
  EXPECT_EQ(r["y"], 0.0);
  ProbabilityMap uniform{{"a", 0.25}, {"b", 0.25}, {"c", 0.25}, {"d", 0.25}};
  for (const auto& [label, v] : pcr5_classical(uniform, uniform)) EXPECT_NEAR(v, 0.25, 1e-15);
  try {
    pcr5_classical(point, uniform);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::label_mismatch);
  }
}

TEST(Scheme, Examples) {
  SubjectiveNP f1{1, 0, 0, {}};
  SubjectiveNP r = combine_scheme(f1, f1, Scheme::very_pessimistic);
  EXPECT_EQ(r.t, 1.0);
  SubjectiveNP half{0.5, 0, 0.5, {}};
  SubjectiveNP p = combine_scheme(half, half, Scheme::very_pessimistic);
  EXPECT_NEAR(p.t, 0.25, 1e-15);
  EXPECT_NEAR(p.i, 0.5, 1e-15);
  EXPECT_NEAR(p.f, 0.25, 1e-15);
  SubjectiveNP o = combine_scheme(half, half, Scheme::very_optimistic);
  EXPECT_NEAR(o.t, 0.5, 1e-15);
  EXPECT_NEAR(o.i, 0.0, 1e-15);
  EXPECT_NEAR(o.f, 0.5, 1e-15);
}

TEST(Scheme, RoutingOfCrossTerms) {
  SubjectiveNP a{0.6, 0.4, 0, {}}, b{0.5, 0.5, 0, {}};
  // t-i crosses: 0.6*0.5 + 0.5*0.4 = 0.5
  SubjectiveNP pess = combine_scheme(a, b, Scheme::less_pessimistic);
  EXPECT_NEAR(pess.t, 0.30, 1e-15);
  EXPECT_NEAR(pess.i, 0.20 + 0.5, 1e-15);
  SubjectiveNP opt = combine_scheme(a, b, Scheme::less_optimistic);
  EXPECT_NEAR(opt.t, 0.30 + 0.5, 1e-15);
  EXPECT_NEAR(opt.i, 0.20, 1e-15);
}

TEST(Scheme, AllSchemesConserveMass) {
  std::mt19937_64 gen(7);
  for (Scheme s : {Scheme::very_pessimistic, Scheme::less_pessimistic, Scheme::less_optimistic,
                   Scheme::very_optimistic}) {
    EXPECT_EQ(parse_scheme(to_string(s)), s);
    for (int k = 0; k < 200; ++k) {
      EXPECT_NEAR(combine_scheme(random_normalized(gen), random_normalized(gen), s).sum(), 1.0, 1e-12);
    }
  }
  EXPECT_THROW(combine_scheme({0.5, 0.5, 0.5, {}}, {1, 0, 0, {}}, Scheme::very_optimistic), Error);
  EXPECT_THROW(parse_scheme("sideways"), Error);
}

TEST(TNorm, Examples) {
  SubjectiveNP alpha{0.7, 0.2, 0.1, {}}, gamma{0.3, 0.5, 0.2, {}};
  SubjectiveNP prod = tnorm_fuse(alpha, gamma, TNormConfig::product_probsum(), TNormMode::pessimistic);
  EXPECT_NEAR(prod.t, 0.21, 1e-12);
  EXPECT_NEAR(prod.i, 0.60, 1e-12);
  EXPECT_NEAR(prod.f, 0.28, 1e-12);

  SubjectiveNP a{0.4, 0.1, 0.5, {}}, b{0.3, 0.5, 0.2, {}};
  SubjectiveNP pess = tnorm_fuse(a, b, TNormConfig::min_max(), TNormMode::pessimistic);
  EXPECT_EQ(pess.t, 0.3);
  EXPECT_EQ(pess.i, 0.5);
  EXPECT_EQ(pess.f, 0.5);
  SubjectiveNP opt = tnorm_fuse(a, b, TNormConfig::min_max(), TNormMode::optimistic);
  EXPECT_EQ(opt.t, 0.3);
  EXPECT_EQ(opt.i, 0.1);
  EXPECT_EQ(opt.f, 0.5);

  SubjectiveNP pn = tnorm_fuse(a, b, TNormConfig::min_max(), TNormMode::pessimistic, true);
  EXPECT_NEAR(pn.t, 3.0 / 13, 1e-15);
  EXPECT_NEAR(pn.i, 5.0 / 13, 1e-15);
  SubjectiveNP on = tnorm_fuse(a, b, TNormConfig::min_max(), TNormMode::optimistic, true);
  EXPECT_NEAR(on.t, 3.0 / 9, 1e-15);
  EXPECT_NEAR(on.i, 1.0 / 9, 1e-15);
  EXPECT_NEAR(on.f, 5.0 / 9, 1e-15);
}

TEST(TNorm, IdentityLawsAndDominance) {
  std::mt19937_64 gen(31);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char* name : {"min-max", "product-probsum", "lukasiewicz"}) {
    const TNormConfig cfg = TNormConfig::by_name(name);
    for (int k = 0; k < 200; ++k) {
      double x = u(gen);
      EXPECT_NEAR(cfg.tnorm(x, 1.0), x, 1e-15);
      EXPECT_NEAR(cfg.tconorm(x, 0.0), x, 1e-15);
      SubjectiveNP a{u(gen), u(gen), u(gen), {}}, b{u(gen), u(gen), u(gen), {}};
      SubjectiveNP p = tnorm_fuse(a, b, cfg, TNormMode::pessimistic);
      SubjectiveNP o = tnorm_fuse(a, b, cfg, TNormMode::optimistic);
      EXPECT_GE(p.i, o.i);
      EXPECT_GE(p.f, o.f);
      EXPECT_EQ(p.t, o.t);
    }
  }
  EXPECT_THROW(TNormConfig::by_name("nope"), Error);
}

TEST(Normalize, Examples) {
  SubjectiveNP r = normalize(SubjectiveNP{0.3, 0.5, 0.5, {}});
  EXPECT_NEAR(r.t, 3.0 / 13, 1e-15);
  EXPECT_NEAR(r.f, 5.0 / 13, 1e-15);
  SubjectiveNP one = normalize(SubjectiveNP{1, 0, 0, {}});
  EXPECT_EQ(one.t, 1.0);
  SubjectiveNP thirds = normalize(SubjectiveNP{0.2, 0.2, 0.2, {}});
  EXPECT_NEAR(thirds.i, 1.0 / 3, 1e-15);
  SubjectiveNP again = normalize(r);
  EXPECT_NEAR(again.t, r.t, 1e-15);
  EXPECT_NEAR(again.i, r.i, 1e-15);
  EXPECT_THROW(normalize(SubjectiveNP{0, 0, 0, {}}), Error);
}

}  // namespace
}  // namespace neutro
