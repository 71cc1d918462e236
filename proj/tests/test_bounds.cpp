#include <gtest/gtest.h>

#include <random>

#include "mdbc/bounds.hpp"
#include "support/oracles.hpp"

namespace mdbc {
namespace {

using testing::w1_model;

// 1 - e^{-x} evaluated at 30 digits.
constexpr double kOneMinusEInv = 0.632120558828557678404476229839;
constexpr double kOneMinusE078125 = 0.542166638228385739097853159346;
constexpr double kOneMinusEThird = 0.283468689426210749574395903075;

ExplicitEventFamily constant_family(double p, std::size_t n, std::size_t m) {
  // Outcome 0 carries mass p and belongs to every event.
  std::vector<std::vector<std::size_t>> events(n, std::vector<std::size_t>{0});
  if (p == 1.0) return ExplicitEventFamily({1.0}, events, m);
  return ExplicitEventFamily({p, 1.0 - p}, events, m);
}

TEST(Thm1Bound, Examples) {
  EXPECT_EQ(thm1_bound(0.0, 0), 0.0);
  EXPECT_EQ(thm1_bound(0.0, 5), 0.0);
  EXPECT_NEAR(thm1_bound(3.0, 2), kOneMinusEInv, 1e-15);
  EXPECT_NEAR(thm1_bound(1.0, 0), kOneMinusEInv, 1e-15);
  EXPECT_THROW(thm1_bound(-0.1, 1), DomainError);
}

TEST(Thm1Bound, Monotone) {
  for (std::size_t m = 0; m < 6; ++m) {
    for (double s = 0.0; s < 20.0; s += 0.25) {
      EXPECT_LE(thm1_bound(s, m), thm1_bound(s + 0.25, m));
      EXPECT_GE(thm1_bound(s, m), thm1_bound(s, m + 1));
    }
  }
}

TEST(Thm2Bound, Examples) {
  const auto w1 = thm2_bound(3.0, 1.4375, 2);
  EXPECT_DOUBLE_EQ(w1.exponent, 0.78125);
  EXPECT_NEAR(w1.bound, kOneMinusE078125, 1e-15);

  const auto tie = thm2_bound(2.0, 0.0, 1);
  EXPECT_DOUBLE_EQ(tie.exponent, thm1_exponent(2.0, 1));

  const auto vacuous = thm2_bound(1.0, 3.0, 3);
  EXPECT_LT(vacuous.exponent, 0.0);
  EXPECT_EQ(vacuous.bound, 0.0);
  EXPECT_EQ(thm2_bound(1.0, 1.0, 3).bound, 0.0);
  EXPECT_THROW(thm2_bound(1.0, 0.0, 0), DomainError);
}

TEST(Thm2Sharper, Examples) {
  EXPECT_FALSE(thm2_sharper(4.0, 0.0, 1));
  EXPECT_FALSE(thm2_sharper(3.0, 1.4375, 2));
  EXPECT_TRUE(thm2_sharper(2.0, 0.5, 3));
  EXPECT_FALSE(thm2_sharper(2.0, 1.0, 3));  // tie at the threshold
  EXPECT_THROW(thm2_sharper(1.0, 0.0, 0), DomainError);
}

TEST(Thm2Sharper, AgreesWithExponentComparison) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> mass(0.0, 50.0);
  std::uniform_int_distribution<std::size_t> range(1, 12);
  for (int i = 0; i < 10000; ++i) {
    const double s = mass(rng);
    const double t = mass(rng) * 0.5;
    const std::size_t m = range(rng);
    const double diff = 0.5 * (s - t) - s / static_cast<double>(m + 1);
    if (std::abs(diff) <= 1e-12) continue;
    EXPECT_EQ(thm2_sharper(s, t, m), diff > 0.0) << s << ' ' << t << ' ' << m;
  }
}

TEST(BuildPhi, Examples) {
  EXPECT_EQ(build_phi(constant_family(0.5, 8, 1)).values(),
            (std::vector<std::size_t>{2, 4, 6, 8}));
  EXPECT_EQ(build_phi(constant_family(1.0, 3, 1)).values(),
            (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(build_phi(w1_model()).values(), (std::vector<std::size_t>{8, 16, 24}));
  EXPECT_TRUE(build_phi(constant_family(0.1, 9, 1)).empty());
  EXPECT_TRUE(build_phi(w1_model(0)).empty());
}

TEST(BuildPhi, MinimalAndSatisfiesHypothesis) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 50; ++trial) {
    const auto model = testing::random_window_model(rng, {.n_min = 1, .n_max = 200});
    const auto phi = build_phi(model);
    for (std::size_t n = 1; n <= phi.max_defined(); ++n) {
      EXPECT_GE(partial_sum_s(model, phi(n)), static_cast<double>(n));
      EXPECT_LT(partial_sum_s(model, phi(n) - 1), static_cast<double>(n));
      if (n > 1) {
        EXPECT_GE(phi(n), phi(n - 1));
      }
    }
    EXPECT_LT(partial_sum_s(model, model.size()), static_cast<double>(phi.max_defined() + 1));
  }
}

TEST(CorollaryWindow, Examples) {
  const auto w1 = w1_model();
  const auto phi = build_phi(w1);
  const auto full = corollary_window(w1, phi, 0, 3);
  EXPECT_EQ(full.indices, (IndexRange{1, 24}));
  EXPECT_NEAR(full.bound, kOneMinusEInv, 1e-15);
  EXPECT_TRUE(full.mass_check);

  const auto certain = constant_family(1.0, 6, 1);
  const auto w = corollary_window(certain, build_phi(certain), 2, 2);
  EXPECT_EQ(w.indices, (IndexRange{3, 4}));
  EXPECT_NEAR(w.bound, kOneMinusEInv, 1e-15);

  const auto independent = constant_family(1.0, 2, 0);
  EXPECT_NEAR(corollary_window(independent, build_phi(independent), 0, 1).bound, kOneMinusEInv,
              1e-15);

  // With horizon 72 the W1 window for (i=8, n=1) is {9..phi(9)} = {9..72}.
  const auto long_w1 = w1_model(72);
  const auto w9 = corollary_window(long_w1, build_phi(long_w1), 8, 1);
  EXPECT_EQ(w9.indices, (IndexRange{9, 72}));
  EXPECT_NEAR(w9.bound, kOneMinusEThird, 1e-15);
}

TEST(CorollaryWindow, UndefinedPhiNamesDeficit) {
  const auto w1 = w1_model();
  const auto phi = build_phi(w1);
  try {
    corollary_window(w1, phi, 8, 1);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("deficit 6"), std::string::npos) << e.what();
  }
  EXPECT_THROW(corollary_window(w1, phi, 0, 0), DomainError);
}

TEST(BoundReport, W1AndE1) {
  const auto w1 = make_bound_report(w1_model(), true);
  EXPECT_DOUBLE_EQ(w1.s_n, 3.0);
  EXPECT_DOUBLE_EQ(w1.t_local, 1.4375);
  EXPECT_NEAR(w1.thm1_bound, kOneMinusEInv, 1e-15);
  ASSERT_TRUE(w1.thm2_sharper.has_value());
  EXPECT_FALSE(*w1.thm2_sharper);
  ASSERT_TRUE(w1.exact_union.has_value());
  EXPECT_GE(*w1.exact_union, w1.thm1_bound);
  EXPECT_GE(*w1.exact_union, *w1.thm2_bound);

  const ExplicitEventFamily e1({0.25, 0.25, 0.25, 0.25}, {{0, 1}, {1, 2}}, 1);
  const auto r = make_bound_report(e1, true);
  EXPECT_DOUBLE_EQ(*r.exact_union, 0.75);
  EXPECT_NEAR(r.thm1_bound, 0.393469340287366576396, 1e-15);

  const auto empty = make_bound_report(w1_model(0), true);
  EXPECT_EQ(empty.s_n, 0.0);
  EXPECT_EQ(empty.thm1_bound, 0.0);
  EXPECT_EQ(*empty.thm2_bound, 0.0);
  EXPECT_EQ(*empty.exact_union, 0.0);

  const auto independent = make_bound_report(constant_family(0.5, 3, 0), false);
  EXPECT_FALSE(independent.thm2_bound.has_value());
  EXPECT_FALSE(independent.thm2_sharper.has_value());
}

TEST(Bounds, M1ExponentsCoincide) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 100; ++trial) {
    const auto model = testing::random_window_model(rng, {.m_min = 1, .m_max = 1});
    const auto r = make_bound_report(model, false);
    EXPECT_EQ(r.t_local, 0.0);
    EXPECT_NEAR(r.thm1_exponent, *r.thm2_exponent, 1e-12);
  }
}

}  // namespace
}  // namespace mdbc
