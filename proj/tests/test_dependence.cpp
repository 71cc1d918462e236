#include <gtest/gtest.h>

#include <random>

#include "mdbc/dependence.hpp"
#include "support/oracles.hpp"

namespace mdbc {
namespace {

TEST(CheckMDependence, WindowModelsPass) {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 20; ++trial) {
    const auto model = testing::random_window_model(rng, {.n_max = 30});
    const auto report = check_m_dependence(model, model.m());
    EXPECT_TRUE(report.passed()) << "trial " << trial;
    const auto* structural = report.find("dependence", "window supports disjoint beyond claimed m");
    ASSERT_NE(structural, nullptr);
    EXPECT_TRUE(structural->passed());
  }
}

TEST(CheckMDependence, IdenticalEventsAtGapMPlusOneFail) {
  // m = 1, A_1 = A_3 = {0} on a fair two-point space.
  const ExplicitEventFamily family({0.5, 0.5}, {{0}, {1}, {0}}, 1);
  const auto report = check_m_dependence(family, 1);
  EXPECT_FALSE(report.passed());
  const auto* c = report.find("dependence", "atoms factorize across distance > m");
  ASSERT_NE(c, nullptr);
  EXPECT_NEAR(c->worst_slack, -(0.5 - 0.25), 1e-15);
}

TEST(CheckMDependence, SingleEventIsVacuous) {
  const ExplicitEventFamily family({0.5, 0.5}, {{0}}, 3);
  const auto report = check_m_dependence(family, 3);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.find("dependence", "atoms factorize across distance > m")->evaluated, 0u);
}

TEST(CheckMDependence, MaxSubsetTwoIsPairwiseOnly) {
  // Three pairwise-independent but not mutually independent events
  // (XOR construction) placed far apart: A_3 = A_1 xor A_5.
  std::vector<double> w(4, 0.25);
  // outcomes encode (b1, b2): A_1 = b1, A_5 = b2, A_3 = b1 xor b2; A_2, A_4 empty.
  const ExplicitEventFamily family(w, {{2, 3}, {}, {1, 2}, {}, {1, 3}}, 1);
  EXPECT_TRUE(check_m_dependence(family, 1, {.max_subset = 2}).passed());
  EXPECT_FALSE(check_m_dependence(family, 1, {.max_subset = 3}).passed());
}

TEST(CheckMDependence, MonotoneInM) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    // Random explicit families on 8 outcomes.
    std::vector<double> w(8);
    double total = 0.0;
    for (auto& x : w) total += (x = unit(rng));
    for (auto& x : w) x /= total;
    std::vector<std::vector<std::size_t>> events(5);
    for (auto& ev : events) {
      for (std::size_t o = 0; o < 8; ++o) {
        if (unit(rng) < 0.4) ev.push_back(o);
      }
    }
    const ExplicitEventFamily family(w, events, 0);
    bool previous = false;
    for (std::size_t m = 0; m <= 5; ++m) {
      const bool pass = check_m_dependence(family, m).passed();
      if (previous) {
        EXPECT_TRUE(pass) << "trial " << trial << " m " << m;
      }
      previous = pass;
    }
    EXPECT_TRUE(previous);  // m >= N - 1 leaves nothing to check
  }
}

TEST(CheckMDependence, StructuralAndNumericalAgreeOnUnderclaim) {
  // W1 truly has range 2; claiming 1 must fail both ways.
  const auto report = check_m_dependence(testing::w1_model(10), 1);
  EXPECT_FALSE(report.find("dependence", "window supports disjoint beyond claimed m")->passed());
  EXPECT_FALSE(report.find("dependence", "atoms factorize across distance > m")->passed());
}

TEST(CheckMDependence, Errors) {
  const ExplicitEventFamily family({1.0}, {{0}}, 0);
  EXPECT_THROW(check_m_dependence(family, 0, {.max_subset = 1}), DomainError);
}

}  // namespace
}  // namespace mdbc
