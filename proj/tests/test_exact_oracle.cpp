#include <gtest/gtest.h>

#include <random>

#include "mdbc/exact_oracle.hpp"
#include "support/oracles.hpp"

namespace mdbc {
namespace {

using testing::w1_model;

TEST(UnionProb, W1Examples) {
  const auto model = w1_model();
  EXPECT_DOUBLE_EQ(union_prob(model, IndexRange{1, 1}), 0.125);
  // Oracle: 3 of the 16 length-4 strings (0111, 1110, 1111) hold a 111 run.
  EXPECT_DOUBLE_EQ(testing::brute_union(w1_model(2), 1, 2), 0.1875);
  EXPECT_DOUBLE_EQ(union_prob(model, IndexRange{1, 2}), 0.1875);
  EXPECT_EQ(union_prob(model, IndexRange{5, 4}), 0.0);
}

TEST(UnionProb, RangeErrors) {
  const auto model = w1_model();
  EXPECT_THROW(union_prob(model, IndexRange{0, 3}), IndexError);
  EXPECT_THROW(union_prob(model, IndexRange{3, 25}), IndexError);
}

TEST(ComplementIntersection, Examples) {
  const ExplicitEventFamily family({0.25, 0.25, 0.25, 0.25}, {{0, 1}, {1, 2}}, 1);
  EXPECT_EQ(complement_intersection_prob(family, std::vector<std::size_t>{}), 1.0);
  EXPECT_EQ(complement_intersection_prob(w1_model(), std::vector<std::size_t>{}), 1.0);
  EXPECT_DOUBLE_EQ(complement_intersection_prob(family, std::vector<std::size_t>{1, 2}), 0.25);
  EXPECT_DOUBLE_EQ(complement_intersection_prob(w1_model(), std::vector<std::size_t>{1}), 0.875);
}

TEST(ComplementIntersection, NonContiguousMatchesExpansion) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const auto model = testing::random_window_model(
        rng, {.s_min = 2, .s_max = 2, .m_min = 1, .m_max = 3, .n_min = 4, .n_max = 9});
    const auto family = testing::expand(model);
    const std::vector<std::size_t> picks{1, 3, model.size()};
    EXPECT_NEAR(complement_intersection_prob(model, picks),
                complement_intersection_prob(family, picks), 1e-12);
  }
}

TEST(BlockEventProb, Examples) {
  const auto model = w1_model();
  EXPECT_DOUBLE_EQ(block_event_prob(model, IndexRange{4, 4}), event_prob(model, 4));
  EXPECT_DOUBLE_EQ(block_event_prob(model, IndexRange{1, 2}), 0.1875);
  EXPECT_EQ(block_event_prob(model, IndexRange{3, 2}), 0.0);
}

TEST(Oracle, IdentitiesAndMonotonicity) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 80; ++trial) {
    const auto model = testing::random_window_model(rng, {.n_min = 1, .n_max = 30});
    const std::size_t n = model.size();
    double previous = 0.0;
    for (std::size_t b = 1; b <= n; ++b) {
      const IndexRange r{1, b};
      const double u = union_prob(model, r);
      EXPECT_NEAR(u, 1.0 - complement_intersection_prob(model, r.indices()), 1e-12);
      EXPECT_GE(u, previous - 1e-15);
      previous = u;
    }
    if (n >= 2) {
      EXPECT_NEAR(union_prob(model, IndexRange{1, 2}),
                  event_prob(model, 1) + event_prob(model, 2) - pair_prob(model, 1, 2), 1e-12);
    }
  }
}

TEST(Oracle, DpEqualsBruteForceEnumeration) {
  std::mt19937_64 rng(23);
  int cases = 0;
  while (cases < 60) {
    const auto model = testing::random_window_model(rng, {.n_min = 0, .n_max = 10});
    std::size_t total = 1;
    for (std::size_t t = 0; t < model.size() + model.m(); ++t) total *= model.alphabet_size();
    if (total > (std::size_t{1} << 20)) continue;
    ++cases;
    const double dp = union_prob(model);
    const double brute = model.size() ? testing::brute_union(model, 1, model.size()) : 0.0;
    EXPECT_NEAR(dp, brute, 1e-12);
  }
}

TEST(Oracle, ExplicitUnionBySetSweep) {
  const ExplicitEventFamily family({0.1, 0.2, 0.3, 0.4}, {{0}, {1, 2}, {2}}, 1);
  EXPECT_NEAR(union_prob(family), 0.6, 1e-15);
  EXPECT_NEAR(union_prob(family, IndexRange{2, 3}), 0.5, 1e-15);
}

}  // namespace
}  // namespace mdbc
