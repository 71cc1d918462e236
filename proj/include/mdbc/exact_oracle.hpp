#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "mdbc/core.hpp"
#include "mdbc/error.hpp"
#include "mdbc/types.hpp"

namespace mdbc {

namespace detail {

template <EventFamily F>
void check_range(const F& family, IndexRange range) {
  if (range.empty()) return;
  if (range.first < 1 || range.last > family.size()) {
    throw IndexError("interval [" + std::to_string(range.first) + ", " +
                     std::to_string(range.last) + "] outside [1, " +
                     std::to_string(family.size()) + "]");
  }
}

}  // namespace detail

/// P(none of A_k, k in indices). The empty intersection has probability 1.
/// Indices need not be contiguous; for window models the DP only zeroes
/// firing windows at member indices.
template <EventFamily F>
Probability complement_intersection_prob(const F& family,
                                         std::span<const std::size_t> indices) {
  std::vector<EventConstraint> constraints;
  constraints.reserve(indices.size());
  for (std::size_t k : indices) constraints.push_back({k, false});
  return family.constrained_prob(constraints);
}

/// P(A_a or ... or A_b); zero for an empty interval.
template <EventFamily F>
Probability union_prob(const F& family, IndexRange range) {
  detail::check_range(family, range);
  if (range.empty()) return 0.0;
  const auto indices = range.indices();
  return clamp_probability(1.0 - complement_intersection_prob(family, indices));
}

/// P(A_1 or ... or A_N).
template <EventFamily F>
Probability union_prob(const F& family) {
  return union_prob(family, IndexRange{1, family.size()});
}

/// P(B) for the block event B = union of A_k over the block's indices.
template <EventFamily F>
Probability block_event_prob(const F& family, IndexRange block) {
  return union_prob(family, block);
}

}  // namespace mdbc
