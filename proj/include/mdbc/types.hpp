#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

namespace mdbc {

/// A probability in [0, 1]. Plain double: every quantity in the library is
/// double-precision and comparisons against bounds carry an explicit slack.
using Probability = double;

/// Tolerance for "is this double a probability" checks.
inline constexpr double kProbabilityTol = 1e-12;
/// Slack allowed when comparing an exact probability against a bound.
inline constexpr double kBoundSlack = 1e-9;

/// Clamps a floating-point result into [0, 1].
inline Probability clamp_probability(double value) {
  return std::clamp(value, 0.0, 1.0);
}

/// Inclusive, 1-based interval of event indices. Empty when first > last.
struct IndexRange {
  std::size_t first = 1;
  std::size_t last = 0;

  bool empty() const { return first > last; }
  std::size_t size() const { return empty() ? 0 : last - first + 1; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(size());
    for (std::size_t k = first; !empty() && k <= last; ++k) out.push_back(k);
    return out;
  }

  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

/// Requirement that event `index` occurs (`fires`) or does not occur.
/// A list of constraints describes an atom of the algebra generated by the
/// constrained events.
struct EventConstraint {
  std::size_t index = 0;
  bool fires = false;

  friend bool operator==(const EventConstraint&, const EventConstraint&) = default;
};

}  // namespace mdbc
