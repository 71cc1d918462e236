#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mdbc/types.hpp"

namespace mdbc::detail {

// Forward DP over the last m symbols of an i.i.d. stream.
//
// State code = sum_{t<m} y_t * s^t with y_0 the earliest retained symbol.
// Appending symbol x yields the window code state + x * s^m; the next state
// drops the earliest symbol (window / s). At each constrained index the mass
// of windows whose predicate value disagrees with the constraint is zeroed.
// Only symbols X_lo .. X_{hi+m} are simulated, lo/hi being the extreme
// constrained indices.
inline Probability window_constrained_prob(std::size_t s, std::span<const double> dist,
                                           std::size_t m,
                                           std::span<const std::uint8_t> table,
                                           std::span<const EventConstraint> constraints) {
  if (constraints.empty()) return 1.0;

  std::vector<EventConstraint> sorted(constraints.begin(), constraints.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    return a.index < b.index || (a.index == b.index && a.fires < b.fires);
  });
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i].index == sorted[i - 1].index && sorted[i].fires != sorted[i - 1].fires) {
      return 0.0;
    }
  }
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::size_t states = 1;
  for (std::size_t t = 0; t < m; ++t) states *= s;

  // Initial law of (X_lo, ..., X_{lo+m-1}).
  std::vector<double> mass(states);
  for (std::size_t code = 0; code < states; ++code) {
    double w = 1.0;
    std::size_t c = code;
    for (std::size_t t = 0; t < m; ++t) {
      w *= dist[c % s];
      c /= s;
    }
    mass[code] = w;
  }

  std::vector<double> next(states);
  const std::size_t lo = sorted.front().index;
  const std::size_t hi = sorted.back().index;
  std::size_t cursor = 0;
  for (std::size_t k = lo; k <= hi; ++k) {
    const bool constrained = sorted[cursor].index == k;
    const bool required = constrained && sorted[cursor].fires;
    if (constrained) ++cursor;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t state = 0; state < states; ++state) {
      const double base = mass[state];
      if (base == 0.0) continue;
      for (std::size_t x = 0; x < s; ++x) {
        const std::size_t window = state + x * states;
        if (constrained && (table[window] != 0) != required) continue;
        next[window / s] += base * dist[x];
      }
    }
    for (double& v : next) v = std::clamp(v, 0.0, 1.0);
    mass.swap(next);
  }

  double total = 0.0;
  for (double v : mass) total += v;
  return clamp_probability(total);
}

}  // namespace mdbc::detail
