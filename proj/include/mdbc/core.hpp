#pragma once

#include <array>
#include <concepts>
#include <cstddef>
#include <span>
#include <variant>

#include "mdbc/error.hpp"
#include "mdbc/explicit_family.hpp"
#include "mdbc/types.hpp"
#include "mdbc/window_model.hpp"

namespace mdbc {

/// A finite family of events A_1..A_N with a claimed dependence range that
/// can answer exact atom probabilities.
template <typename F>
concept EventFamily = requires(const F& f, std::size_t k,
                               std::span<const EventConstraint> constraints) {
  { f.size() } -> std::convertible_to<std::size_t>;
  { f.m() } -> std::convertible_to<std::size_t>;
  { f.check_index(k) };
  { f.constrained_prob(constraints) } -> std::convertible_to<Probability>;
};

/// Either representation, as loaded from a model file.
using AnyFamily = std::variant<ExplicitEventFamily, WindowModel>;

/// P(A_k), 1 <= k <= N.
inline Probability event_prob(const ExplicitEventFamily& family, std::size_t k) {
  family.check_index(k);
  double total = 0.0;
  const auto weights = family.outcome_weights();
  for (std::size_t o : family.events()[k - 1]) total += weights[o];
  return clamp_probability(total);
}

inline Probability event_prob(const WindowModel& model, std::size_t k) {
  model.check_index(k);
  return model.event_prob();
}

/// P(A_i and A_j).
template <EventFamily F>
Probability pair_prob(const F& family, std::size_t i, std::size_t j) {
  family.check_index(i);
  family.check_index(j);
  if (i == j) return event_prob(family, i);
  const std::array<EventConstraint, 2> both{{{i, true}, {j, true}}};
  return family.constrained_prob(both);
}

/// S_upto = sum_{k=1}^{upto} P(A_k); zero for upto = 0.
template <EventFamily F>
double partial_sum_s(const F& family, std::size_t upto) {
  if (upto > family.size()) {
    throw IndexError("partial sum bound " + std::to_string(upto) + " exceeds N = " +
                     std::to_string(family.size()));
  }
  double total = 0.0;
  for (std::size_t k = 1; k <= upto; ++k) total += event_prob(family, k);
  return total;
}

/// All N event probabilities, index k - 1 holding P(A_k).
template <EventFamily F>
std::vector<double> event_probs(const F& family) {
  std::vector<double> out(family.size());
  for (std::size_t k = 1; k <= family.size(); ++k) out[k - 1] = event_prob(family, k);
  return out;
}

/// T_{m-1}: sum of P(A_i and A_j) over 1 <= i < j <= N with j - i <= m - 1.
/// Exactly 0 for m = 1; undefined (DomainError) for m = 0.
template <EventFamily F>
double t_local(const F& family) {
  const std::size_t m = family.m();
  if (m == 0) throw DomainError("T_{m-1} requires m >= 1");
  double total = 0.0;
  const std::size_t n = family.size();
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n && j - i <= m - 1; ++j) {
      total += pair_prob(family, i, j);
    }
  }
  return total;
}

}  // namespace mdbc
