#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdbc/error.hpp"
#include "mdbc/types.hpp"

namespace mdbc {

/// A finite probability space with N events given as outcome subsets.
///
/// Outcomes are 0-based indices into `outcome_weights`; events are 1-based
/// (event k is `events()[k - 1]`). Each event is kept both as a sorted index
/// set and as a membership bit vector so that set sweeps are O(M).
/// The dependence range `m` is a claim only; nothing here assumes it holds.
class ExplicitEventFamily {
 public:
  ExplicitEventFamily(std::vector<double> outcome_weights,
                      std::vector<std::vector<std::size_t>> events,
                      std::size_t m)
      : weights_(std::move(outcome_weights)), events_(std::move(events)), m_(m) {
    double total = 0.0;
    for (double w : weights_) {
      if (!(w >= 0.0) || !std::isfinite(w)) {
        throw DomainError("outcome weights must be finite and nonnegative");
      }
      total += w;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw DomainError("outcome weights sum to " + std::to_string(total) +
                        ", expected 1");
    }
    membership_.reserve(events_.size());
    for (std::size_t k = 0; k < events_.size(); ++k) {
      auto& ev = events_[k];
      std::sort(ev.begin(), ev.end());
      ev.erase(std::unique(ev.begin(), ev.end()), ev.end());
      std::vector<bool> bits(weights_.size(), false);
      for (std::size_t o : ev) {
        if (o >= weights_.size()) {
          throw IndexError("event " + std::to_string(k + 1) + " refers to outcome " +
                           std::to_string(o) + " outside [0, " +
                           std::to_string(weights_.size()) + ")");
        }
        bits[o] = true;
      }
      membership_.push_back(std::move(bits));
    }
  }

  std::size_t size() const { return events_.size(); }
  std::size_t m() const { return m_; }
  std::size_t outcome_count() const { return weights_.size(); }

  std::span<const double> outcome_weights() const { return weights_; }
  const std::vector<std::vector<std::size_t>>& events() const { return events_; }

  /// Whether outcome `o` belongs to event `k` (1-based, unchecked).
  bool contains(std::size_t k, std::size_t o) const { return membership_[k - 1][o]; }

  void check_index(std::size_t k) const {
    if (k < 1 || k > size()) {
      throw IndexError("event index " + std::to_string(k) + " outside [1, " +
                       std::to_string(size()) + "]");
    }
  }

  /// Exact probability of the atom described by `constraints`.
  Probability constrained_prob(std::span<const EventConstraint> constraints) const {
    for (const auto& c : constraints) check_index(c.index);
    double total = 0.0;
    for (std::size_t o = 0; o < weights_.size(); ++o) {
      bool ok = true;
      for (const auto& c : constraints) {
        if (membership_[c.index - 1][o] != c.fires) {
          ok = false;
          break;
        }
      }
      if (ok) total += weights_[o];
    }
    return clamp_probability(total);
  }

 private:
  std::vector<double> weights_;
  std::vector<std::vector<std::size_t>> events_;
  std::vector<std::vector<bool>> membership_;
  std::size_t m_;
};

}  // namespace mdbc
