#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "mdbc/detail/window_dp.hpp"
#include "mdbc/error.hpp"
#include "mdbc/types.hpp"

namespace mdbc {

/// s^e, throwing when it does not fit in size_t.
inline std::size_t checked_pow(std::size_t s, std::size_t e) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < e; ++i) {
    if (s != 0 && out > std::numeric_limits<std::size_t>::max() / s) {
      throw SizeCapError("alphabet_size^" + std::to_string(e) + " overflows");
    }
    out *= s;
  }
  return out;
}

/// Events driven by a predicate on sliding windows of an i.i.d. symbol
/// stream X_1, X_2, ... over {0..s-1}.
///
/// Event k (1 <= k <= horizon) fires when the predicate holds on the window
/// (X_k, ..., X_{k+m}). The predicate table is indexed by
/// sum_t x_t * s^t with offset t = 0 the earliest symbol (least-significant
/// digit). Windows more than m apart share no symbols, so the family is
/// m-dependent by construction.
class WindowModel {
 public:
  WindowModel(std::size_t alphabet_size, std::vector<double> symbol_dist,
              std::size_t m, std::vector<bool> predicate_table, std::size_t horizon)
      : s_(alphabet_size), dist_(std::move(symbol_dist)), m_(m), horizon_(horizon) {
    if (s_ < 2) throw DomainError("alphabet_size must be at least 2");
    if (dist_.size() != s_) {
      throw DomainError("symbol_dist has " + std::to_string(dist_.size()) +
                        " entries, expected alphabet_size = " + std::to_string(s_));
    }
    double total = 0.0;
    for (double p : dist_) {
      if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("symbol_dist entries must be finite and nonnegative");
      }
      total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
      throw DomainError("symbol_dist sums to " + std::to_string(total) + ", expected 1");
    }
    const std::size_t expected = checked_pow(s_, m_ + 1);
    if (predicate_table.size() != expected) {
      throw DomainError("predicate_table has " + std::to_string(predicate_table.size()) +
                        " entries, expected alphabet_size^(m+1) = " +
                        std::to_string(expected));
    }
    table_.assign(predicate_table.begin(), predicate_table.end());

    double p = 0.0;
    for (std::size_t w = 0; w < table_.size(); ++w) {
      if (!table_[w]) continue;
      double weight = 1.0;
      std::size_t code = w;
      for (std::size_t t = 0; t <= m_; ++t) {
        weight *= dist_[code % s_];
        code /= s_;
      }
      p += weight;
    }
    event_prob_ = clamp_probability(p);
  }

  std::size_t size() const { return horizon_; }
  std::size_t m() const { return m_; }
  std::size_t alphabet_size() const { return s_; }
  std::size_t window_length() const { return m_ + 1; }
  std::span<const double> symbol_dist() const { return dist_; }
  std::span<const std::uint8_t> predicate_table() const { return table_; }

  bool fires(std::size_t window_code) const { return table_[window_code] != 0; }

  /// P(A_k); identical for every k.
  Probability event_prob() const { return event_prob_; }

  /// The same model with a different horizon.
  WindowModel with_horizon(std::size_t horizon) const {
    WindowModel copy = *this;
    copy.horizon_ = horizon;
    return copy;
  }

  void check_index(std::size_t k) const {
    if (k < 1 || k > horizon_) {
      throw IndexError("event index " + std::to_string(k) + " outside [1, " +
                       std::to_string(horizon_) + "]");
    }
  }

  /// Exact probability of the atom described by `constraints`, by the
  /// sliding-window dynamic program over the symbols the constraints touch.
  Probability constrained_prob(std::span<const EventConstraint> constraints) const {
    for (const auto& c : constraints) check_index(c.index);
    return detail::window_constrained_prob(s_, dist_, m_, table_, constraints);
  }

 private:
  std::size_t s_;
  std::vector<double> dist_;
  std::size_t m_;
  std::vector<std::uint8_t> table_;
  std::size_t horizon_;
  Probability event_prob_ = 0.0;
};

}  // namespace mdbc
