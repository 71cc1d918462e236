#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mdbc/core.hpp"
#include "mdbc/error.hpp"
#include "mdbc/exact_oracle.hpp"
#include "mdbc/types.hpp"

namespace mdbc {

/// Baseline lower bound 1 - exp(-S_N / (m + 1)) on P(A_1 or ... or A_N).
/// m = 0 gives the independent-case bound 1 - exp(-S_N).
inline Probability thm1_bound(double s_n, std::size_t m) {
  if (!(s_n >= 0.0)) throw DomainError("S_N must be nonnegative");
  return clamp_probability(-std::expm1(-s_n / static_cast<double>(m + 1)));
}

inline double thm1_exponent(double s_n, std::size_t m) {
  return s_n / static_cast<double>(m + 1);
}

struct SecondOrderBound {
  double exponent = 0.0;  // (S_N - T_{m-1}) / 2, may be negative
  Probability bound = 0.0;
};

/// Second-order bound 1 - exp(-(S_N - T_{m-1}) / 2), clamped to 0 when the
/// exponent is negative. Requires m >= 1.
inline SecondOrderBound thm2_bound(double s_n, double t, std::size_t m) {
  if (m == 0) throw DomainError("the second-order bound requires m >= 1");
  if (!(s_n >= 0.0)) throw DomainError("S_N must be nonnegative");
  if (!(t >= 0.0)) throw DomainError("T_{m-1} must be nonnegative");
  SecondOrderBound out;
  out.exponent = 0.5 * (s_n - t);
  out.bound = out.exponent >= 0.0 ? clamp_probability(-std::expm1(-out.exponent)) : 0.0;
  return out;
}

/// True iff T_{m-1} < (m-1)/(m+1) * S_N, i.e. the second-order exponent is
/// strictly larger than the baseline one. Ties are false.
inline bool thm2_sharper(double s_n, double t, std::size_t m) {
  if (m == 0) throw DomainError("the comparison requires m >= 1");
  const double md = static_cast<double>(m);
  return t < (md - 1.0) / (md + 1.0) * s_n;
}

/// Minimal threshold function: phi(n) = least t with S_t >= n, for the
/// n = 1, 2, ... that the family's total mass reaches.
class ThresholdFunction {
 public:
  ThresholdFunction() = default;
  explicit ThresholdFunction(std::vector<std::size_t> values) : values_(std::move(values)) {}

  bool empty() const { return values_.empty(); }
  /// Largest n with phi(n) defined (0 when none).
  std::size_t max_defined() const { return values_.size(); }
  bool defined(std::size_t n) const { return n >= 1 && n <= values_.size(); }

  std::size_t operator()(std::size_t n) const {
    if (!defined(n)) {
      throw DomainError("phi(" + std::to_string(n) + ") is undefined; total mass reaches only " +
                        std::to_string(values_.size()));
    }
    return values_[n - 1];
  }

  const std::vector<std::size_t>& values() const { return values_; }

 private:
  std::vector<std::size_t> values_;
};

template <EventFamily F>
ThresholdFunction build_phi(const F& family) {
  std::vector<std::size_t> values;
  double prefix = 0.0;
  for (std::size_t t = 1; t <= family.size(); ++t) {
    prefix += event_prob(family, t);
    while (prefix >= static_cast<double>(values.size() + 1)) values.push_back(t);
  }
  return ThresholdFunction(std::move(values));
}

struct WindowBound {
  IndexRange indices;  // {i+1 .. phi(i + window_n)}
  Probability bound = 0.0;
  double window_mass = 0.0;  // sum of P(A_k) over the window
  bool mass_check = false;   // window_mass >= window_n (within kBoundSlack)
};

/// Windowed bound: P(union over {i+1..phi(i+window_n)}) >= 1 - exp(-window_n/(m+1)).
template <EventFamily F>
WindowBound corollary_window(const F& family, const ThresholdFunction& phi, std::size_t i,
                             std::size_t window_n) {
  if (window_n < 1) throw DomainError("window_n must be at least 1");
  const std::size_t target = i + window_n;
  if (!phi.defined(target)) {
    throw DomainError("phi(" + std::to_string(target) + ") is undefined: window needs total mass " +
                      std::to_string(target) + " but S_N reaches only " +
                      std::to_string(phi.max_defined()) + " whole units (deficit " +
                      std::to_string(target - phi.max_defined()) + ")");
  }
  WindowBound out;
  out.indices = IndexRange{i + 1, phi(target)};
  out.bound = thm1_bound(static_cast<double>(window_n), family.m());
  for (std::size_t k = out.indices.first; k <= out.indices.last; ++k) {
    out.window_mass += event_prob(family, k);
  }
  out.mass_check = out.window_mass >= static_cast<double>(window_n) - kBoundSlack;
  return out;
}

/// Closed-form and (optionally) exact / simulated quantities for one family.
struct MonteCarloSummary {
  Probability estimate = 0.0;
  Probability ci_low = 0.0;
  Probability ci_high = 0.0;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
};

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  double s_n = 0.0;
  double t_local = 0.0;  // 0 and meaningless when m = 0
  double thm1_exponent = 0.0;
  Probability thm1_bound = 0.0;
  std::optional<double> thm2_exponent;
  std::optional<Probability> thm2_bound;
  std::optional<bool> thm2_sharper;
  std::optional<Probability> exact_union;
  std::optional<MonteCarloSummary> mc_union;
};

/// Fills the closed-form part of a report and, if `exact`, the oracle union.
template <EventFamily F>
BoundReport make_bound_report(const F& family, bool exact) {
  BoundReport r;
  r.n = family.size();
  r.m = family.m();
  r.s_n = partial_sum_s(family, r.n);
  r.thm1_exponent = thm1_exponent(r.s_n, r.m);
  r.thm1_bound = thm1_bound(r.s_n, r.m);
  if (r.m >= 1) {
    r.t_local = t_local(family);
    const auto second = thm2_bound(r.s_n, r.t_local, r.m);
    r.thm2_exponent = second.exponent;
    r.thm2_bound = second.bound;
    r.thm2_sharper = thm2_sharper(r.s_n, r.t_local, r.m);
  }
  if (exact) r.exact_union = union_prob(family);
  return r;
}

}  // namespace mdbc
