#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

#include "mdbc/error.hpp"
#include "mdbc/exact_oracle.hpp"
#include "mdbc/types.hpp"
#include "mdbc/window_model.hpp"

namespace mdbc {

/// SplitMix64 step; also used to key per-trial streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Random stream for one trial, a pure function of (seed, trial index).
class TrialStream {
 public:
  TrialStream(std::uint64_t seed, std::uint64_t trial) {
    std::uint64_t s = seed;
    const std::uint64_t a = splitmix64(s);
    std::uint64_t t = a ^ (trial * 0xD1B54A32D192ED03ULL);
    state_ = splitmix64(t);
  }

  std::uint64_t next() { return splitmix64(state_); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

/// 95% Wilson score interval for `successes` out of `trials`.
inline Interval wilson_interval(std::size_t successes, std::size_t trials,
                                double z = 1.959963984540054) {
  if (trials == 0) throw DomainError("Wilson interval needs at least one trial");
  const double n = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / n;
  const double center = (phat + z2 / (2.0 * n)) / denom;
  const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
  Interval out{clamp_probability(center - half), clamp_probability(center + half)};
  if (successes == 0) out.low = 0.0;
  if (successes == trials) out.high = 1.0;
  return out;
}

struct UnionEstimate {
  Probability estimate = 0.0;
  Probability ci_low = 0.0;
  Probability ci_high = 0.0;
  std::size_t trials = 0;
  std::size_t hits = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Simulates X_a .. X_{b+m} for one trial and reports whether any window
// starting in [a, b] fires.
inline bool simulate_trial(const WindowModel& model, IndexRange range,
                           const std::vector<double>& cdf, TrialStream& rng) {
  const std::size_t s = model.alphabet_size();
  const std::size_t m = model.m();
  std::size_t top = 1;
  for (std::size_t t = 0; t < m; ++t) top *= s;

  auto draw = [&]() {
    const double u = rng.uniform();
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), s - 1);
  };

  // state holds the last m symbols, earliest in the least-significant digit.
  std::size_t state = 0;
  std::size_t scale = 1;
  for (std::size_t t = 0; t < m; ++t) {
    state += draw() * scale;
    scale *= s;
  }
  for (std::size_t k = range.first; k <= range.last; ++k) {
    const std::size_t window = state + draw() * top;
    if (model.fires(window)) return true;
    state = window / s;
  }
  return false;
}

}  // namespace detail

/// Monte Carlo estimate of P(union of A_k, k in range) for a window model,
/// with a 95% Wilson interval. The result is a deterministic function of
/// (model, range, trials, seed) for any `threads` value (0 = hardware).
inline UnionEstimate estimate_union(const WindowModel& model, IndexRange range,
                                    std::size_t trials, std::uint64_t seed,
                                    unsigned threads = 0) {
  if (trials < 1) throw DomainError("trials must be at least 1");
  detail::check_range(model, range);
  UnionEstimate out;
  out.trials = trials;
  out.seed = seed;
  if (range.empty()) return out;

  std::vector<double> cdf;
  double acc = 0.0;
  for (double p : model.symbol_dist()) cdf.push_back(acc += p);
  // Guard against sums slightly below 1: the last symbol takes the remainder.
  cdf.back() = 2.0;

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, trials));

  std::vector<std::size_t> hits(threads, 0);
  auto work = [&](unsigned worker) {
    // Contiguous, deterministic trial ranges per worker.
    const std::size_t begin = trials * worker / threads;
    const std::size_t end = trials * (worker + 1) / threads;
    std::size_t count = 0;
    for (std::size_t t = begin; t < end; ++t) {
      TrialStream rng(seed, t);
      count += detail::simulate_trial(model, range, cdf, rng);
    }
    hits[worker] = count;
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }

  for (std::size_t h : hits) out.hits += h;
  out.estimate = static_cast<double>(out.hits) / static_cast<double>(trials);
  const auto ci = wilson_interval(out.hits, trials);
  out.ci_low = ci.low;
  out.ci_high = ci.high;
  return out;
}

}  // namespace mdbc
