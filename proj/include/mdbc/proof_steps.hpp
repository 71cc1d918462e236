#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "mdbc/bounds.hpp"
#include "mdbc/core.hpp"
#include "mdbc/error.hpp"
#include "mdbc/exact_oracle.hpp"
#include "mdbc/partitions.hpp"
#include "mdbc/verification_report.hpp"

namespace mdbc {

/// Knobs for verify_proof_steps.
struct ProofCheckOptions {
  double tol = 1e-9;
  // Largest subset of a residue class whose joint complement probability is
  // checked for factorization in step (a).
  std::size_t max_subset = 3;
  // Step (a) draws subsets from the first `class_prefix` members of each class.
  std::size_t class_prefix = 12;
  // Step (c) pairs blocks among the first `block_prefix` blocks of each shift.
  std::size_t block_prefix = 24;
};

inline constexpr std::size_t kMaxWindowStates = std::size_t{1} << 16;
inline constexpr std::size_t kMaxWindowHorizon = 10000;
inline constexpr std::size_t kMaxExplicitOutcomes = std::size_t{1} << 20;

inline void check_oracle_caps(const WindowModel& model) {
  if (model.predicate_table().size() > kMaxWindowStates) {
    throw SizeCapError("window model has s^(m+1) = " +
                       std::to_string(model.predicate_table().size()) +
                       " > 2^16 window states");
  }
  if (model.size() > kMaxWindowHorizon) {
    throw SizeCapError("window model horizon " + std::to_string(model.size()) +
                       " exceeds 10^4");
  }
}

inline void check_oracle_caps(const ExplicitEventFamily& family) {
  if (family.outcome_count() > kMaxExplicitOutcomes) {
    throw SizeCapError("explicit family has " + std::to_string(family.outcome_count()) +
                       " > 2^20 outcomes");
  }
}

namespace detail {

inline std::string index_set(const std::vector<std::size_t>& indices) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
  os << '}';
  return os.str();
}

inline std::string range_text(IndexRange r) {
  std::ostringstream os;
  os << '[' << r.first << ',' << r.last << ']';
  return os.str();
}

// Calls fn on every subset of `items` with size in [lo, hi], in lexicographic order.
inline void for_each_subset(const std::vector<std::size_t>& items, std::size_t lo,
                            std::size_t hi,
                            const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> current;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (current.size() >= lo) fn(current);
    if (current.size() == hi) return;
    for (std::size_t i = start; i < items.size(); ++i) {
      current.push_back(items[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
}

template <EventFamily F>
double within_block_pair_sum(const F& family, IndexRange block) {
  double total = 0.0;
  for (std::size_t i = block.first; !block.empty() && i <= block.last; ++i) {
    for (std::size_t l = i + 1; l <= block.last; ++l) total += pair_prob(family, i, l);
  }
  return total;
}

}  // namespace detail

/// Checks every intermediate inequality of the residue-class and
/// shifted-block arguments against exact oracles:
///   (a) factorization of joint complements inside each residue class,
///   (b) class complement <= product <= exp(-mass), and the mass pigeonhole,
///   (c) 1-dependence of block events at block distance >= 2,
///   (d) second-order Bonferroni inside each block,
///   (e) the m - d pair count across shifts (brute force),
///   (f) the parity, averaging and max-over-shifts chain,
///   (g) exact union against both closed-form bounds.
/// Steps (c)-(f) need m >= 1 and are skipped for m = 0.
template <EventFamily F>
VerificationReport verify_proof_steps(const F& family, const ProofCheckOptions& options = {}) {
  check_oracle_caps(family);
  VerificationReport report;
  report.tol = options.tol;

  const std::size_t n = family.size();
  const std::size_t m = family.m();
  const std::vector<double> p = event_probs(family);
  double s_n = 0.0;
  for (double v : p) s_n += v;
  const Probability union_all = union_prob(family);
  const Probability none = complement_intersection_prob(family, IndexRange{1, n}.indices());

  // (a) and (b): residue classes.
  const auto classes = residue_classes(n, m);
  report.touch("a", "residue-class joint complement factorizes");
  report.touch("b", "class complement <= product of complements");
  report.touch("b", "product of complements <= exp(-class mass)");
  report.touch("b", "complement of union <= class complement");
  double max_class_mass = 0.0;
  for (std::size_t r = 0; r < classes.classes.size(); ++r) {
    const auto& members = classes.classes[r];
    const std::string label = "J_" + std::to_string(r + 1);

    std::vector<std::size_t> prefix(members.begin(),
                                    members.begin() + std::min(members.size(), options.class_prefix));
    if (prefix.size() < members.size() && r == 0) {
      report.notes.push_back("step a: subsets drawn from the first " +
                             std::to_string(options.class_prefix) + " members of each class");
    }
    detail::for_each_subset(prefix, 2, options.max_subset, [&](const std::vector<std::size_t>& sub) {
      double product = 1.0;
      for (std::size_t k : sub) product *= 1.0 - p[k - 1];
      report.add_eq("a", "residue-class joint complement factorizes",
                    label + " " + detail::index_set(sub),
                    complement_intersection_prob(family, sub), product);
    });

    double product = 1.0;
    double mass = 0.0;
    for (std::size_t k : members) {
      product *= 1.0 - p[k - 1];
      mass += p[k - 1];
    }
    max_class_mass = std::max(max_class_mass, mass);
    const Probability class_none = complement_intersection_prob(family, members);
    report.add_le("b", "class complement <= product of complements", label, class_none, product);
    report.add_le("b", "product of complements <= exp(-class mass)", label, product,
                  std::exp(-mass));
    report.add_le("b", "complement of union <= class complement", label, none, class_none);
  }
  report.add_ge("b", "max class mass >= S_N/(m+1)", "all classes", max_class_mass,
                s_n / static_cast<double>(m + 1));

  if (m == 0) {
    report.notes.push_back("m = 0: shifted-block steps c-f skipped");
  } else {
    report.touch("c", "block events at distance >= 2 are independent");
    report.touch("d", "Bonferroni lower bound on block event");
    report.touch("e", "pair shift count equals m - d");
    report.touch("f", "complement of union <= min parity product");
    report.touch("f", "min parity product <= exp(-X_r/2)");
    report.touch("f", "complement of union <= exp(-X_r/2)");

    double x_sum = 0.0;
    double x_max = 0.0;
    double within_pairs_total = 0.0;
    std::vector<std::vector<std::size_t>> block_of(m, std::vector<std::size_t>(n + 1, 0));
    bool noted_block_cap = false;

    for (std::size_t r = 0; r < m; ++r) {
      const auto partition = shifted_blocks(n, m, r);
      const std::string shift = "r=" + std::to_string(r);
      const auto& blocks = partition.blocks;
      // Block label j: blocks[0] is I_0 only when the shift produced one.
      const std::size_t j_offset = r > 0 ? 0 : 1;

      std::vector<Probability> block_p(blocks.size());
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        block_p[b] = block_event_prob(family, blocks[b]);
        for (std::size_t k = blocks[b].first; k <= blocks[b].last; ++k) block_of[r][k] = b;
      }

      // (c)
      const std::size_t limit = std::min(blocks.size(), options.block_prefix);
      if (limit < blocks.size() && !noted_block_cap) {
        report.notes.push_back("step c: block pairs drawn from the first " +
                               std::to_string(options.block_prefix) + " blocks of each shift");
        noted_block_cap = true;
      }
      for (std::size_t b = 0; b < limit; ++b) {
        for (std::size_t b2 = b + 2; b2 < limit; ++b2) {
          auto joint = blocks[b].indices();
          const auto second = blocks[b2].indices();
          joint.insert(joint.end(), second.begin(), second.end());
          report.add_eq("c", "block events at distance >= 2 are independent",
                        shift + " I_" + std::to_string(b + j_offset) + " I_" +
                            std::to_string(b2 + j_offset),
                        complement_intersection_prob(family, joint),
                        (1.0 - block_p[b]) * (1.0 - block_p[b2]));
        }
      }

      // (d)
      double x_r = 0.0;
      double odd = 1.0;
      double even = 1.0;
      for (std::size_t b = 0; b < blocks.size(); ++b) {
        double single = 0.0;
        for (std::size_t k = blocks[b].first; k <= blocks[b].last; ++k) single += p[k - 1];
        const double pairs = detail::within_block_pair_sum(family, blocks[b]);
        within_pairs_total += pairs;
        report.add_ge("d", "Bonferroni lower bound on block event",
                      shift + " I_" + std::to_string(b + j_offset) + " " +
                          detail::range_text(blocks[b]),
                      block_p[b], single - pairs);
        x_r += block_p[b];
        ((b + j_offset) % 2 == 1 ? odd : even) *= 1.0 - block_p[b];
      }

      // (f), per shift
      const double parity_min = std::min(odd, even);
      report.add_le("f", "complement of union <= min parity product", shift, none, parity_min);
      report.add_le("f", "min parity product <= exp(-X_r/2)", shift, parity_min,
                    std::exp(-0.5 * x_r));
      report.add_le("f", "complement of union <= exp(-X_r/2)", shift, 1.0 - union_all,
                    std::exp(-0.5 * x_r));
      x_sum += x_r;
      x_max = std::max(x_max, x_r);
    }

    // (e): brute-force shift membership against the closed form.
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t l = i + 1; l <= n && l - i <= m; ++l) {
        std::size_t together = 0;
        for (std::size_t r = 0; r < m; ++r) together += block_of[r][i] == block_of[r][l];
        const std::size_t d = l - i;
        const std::size_t expected = d <= m - 1 ? m - d : 0;
        const std::string where = "(" + std::to_string(i) + "," + std::to_string(l) + ")";
        report.add_eq("e", "pair shift count equals m - d", where,
                      static_cast<double>(together), static_cast<double>(expected));
        report.add_eq("e", "pair_shift_count matches brute force", where,
                      static_cast<double>(pair_shift_count(i, l, m)),
                      static_cast<double>(together));
      }
    }

    // (f), averaged over shifts
    const double md = static_cast<double>(m);
    const double t = t_local(family);
    const double x_mean = x_sum / md;
    report.add_ge("f", "mean block sum >= S_N - mean within-block pairs", "all shifts", x_mean,
                  s_n - within_pairs_total / md);
    report.add_le("f", "mean within-block pairs <= T_{m-1}", "all shifts",
                  within_pairs_total / md, t);
    report.add_ge("f", "mean block sum >= S_N - T_{m-1}", "all shifts", x_mean, s_n - t);
    report.add_ge("f", "max_r X_r >= mean X_r", "all shifts", x_max, x_mean);
    report.add_le("f", "complement of union <= exp(-mean X_r/2)", "all shifts", 1.0 - union_all,
                  std::exp(-0.5 * x_mean));
  }

  // (g)
  report.add_ge("g", "exact union >= baseline bound", "[1,N]", union_all, thm1_bound(s_n, m));
  if (m >= 1) {
    report.add_ge("g", "exact union >= second-order bound", "[1,N]", union_all,
                  thm2_bound(s_n, t_local(family), m).bound);
  }
  return report;
}

}  // namespace mdbc
