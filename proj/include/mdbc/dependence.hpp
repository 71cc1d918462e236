#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "mdbc/core.hpp"
#include "mdbc/error.hpp"
#include "mdbc/proof_steps.hpp"
#include "mdbc/verification_report.hpp"

namespace mdbc {

struct DependenceCheckOptions {
  std::size_t max_subset = 4;
  double tol = 1e-9;
  // Index sets are drawn from {1..index_limit}. 0 selects the default:
  // all of {1..N} for explicit families, and for window models (whose law is
  // shift-invariant) a prefix of length max_subset*(m+1)+1, which contains
  // every configuration of at most max_subset indices up to translation
  // whenever the gaps that matter are at most m+1.
  std::size_t index_limit = 0;
};

namespace detail {

inline std::size_t default_index_limit(const ExplicitEventFamily& family, std::size_t,
                                       std::size_t) {
  return family.size();
}

inline std::size_t default_index_limit(const WindowModel& model, std::size_t m,
                                       std::size_t max_subset) {
  return std::min(model.size(), max_subset * (m + 1) + 1);
}

inline void structural_certificate(const ExplicitEventFamily&, std::size_t,
                                   VerificationReport&) {}

inline void structural_certificate(const WindowModel& model, std::size_t m,
                                   VerificationReport& report) {
  // Events i, j read symbols i..i+w-1 and j..j+w-1; supports are disjoint
  // iff |i - j| > w - 1 = model.m(). Claimed range m certifies iff m >= model.m().
  report.add_ge("dependence", "window supports disjoint beyond claimed m",
                "m=" + std::to_string(m), static_cast<double>(m),
                static_cast<double>(model.m()));
}

inline std::size_t set_distance(const std::vector<std::size_t>& a,
                                const std::vector<std::size_t>& b) {
  std::size_t best = static_cast<std::size_t>(-1);
  for (std::size_t x : a) {
    for (std::size_t y : b) best = std::min(best, x > y ? x - y : y - x);
  }
  return best;
}

}  // namespace detail

/// Validates a claimed dependence range: for index sets I, J with
/// dist(I, J) > m and |I| + |J| <= max_subset, every atom of the algebra
/// generated by {A_i : i in I} must be independent of every atom generated by
/// {A_j : j in J}. Window models additionally get a structural certificate.
template <EventFamily F>
VerificationReport check_m_dependence(const F& family, std::size_t m,
                                      const DependenceCheckOptions& options = {}) {
  if (options.max_subset < 2) throw DomainError("max_subset must be at least 2");
  if (options.max_subset > 16) throw SizeCapError("max_subset above 16 is not supported");
  check_oracle_caps(family);

  VerificationReport report;
  report.tol = options.tol;
  detail::structural_certificate(family, m, report);
  const std::string name = "atoms factorize across distance > m";
  report.touch("dependence", name);

  const std::size_t limit = options.index_limit != 0
                                ? std::min(options.index_limit, family.size())
                                : detail::default_index_limit(family, m, options.max_subset);
  if (limit < family.size()) {
    report.notes.push_back("dependence: index sets drawn from {1.." + std::to_string(limit) + "}");
  }
  std::vector<std::size_t> universe(limit);
  for (std::size_t k = 0; k < limit; ++k) universe[k] = k + 1;

  detail::for_each_subset(universe, 2, options.max_subset, [&](const std::vector<std::size_t>& u) {
    const std::size_t size = u.size();
    // Some split must exist: the widest gap between consecutive members must exceed m.
    bool any_gap = false;
    for (std::size_t i = 1; i < size; ++i) any_gap |= u[i] - u[i - 1] > m;
    if (!any_gap) return;

    // atoms[mask]: bit b of mask says whether u[b] fires.
    const std::size_t atoms_count = std::size_t{1} << size;
    std::vector<double> atoms(atoms_count);
    std::vector<EventConstraint> constraints(size);
    for (std::size_t mask = 0; mask < atoms_count; ++mask) {
      for (std::size_t b = 0; b < size; ++b) constraints[b] = {u[b], ((mask >> b) & 1) != 0};
      atoms[mask] = family.constrained_prob(constraints);
    }

    // Splits put u[0] in I; split bit b set means u[b] in J.
    for (std::size_t split = 2; split < atoms_count; split += 2) {
      std::vector<std::size_t> in_i, in_j;
      for (std::size_t b = 0; b < size; ++b) ((split >> b) & 1 ? in_j : in_i).push_back(u[b]);
      if (detail::set_distance(in_i, in_j) <= m) continue;

      const std::size_t i_bits = (atoms_count - 1) & ~split;
      std::vector<double> marg_i(atoms_count, 0.0), marg_j(atoms_count, 0.0);
      for (std::size_t mask = 0; mask < atoms_count; ++mask) {
        marg_i[mask & i_bits] += atoms[mask];
        marg_j[mask & split] += atoms[mask];
      }
      for (std::size_t mask = 0; mask < atoms_count; ++mask) {
        const double product = marg_i[mask & i_bits] * marg_j[mask & split];
        std::string where = "I=" + detail::index_set(in_i) + " J=" + detail::index_set(in_j) +
                            " pattern=";
        for (std::size_t b = 0; b < size; ++b) where += ((mask >> b) & 1) ? '1' : '0';
        report.add_eq("dependence", name, where, atoms[mask], product);
      }
    }
  });
  return report;
}

}  // namespace mdbc
