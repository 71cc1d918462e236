#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace mdbc {

/// Aggregate of every instance of one named inequality or identity.
///
/// Slack is signed and oriented so that a check passes iff slack >= -tol:
/// lhs - rhs for "lhs >= rhs", rhs - lhs for "lhs <= rhs", and -|lhs - rhs|
/// for equalities.
struct CheckRecord {
  std::string step;  // proof-step label, e.g. "a" or "dependence"
  std::string name;
  std::size_t evaluated = 0;
  std::size_t failed = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  std::string worst_case;
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;

  bool passed() const { return failed == 0; }
};

/// One failing instance, kept for diagnostics.
struct Violation {
  std::string step;
  std::string name;
  std::string where;
  double lhs = 0.0;
  double rhs = 0.0;
  double slack = 0.0;
};

struct VerificationReport {
  double tol = 1e-9;
  std::vector<CheckRecord> checks;
  std::vector<Violation> violations;  // first kMaxViolations failures
  std::vector<std::string> notes;     // skipped steps, applied caps

  static constexpr std::size_t kMaxViolations = 100;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckRecord& c) { return c.passed(); });
  }

  std::size_t failures() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.failed;
    return n;
  }

  const CheckRecord* find(const std::string& step, const std::string& name) const {
    for (const auto& c : checks) {
      if (c.step == step && c.name == name) return &c;
    }
    return nullptr;
  }

  /// Returns (creating if needed) the record for (step, name). Records keep
  /// insertion order so reports are deterministic.
  CheckRecord& record(const std::string& step, const std::string& name) {
    for (auto& c : checks) {
      if (c.step == step && c.name == name) return c;
    }
    CheckRecord fresh;
    fresh.step = step;
    fresh.name = name;
    checks.push_back(std::move(fresh));
    return checks.back();
  }

  /// Registers a check that has no instances (vacuous pass).
  void touch(const std::string& step, const std::string& name) { record(step, name); }

  void add(const std::string& step, const std::string& name, const std::string& where,
           double lhs, double rhs, double slack) {
    CheckRecord& c = record(step, name);
    ++c.evaluated;
    if (slack < c.worst_slack) {
      c.worst_slack = slack;
      c.worst_case = where;
      c.worst_lhs = lhs;
      c.worst_rhs = rhs;
    }
    if (slack < -tol) {
      ++c.failed;
      if (violations.size() < kMaxViolations) {
        violations.push_back({step, name, where, lhs, rhs, slack});
      }
    }
  }

  /// lhs >= rhs
  void add_ge(const std::string& step, const std::string& name, const std::string& where,
              double lhs, double rhs) {
    add(step, name, where, lhs, rhs, lhs - rhs);
  }
  /// lhs <= rhs
  void add_le(const std::string& step, const std::string& name, const std::string& where,
              double lhs, double rhs) {
    add(step, name, where, lhs, rhs, rhs - lhs);
  }
  /// lhs == rhs
  void add_eq(const std::string& step, const std::string& name, const std::string& where,
              double lhs, double rhs) {
    add(step, name, where, lhs, rhs, -std::abs(lhs - rhs));
  }

  void merge(const VerificationReport& other) {
    for (const auto& c : other.checks) checks.push_back(c);
    for (const auto& v : other.violations) {
      if (violations.size() < kMaxViolations) violations.push_back(v);
    }
    for (const auto& n : other.notes) notes.push_back(n);
  }
};

}  // namespace mdbc
