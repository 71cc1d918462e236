#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "mdbc/bounds.hpp"
#include "mdbc/error.hpp"
#include "mdbc/io/json.hpp"
#include "mdbc/montecarlo.hpp"
#include "mdbc/window_model.hpp"

namespace mdbc {

/// A parsed `name=start..stop[:step]` sweep.
///
/// Parameters: `horizon` and `m` (integers, default step 1) and `p<c>`, the
/// probability of symbol c (default step 0.1; the other symbols are rescaled
/// to keep their relative weights).
struct SweepSpec {
  enum class Kind { Horizon, M, SymbolProb };
  Kind kind = Kind::Horizon;
  std::string name;
  std::size_t symbol = 0;
  double start = 0.0;
  double stop = 0.0;
  double step = 1.0;

  std::vector<double> points() const {
    std::vector<double> out;
    if (start > stop) return out;
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + static_cast<double>(i) * step);
    return out;
  }
};

inline SweepSpec parse_sweep_spec(const std::string& text) {
  const auto eq = text.find('=');
  const auto dots = text.find("..");
  if (eq == std::string::npos || dots == std::string::npos || dots < eq) {
    throw DomainError("sweep spec '" + text + "' is not of the form name=start..stop[:step]");
  }
  SweepSpec spec;
  spec.name = text.substr(0, eq);
  if (spec.name == "horizon") {
    spec.kind = SweepSpec::Kind::Horizon;
  } else if (spec.name == "m") {
    spec.kind = SweepSpec::Kind::M;
  } else if (spec.name.size() > 1 && spec.name[0] == 'p' &&
             spec.name.find_first_not_of("0123456789", 1) == std::string::npos) {
    spec.kind = SweepSpec::Kind::SymbolProb;
    spec.symbol = std::stoul(spec.name.substr(1));
    spec.step = 0.1;
  } else {
    throw DomainError("unknown sweep parameter '" + spec.name +
                      "' (expected horizon, m, or p<symbol>)");
  }
  const auto colon = text.find(':', dots);
  const std::string a = text.substr(eq + 1, dots - eq - 1);
  const std::string b = text.substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                                           : colon - dots - 2);
  try {
    std::size_t used = 0;
    spec.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    spec.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    if (colon != std::string::npos) {
      const std::string c = text.substr(colon + 1);
      spec.step = std::stod(c, &used);
      if (used != c.size()) throw std::invalid_argument(c);
    }
  } catch (const std::logic_error&) {
    throw DomainError("sweep spec '" + text + "' has a malformed number");
  }
  if (!(spec.step > 0.0)) throw DomainError("sweep step must be positive");
  if (spec.kind != SweepSpec::Kind::SymbolProb) {
    auto integral = [](double v) { return v >= 0.0 && std::floor(v) == v; };
    if (!integral(spec.start) || !integral(spec.stop) || !integral(spec.step)) {
      throw DomainError("sweep over '" + spec.name + "' needs nonnegative integer bounds and step");
    }
  } else if (spec.start < 0.0 || spec.stop > 1.0) {
    throw DomainError("symbol probabilities must lie in [0, 1]");
  }
  return spec;
}

/// Rebuilds a run predicate ("all m+1 symbols equal some c in C") for a new
/// m. Throws when the template's table is not of that form.
inline std::vector<bool> run_predicate_for(const WindowModel& model, std::size_t new_m) {
  const std::size_t s = model.alphabet_size();
  const std::size_t w = model.window_length();
  auto constant_code = [s](std::size_t c, std::size_t len) {
    std::size_t code = 0, scale = 1;
    for (std::size_t t = 0; t < len; ++t, scale *= s) code += c * scale;
    return code;
  };
  std::vector<bool> members(s, false);
  for (std::size_t c = 0; c < s; ++c) members[c] = model.fires(constant_code(c, w));
  for (std::size_t code = 0; code < model.predicate_table().size(); ++code) {
    bool constant = false;
    for (std::size_t c = 0; c < s; ++c) constant |= code == constant_code(c, w);
    if (!constant && model.fires(code)) {
      throw DomainError("sweeping m requires a run predicate (fires only on constant windows)");
    }
  }
  std::vector<bool> table(checked_pow(s, new_m + 1), false);
  for (std::size_t c = 0; c < s; ++c) {
    if (members[c]) table[constant_code(c, new_m + 1)] = true;
  }
  return table;
}

inline WindowModel apply_sweep_point(const WindowModel& base, const SweepSpec& spec, double value) {
  switch (spec.kind) {
    case SweepSpec::Kind::Horizon:
      return base.with_horizon(static_cast<std::size_t>(value));
    case SweepSpec::Kind::M: {
      const auto m = static_cast<std::size_t>(value);
      return WindowModel(base.alphabet_size(),
                         std::vector<double>(base.symbol_dist().begin(), base.symbol_dist().end()),
                         m, run_predicate_for(base, m), base.size());
    }
    case SweepSpec::Kind::SymbolProb: {
      if (spec.symbol >= base.alphabet_size()) {
        throw DomainError("sweep symbol " + std::to_string(spec.symbol) + " outside the alphabet");
      }
      std::vector<double> dist(base.symbol_dist().begin(), base.symbol_dist().end());
      double rest = 0.0;
      for (std::size_t c = 0; c < dist.size(); ++c) rest += c == spec.symbol ? 0.0 : dist[c];
      for (std::size_t c = 0; c < dist.size(); ++c) {
        if (c == spec.symbol) continue;
        dist[c] = rest > 0.0 ? dist[c] / rest * (1.0 - value)
                             : (1.0 - value) / static_cast<double>(dist.size() - 1);
      }
      dist[spec.symbol] = value;
      std::vector<bool> table;
      for (auto bit : base.predicate_table()) table.push_back(bit != 0);
      return WindowModel(base.alphabet_size(), std::move(dist), base.m(), std::move(table),
                         base.size());
    }
  }
  throw DomainError("unreachable sweep kind");
}

struct SweepOptions {
  bool exact = false;
  std::optional<std::pair<std::size_t, std::uint64_t>> mc;  // trials, seed
};

inline constexpr const char* kSweepHeader =
    "param,n,m,s_n,t_local,thm1_bound,thm2_bound,thm2_sharper,exact_union,mc_estimate,"
    "mc_ci_low,mc_ci_high";

/// Writes the sweep CSV: header plus one row per point, in increasing order.
inline void write_sweep_csv(const WindowModel& base, const SweepSpec& spec,
                            const SweepOptions& options, std::ostream& out) {
  using io::format12;
  out << kSweepHeader << '\n';
  for (double value : spec.points()) {
    const WindowModel model = apply_sweep_point(base, spec, value);
    const BoundReport r = make_bound_report(model, options.exact);
    out << format12(value) << ',' << r.n << ',' << r.m << ',' << format12(r.s_n) << ','
        << (r.m >= 1 ? format12(r.t_local) : "") << ',' << format12(r.thm1_bound) << ','
        << (r.thm2_bound ? format12(*r.thm2_bound) : "") << ','
        << (r.thm2_sharper ? (*r.thm2_sharper ? "true" : "false") : "") << ','
        << (r.exact_union ? format12(*r.exact_union) : "");
    if (options.mc) {
      const auto e = estimate_union(model, IndexRange{1, model.size()}, options.mc->first,
                                    options.mc->second);
      out << ',' << format12(e.estimate) << ',' << format12(e.ci_low) << ','
          << format12(e.ci_high);
    } else {
      out << ",,,";
    }
    out << '\n';
  }
}

}  // namespace mdbc
