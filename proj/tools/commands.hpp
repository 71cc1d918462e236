#pragma once

// Verb implementations for the mdbc command-line tool. Each returns the
// process exit code: 0 success / all checks pass, 1 verification failure,
// 2 usage or schema error (thrown as mdbc::Error and mapped by the caller).

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <ostream>
#include <string>
#include <utility>
#include <variant>

#include "mdbc/mdbc.hpp"
#include "mdbc/io/json.hpp"
#include "mdbc/sweep.hpp"

namespace mdbc::cli {

using io::json;

struct CommonOptions {
  bool exact = false;
  std::optional<std::pair<std::size_t, std::uint64_t>> mc;
  std::size_t max_subset = 4;
  double tol = 1e-9;
  std::string out_path;
};

// Writes to --out when given, else to `fallback`.
inline void emit(const std::string& text, const CommonOptions& options, std::ostream& fallback) {
  if (options.out_path.empty()) {
    fallback << text;
    return;
  }
  std::ofstream file(options.out_path);
  if (!file) throw DomainError("cannot open output file '" + options.out_path + "'");
  file << text;
}

inline int cmd_report(const AnyFamily& family, const CommonOptions& options, std::ostream& out) {
  BoundReport report = std::visit(
      [&](const auto& f) {
        if (options.exact) check_oracle_caps(f);
        return make_bound_report(f, options.exact);
      },
      family);
  if (options.mc) {
    const auto* model = std::get_if<WindowModel>(&family);
    if (model == nullptr) {
      throw DomainError("--mc applies to window models only; explicit families are exact");
    }
    const auto e = estimate_union(*model, IndexRange{1, model->size()}, options.mc->first,
                                  options.mc->second);
    report.mc_union = MonteCarloSummary{e.estimate, e.ci_low, e.ci_high, e.trials, e.seed};
  }
  emit(io::to_json(report).dump(2) + "\n", options, out);
  return 0;
}

inline int cmd_verify(const AnyFamily& family, const CommonOptions& options, std::ostream& out) {
  ProofCheckOptions proof;
  proof.tol = options.tol;
  DependenceCheckOptions dep;
  dep.max_subset = options.max_subset;
  dep.tol = options.tol;

  const auto [steps, dependence] = std::visit(
      [&](const auto& f) {
        return std::pair{verify_proof_steps(f, proof), check_m_dependence(f, f.m(), dep)};
      },
      family);
  const bool passed = steps.passed() && dependence.passed();
  const json doc = {{"passed", passed},
                    {"proof_steps", io::to_json(steps)},
                    {"dependence", io::to_json(dependence)}};
  emit(doc.dump(2) + "\n", options, out);
  return passed ? 0 : 1;
}

inline int cmd_sweep(const AnyFamily& family, const std::string& sweep_text,
                     const CommonOptions& options, std::ostream& out) {
  const auto* model = std::get_if<WindowModel>(&family);
  if (model == nullptr) throw DomainError("sweep templates must be window models");
  const SweepSpec spec = parse_sweep_spec(sweep_text);
  std::ostringstream csv;
  write_sweep_csv(*model, spec, SweepOptions{options.exact, options.mc}, csv);
  emit(csv.str(), options, out);
  return 0;
}

inline int cmd_window(const AnyFamily& family, std::size_t i, std::size_t window_n,
                      const CommonOptions& options, std::ostream& out) {
  const json doc = std::visit(
      [&](const auto& f) {
        check_oracle_caps(f);
        const auto phi = build_phi(f);
        const auto w = corollary_window(f, phi, i, window_n);
        const Probability exact = union_prob(f, w.indices);
        json j = io::to_json(w, i, window_n, f.m());
        j["exact_union"] = io::round12(exact);
        j["exact_ge_bound"] = exact >= w.bound - kBoundSlack;
        return j;
      },
      family);
  emit(doc.dump(2) + "\n", options, out);
  return 0;
}

inline int cmd_mc(const AnyFamily& family, std::size_t trials, std::uint64_t seed,
                  std::optional<IndexRange> range, unsigned threads, const CommonOptions& options,
                  std::ostream& out) {
  const auto* model = std::get_if<WindowModel>(&family);
  if (model == nullptr) throw DomainError("mc applies to window models only");
  const IndexRange r = range.value_or(IndexRange{1, model->size()});
  const auto e = estimate_union(*model, r, trials, seed, threads);
  json doc = io::to_json(e);
  doc["range"] = {r.first, r.last};
  if (options.exact) doc["exact_union"] = io::round12(union_prob(*model, r));
  emit(doc.dump(2) + "\n", options, out);
  return 0;
}

}  // namespace mdbc::cli
