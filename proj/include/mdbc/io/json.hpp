#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdbc/bounds.hpp"
#include "mdbc/core.hpp"
#include "mdbc/error.hpp"
#include "mdbc/montecarlo.hpp"
#include "mdbc/verification_report.hpp"

namespace mdbc::io {

using nlohmann::json;

/// Rounds to 12 significant digits so emitted numbers stay stable.
inline double round12(double v) {
  if (!std::isfinite(v) || v == 0.0) return v;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return std::strtod(buf, nullptr);
}

/// Formats a number with 12 significant digits (CSV cells).
inline std::string format12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace detail {

inline const json& require(const json& obj, const char* field) {
  const auto it = obj.find(field);
  if (it == obj.end()) throw SchemaError(std::string("missing required field '") + field + "'");
  return *it;
}

inline std::size_t as_count(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw SchemaError("field '" + where + "': expected a nonnegative integer, got " + v.dump());
  }
  return v.get<std::size_t>();
}

inline std::vector<double> as_reals(const json& v, const std::string& where) {
  if (!v.is_array()) throw SchemaError("field '" + where + "': expected an array of numbers");
  std::vector<double> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_number()) {
      throw SchemaError("field '" + where + "[" + std::to_string(i) + "]': expected a number, got " +
                        v[i].dump());
    }
    out.push_back(v[i].get<double>());
  }
  return out;
}

}  // namespace detail

/// Builds a family from a parsed model-spec document.
inline AnyFamily parse_model(const json& doc) {
  using detail::require;
  if (!doc.is_object()) throw SchemaError("model spec must be a JSON object");
  const json& type = require(doc, "type");
  if (!type.is_string()) throw SchemaError("field 'type': expected a string");
  const std::size_t m = detail::as_count(require(doc, "m"), "m");

  try {
    if (type == "explicit") {
      auto weights = detail::as_reals(require(doc, "outcome_weights"), "outcome_weights");
      const json& events = require(doc, "events");
      if (!events.is_array()) throw SchemaError("field 'events': expected an array of arrays");
      std::vector<std::vector<std::size_t>> sets;
      for (std::size_t k = 0; k < events.size(); ++k) {
        const std::string where = "events[" + std::to_string(k) + "]";
        if (!events[k].is_array()) throw SchemaError("field '" + where + "': expected an array");
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < events[k].size(); ++i) {
          set.push_back(detail::as_count(events[k][i], where + "[" + std::to_string(i) + "]"));
        }
        sets.push_back(std::move(set));
      }
      return ExplicitEventFamily(std::move(weights), std::move(sets), m);
    }
    if (type == "window") {
      const std::size_t s = detail::as_count(require(doc, "alphabet_size"), "alphabet_size");
      auto dist = detail::as_reals(require(doc, "symbol_dist"), "symbol_dist");
      const json& table = require(doc, "predicate_table");
      if (!table.is_array()) throw SchemaError("field 'predicate_table': expected an array of booleans");
      std::vector<bool> bits;
      bits.reserve(table.size());
      for (std::size_t i = 0; i < table.size(); ++i) {
        if (!table[i].is_boolean()) {
          throw SchemaError("field 'predicate_table[" + std::to_string(i) +
                            "]': expected a boolean, got " + table[i].dump());
        }
        bits.push_back(table[i].get<bool>());
      }
      const std::size_t horizon = detail::as_count(require(doc, "horizon"), "horizon");
      return WindowModel(s, std::move(dist), m, std::move(bits), horizon);
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const Error& e) {
    throw SchemaError(e.what());
  }
  throw SchemaError("field 'type': expected \"explicit\" or \"window\", got " + type.dump());
}

inline json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // nlohmann messages carry "at line L, column C".
    throw SchemaError(source + ": " + e.what());
  }
}

inline AnyFamily load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    return parse_model(parse_json_text(buffer.str(), path));
  } catch (const SchemaError& e) {
    const std::string what = e.what();
    if (what.rfind(path, 0) == 0) throw;
    throw SchemaError(path + ": " + what);
  }
}

inline json model_to_json(const ExplicitEventFamily& family) {
  json events = json::array();
  for (const auto& ev : family.events()) events.push_back(ev);
  return {{"type", "explicit"},
          {"m", family.m()},
          {"outcome_weights", std::vector<double>(family.outcome_weights().begin(),
                                                  family.outcome_weights().end())},
          {"events", events}};
}

inline json model_to_json(const WindowModel& model) {
  std::vector<bool> table;
  for (auto bit : model.predicate_table()) table.push_back(bit != 0);
  return {{"type", "window"},
          {"m", model.m()},
          {"alphabet_size", model.alphabet_size()},
          {"symbol_dist",
           std::vector<double>(model.symbol_dist().begin(), model.symbol_dist().end())},
          {"predicate_table", table},
          {"horizon", model.size()}};
}

inline json model_to_json(const AnyFamily& family) {
  return std::visit([](const auto& f) { return model_to_json(f); }, family);
}

inline json to_json(const UnionEstimate& e) {
  return {{"estimate", round12(e.estimate)}, {"ci_low", round12(e.ci_low)},
          {"ci_high", round12(e.ci_high)},   {"trials", e.trials},
          {"hits", e.hits},                  {"seed", e.seed}};
}

inline json to_json(const BoundReport& r) {
  json out = {{"n", r.n},
              {"m", r.m},
              {"s_n", round12(r.s_n)},
              {"thm1_exponent", round12(r.thm1_exponent)},
              {"thm1_bound", round12(r.thm1_bound)}};
  out["t_local"] = r.m >= 1 ? json(round12(r.t_local)) : json(nullptr);
  out["thm2_exponent"] = r.thm2_exponent ? json(round12(*r.thm2_exponent)) : json(nullptr);
  out["thm2_bound"] = r.thm2_bound ? json(round12(*r.thm2_bound)) : json(nullptr);
  out["thm2_sharper"] = r.thm2_sharper ? json(*r.thm2_sharper) : json(nullptr);
  out["exact_union"] = r.exact_union ? json(round12(*r.exact_union)) : json(nullptr);
  if (r.mc_union) {
    out["mc_union"] = {{"estimate", round12(r.mc_union->estimate)},
                       {"ci_low", round12(r.mc_union->ci_low)},
                       {"ci_high", round12(r.mc_union->ci_high)},
                       {"trials", r.mc_union->trials},
                       {"seed", r.mc_union->seed}};
  } else {
    out["mc_union"] = nullptr;
  }
  return out;
}

inline json to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    checks.push_back({{"step", c.step},
                      {"name", c.name},
                      {"evaluated", c.evaluated},
                      {"failed", c.failed},
                      {"passed", c.passed()},
                      {"worst_slack", c.evaluated ? json(round12(c.worst_slack)) : json(nullptr)},
                      {"worst_case", c.worst_case},
                      {"worst_lhs", round12(c.worst_lhs)},
                      {"worst_rhs", round12(c.worst_rhs)}});
  }
  json violations = json::array();
  for (const auto& v : report.violations) {
    violations.push_back({{"step", v.step},
                          {"name", v.name},
                          {"where", v.where},
                          {"lhs", round12(v.lhs)},
                          {"rhs", round12(v.rhs)},
                          {"slack", round12(v.slack)}});
  }
  return {{"passed", report.passed()}, {"tol", report.tol},   {"failures", report.failures()},
          {"checks", checks},          {"violations", violations}, {"notes", report.notes}};
}

inline json to_json(const WindowBound& w, std::size_t i, std::size_t window_n, std::size_t m) {
  return {{"i", i},
          {"window_n", window_n},
          {"m", m},
          {"indices", {w.indices.first, w.indices.last}},
          {"bound", round12(w.bound)},
          {"window_mass", round12(w.window_mass)},
          {"mass_check", w.mass_check}};
}

}  // namespace mdbc::io
