// Copyright 2026 The mimocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Configuration ingestion, command implementations and report rendering.
// Every command returns a ReportTable; rendering is separate so the same rows
// can be emitted as CSV, JSON or an aligned text table.

#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <fstream>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mimocc/core.hpp"
#include "mimocc/phantom.hpp"
#include "mimocc/policies.hpp"
#include "mimocc/reference_tables.hpp"
#include "mimocc/sched.hpp"
#include "mimocc/strategies.hpp"

namespace mimocc::cli {

// ---------------------------------------------------------------------------
// Configuration

/// Unvalidated configuration as read from disk; sweeps edit this and re-validate per point.
struct RawConfig {
  std::int64_t tx_gain = 0;
  Rational cache_ratio;
  std::vector<UserGroup> groups;

  NetworkConfig validate() const { return validate_config(tx_gain, cache_ratio, groups); }
};

namespace detail {

inline std::pair<std::size_t, std::size_t> line_col(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

inline std::int64_t positive_int(const nlohmann::json& j, const std::string& field) {
  if (!j.is_number_integer()) throw Error(ErrorCode::ParseError, "field '" + field + "' must be an integer");
  return j.get<std::int64_t>();
}

}  // namespace detail

/// Parses `{"L": int, "gamma": "p/q" | "0.04" | number, "groups": [{"count": int, "antennas": int}, ...]}`.
inline RawConfig parse_raw_config(std::string_view text, std::string_view source = "<config>") {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    auto [line, col] = detail::line_col(text, e.byte > 0 ? e.byte - 1 : 0);
    throw Error(ErrorCode::ParseError, std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(col) +
                                           ": malformed JSON");
  }
  auto where = [&](const std::string& field) { return std::string(source) + ": field '" + field + "'"; };
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, std::string(source) + ": top level must be an object");
  for (const char* key : {"L", "gamma", "groups"})
    if (!doc.contains(key)) throw Error(ErrorCode::ParseError, where(key) + " is missing");

  RawConfig raw;
  raw.tx_gain = detail::positive_int(doc["L"], "L");
  const auto& gamma = doc["gamma"];
  if (gamma.is_string())
    raw.cache_ratio = parse_rational(gamma.get<std::string>());
  else if (gamma.is_number())
    raw.cache_ratio = parse_rational(gamma.dump());
  else
    throw Error(ErrorCode::ParseError, where("gamma") + " must be a string such as \"1/25\" or \"0.04\"");

  const auto& groups = doc["groups"];
  if (!groups.is_array()) throw Error(ErrorCode::ParseError, where("groups") + " must be an array");
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const std::string prefix = "groups[" + std::to_string(j) + "]";
    const auto& g = groups[j];
    if (!g.is_object()) throw Error(ErrorCode::ParseError, where(prefix) + " must be an object");
    for (const char* key : {"count", "antennas"})
      if (!g.contains(key)) throw Error(ErrorCode::ParseError, where(prefix + "." + key) + " is missing");
    raw.groups.push_back({detail::positive_int(g["count"], prefix + ".count"),
                          detail::positive_int(g["antennas"], prefix + ".antennas")});
  }
  return raw;
}

inline RawConfig read_raw_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_raw_config(ss.str(), path);
}

inline NetworkConfig parse_config(const std::string& path) { return read_raw_config(path).validate(); }

// ---------------------------------------------------------------------------
// Report tables

enum class OutputFormat { Csv, Json, Pretty };

inline std::optional<OutputFormat> parse_format(std::string_view s) {
  if (s == "csv") return OutputFormat::Csv;
  if (s == "json") return OutputFormat::Json;
  if (s == "pretty") return OutputFormat::Pretty;
  return std::nullopt;
}

struct ReportTable {
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
  return out + "\"";
}

inline void render(std::ostream& os, const ReportTable& table, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
      };
      line(table.columns);
      for (const auto& r : table.rows) line(r);
      break;
    }
    case OutputFormat::Json: {
      auto arr = nlohmann::ordered_json::array();
      for (const auto& r : table.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < table.columns.size(); ++i) obj[table.columns[i]] = i < r.size() ? r[i] : "";
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << '\n';
      break;
    }
    case OutputFormat::Pretty: {
      std::vector<std::size_t> width(table.columns.size());
      for (std::size_t i = 0; i < width.size(); ++i) width[i] = table.columns[i].size();
      for (const auto& r : table.rows)
        for (std::size_t i = 0; i < r.size() && i < width.size(); ++i) width[i] = std::max(width[i], r[i].size());
      auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < width.size(); ++i) {
          std::string c = i < cells.size() ? cells[i] : "";
          s += c + std::string(width[i] - c.size() + 2, ' ');
        }
        while (!s.empty() && s.back() == ' ') s.pop_back();
        os << s << '\n';
      };
      line(table.columns);
      std::size_t total = 0;
      for (auto w : width) total += w + 2;
      os << std::string(total > 2 ? total - 2 : 0, '-') << '\n';
      for (const auto& r : table.rows) line(r);
      break;
    }
  }
}

// ---------------------------------------------------------------------------
// Strategies

enum class StrategyKind { MinG, Grouping, SuperGrouping, SinglePhantom, Phantom };

inline constexpr std::array<StrategyKind, 5> kAllStrategies = {StrategyKind::MinG, StrategyKind::Grouping,
                                                               StrategyKind::SuperGrouping, StrategyKind::SinglePhantom,
                                                               StrategyKind::Phantom};

inline std::string_view to_string(StrategyKind s) {
  switch (s) {
    case StrategyKind::MinG: return "min-G";
    case StrategyKind::Grouping: return "Grouping";
    case StrategyKind::SuperGrouping: return "Super-grouping";
    case StrategyKind::SinglePhantom: return "SPh";
    case StrategyKind::Phantom: return "Phantom";
  }
  return "?";
}

inline std::optional<StrategyKind> parse_strategy(std::string_view s) {
  std::string k;
  for (char c : s)
    if (c != '-' && c != '_') k += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (k == "ming") return StrategyKind::MinG;
  if (k == "grouping") return StrategyKind::Grouping;
  if (k == "supergrouping" || k == "sg") return StrategyKind::SuperGrouping;
  if (k == "sph") return StrategyKind::SinglePhantom;
  if (k == "phantom") return StrategyKind::Phantom;
  return std::nullopt;
}

/// Comma list or "all".
inline std::vector<PolicyKind> parse_policy_list(std::string_view text) {
  if (text.empty() || text == "all") return {kAllPolicies.begin(), kAllPolicies.end()};
  std::vector<PolicyKind> out;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ',');) {
    auto p = parse_policy(item);
    if (!p) throw Error(ErrorCode::ParseError, "unknown policy '" + item + "' (expected opt, cmb, lin or all)");
    out.push_back(*p);
  }
  return out;
}

inline std::vector<StrategyKind> parse_strategy_list(std::string_view text) {
  if (text.empty() || text == "all") return {kAllStrategies.begin(), kAllStrategies.end()};
  std::vector<StrategyKind> out;
  std::stringstream ss{std::string(text)};
  for (std::string item; std::getline(ss, item, ',');) {
    auto s = parse_strategy(item);
    if (!s) throw Error(ErrorCode::ParseError, "unknown strategy '" + item + "'");
    out.push_back(*s);
  }
  return out;
}

struct StrategyRow {
  PolicyKind policy = PolicyKind::Opt;
  StrategyKind strategy = StrategyKind::MinG;
  bool feasible = false;
  Rational dof;
  BigCount max_theta;
  BigCount intervals;
  std::string detail;  // best partition, operating point, or the infeasibility reason
};

inline StrategyRow evaluate_strategy(const NetworkConfig& cfg, PolicyKind policy, StrategyKind strategy) {
  StrategyRow row;
  row.policy = policy;
  row.strategy = strategy;
  auto from_report = [&](const StrategyReport& rep) {
    row.feasible = rep.feasible;
    row.dof = rep.dof;
    row.max_theta = rep.max_theta;
    row.intervals = rep.total_intervals;
    if (!rep.feasible) row.detail = rep.reason;
  };
  try {
    switch (strategy) {
      case StrategyKind::MinG: from_report(min_g(cfg, policy)); break;
      case StrategyKind::Grouping: from_report(grouping(cfg, policy)); break;
      case StrategyKind::SuperGrouping: {
        auto res = super_grouping(cfg, policy);
        from_report(res.report);
        if (res.feasible) row.detail = res.best.label();
        break;
      }
      case StrategyKind::SinglePhantom: {
        auto sph = sph_optimize(cfg, policy);
        std::vector<std::size_t> all(cfg.group_count());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        auto plan = phantom_evaluate(cfg, policy, {phantom_round(cfg, policy, all, sph.omega, sph.beta_hat, 1)});
        row.feasible = true;
        row.dof = sph.dof;
        row.max_theta = sph.theta;
        row.intervals = plan.mc_intervals + plan.uc_interval_count;
        row.detail = "Omega=" + std::to_string(sph.omega) + " beta_hat=" + std::to_string(sph.beta_hat);
        break;
      }
      case StrategyKind::Phantom: {
        auto plan = phantom_plan(cfg, policy);
        row.feasible = plan.feasible;
        if (!plan.feasible) {
          row.detail = plan.reason;
          break;
        }
        row.dof = plan.dof;
        row.max_theta = plan.theta_final;
        row.intervals = plan.mc_intervals + plan.uc_interval_count;
        row.detail = std::to_string(plan.rounds.size()) + " round(s)";
        break;
      }
    }
  } catch (const Error& e) {
    row.feasible = false;
    row.detail = e.what();
  }
  return row;
}

// ---------------------------------------------------------------------------
// Commands

struct Options {
  std::vector<PolicyKind> policies{kAllPolicies.begin(), kAllPolicies.end()};
  std::vector<StrategyKind> strategies{kAllStrategies.begin(), kAllStrategies.end()};
  int precision = 4;
};

inline ReportTable cmd_dof(const NetworkConfig& cfg, const Options& opt) {
  ReportTable t{{"policy", "strategy", "dof_decimal", "dof_rational", "max_theta", "intervals", "feasible", "detail"}, {}};
  for (auto p : opt.policies)
    for (auto s : opt.strategies) {
      auto r = evaluate_strategy(cfg, p, s);
      if (r.feasible)
        t.add({std::string(to_string(p)), std::string(to_string(s)), to_decimal(r.dof, opt.precision),
               to_fraction_string(r.dof), r.max_theta.str(), r.intervals.str(), "true", r.detail});
      else
        t.add({std::string(to_string(p)), std::string(to_string(s)), "", "", "", "", "false", r.detail});
    }
  return t;
}

/// One sweep axis: a parameter name ("L", "gamma", "K<j>", "G<j>") and its values.
struct SweepAxis {
  std::string name;
  std::vector<std::string> values;
};

/// "L=10..20", "L=10..20:2", "gamma=1/25,1/20", "K2=5..30:5". An empty value list is allowed.
inline SweepAxis parse_axis(std::string_view text) {
  auto eq = text.find('=');
  if (eq == std::string_view::npos || eq == 0)
    throw Error(ErrorCode::ParseError, "axis must look like NAME=a..b[:step] or NAME=v1,v2");
  SweepAxis axis{std::string(text.substr(0, eq)), {}};
  const std::string& n = axis.name;
  const bool indexed = (n[0] == 'K' || n[0] == 'G') && n.size() > 1 &&
                       std::all_of(n.begin() + 1, n.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (n != "L" && n != "gamma" && !indexed)
    throw Error(ErrorCode::ParseError, "unknown axis '" + n + "' (expected L, gamma, K<j> or G<j>)");
  std::string spec(text.substr(eq + 1));
  if (spec.empty()) return axis;
  if (auto dots = spec.find(".."); dots != std::string::npos) {
    std::string hi = spec.substr(dots + 2), step = "1";
    if (auto colon = hi.find(':'); colon != std::string::npos) {
      step = hi.substr(colon + 1);
      hi = hi.substr(0, colon);
    }
    try {
      std::int64_t a = std::stoll(spec.substr(0, dots)), b = std::stoll(hi), s = std::stoll(step);
      if (s <= 0) throw Error(ErrorCode::ParseError, "axis step must be positive");
      for (std::int64_t v = a; v <= b; v += s) axis.values.push_back(std::to_string(v));
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "axis range '" + spec + "' must use integers");
    }
    return axis;
  }
  std::stringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) axis.values.push_back(item);
  return axis;
}

inline RawConfig apply_axis(RawConfig raw, const std::string& name, const std::string& value) {
  if (name == "gamma") {
    raw.cache_ratio = parse_rational(value);
    return raw;
  }
  std::int64_t v = 0;
  try {
    v = std::stoll(value);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::ParseError, "axis value '" + value + "' is not an integer");
  }
  if (name == "L") {
    raw.tx_gain = v;
    return raw;
  }
  const std::size_t j = std::stoul(name.substr(1));
  if (j < 1 || j > raw.groups.size())
    throw Error(ErrorCode::ParseError, "axis '" + name + "' refers to a group that does not exist");
  (name[0] == 'K' ? raw.groups[j - 1].count : raw.groups[j - 1].gain) = v;
  return raw;
}

/// Points run concurrently; rows come out in axis order. Points that fail validation
/// (for example a non-integer cache gain) are reported as skipped rows.
inline ReportTable cmd_sweep(const RawConfig& base, const SweepAxis& axis, const Options& opt) {
  ReportTable t{{"axis_value", "policy", "strategy", "dof_decimal", "dof_rational", "feasible", "reason"}, {}};
  using Rows = std::vector<std::vector<std::string>>;
  std::vector<std::future<Rows>> jobs;
  for (const auto& value : axis.values) {
    jobs.push_back(std::async(std::launch::async, [&base, &axis, &opt, value]() {
      Rows rows;
      std::optional<NetworkConfig> cfg;
      std::string why;
      try {
        cfg = apply_axis(base, axis.name, value).validate();
      } catch (const Error& e) {
        why = std::string("skipped: ") + e.what();
      }
      for (auto p : opt.policies)
        for (auto s : opt.strategies) {
          std::vector<std::string> row{value, std::string(to_string(p)), std::string(to_string(s))};
          if (!cfg) {
            row.insert(row.end(), {"", "", "false", why});
          } else {
            auto r = evaluate_strategy(*cfg, p, s);
            if (r.feasible)
              row.insert(row.end(), {to_decimal(r.dof, opt.precision), to_fraction_string(r.dof), "true", ""});
            else
              row.insert(row.end(), {"", "", "false", r.detail});
          }
          rows.push_back(std::move(row));
        }
      return rows;
    }));
  }
  for (auto& job : jobs)
    for (auto& row : job.get()) t.add(std::move(row));
  return t;
}

/// Full Super-grouping grid for each requested policy.
inline ReportTable cmd_partition(const NetworkConfig& cfg, const Options& opt) {
  ReportTable t{{"policy", "blocks", "partition", "dof_decimal", "dof_rational", "max_theta", "feasible", "best"}, {}};
  for (auto p : opt.policies) {
    auto res = super_grouping(cfg, p);
    for (const auto& cell : res.grid) {
      const bool best = res.feasible && cell.partition == res.best;
      if (cell.report.feasible)
        t.add({std::string(to_string(p)), std::to_string(cell.partition.block_count()), cell.partition.label(),
               to_decimal(cell.report.dof, opt.precision), to_fraction_string(cell.report.dof),
               cell.report.max_theta.str(), "true", best ? "*" : ""});
      else
        t.add({std::string(to_string(p)), std::to_string(cell.partition.block_count()), cell.partition.label(), "", "",
               "", "false", cell.report.reason});
    }
  }
  return t;
}

inline std::string group_set(const std::vector<std::size_t>& groups) {
  std::string s = "{";
  for (std::size_t i = 0; i < groups.size(); ++i) s += (i ? "," : "") + std::to_string(groups[i] + 1);
  return s + "}";
}

/// Round-by-round Phantom plan; the last row per policy is the total.
inline ReportTable cmd_phantom(const NetworkConfig& cfg, const Options& opt) {
  ReportTable t{{"policy", "round", "groups", "users", "omega", "beta_hat", "phi", "s_count", "zeta", "dof_decimal",
                 "dof_rational", "note"},
                {}};
  for (auto p : opt.policies) {
    auto plan = phantom_plan(cfg, p);
    const std::string pn(to_string(p));
    if (!plan.feasible) {
      t.add({pn, "total", "", "", "", "", "", "", "", "", "", plan.reason});
      continue;
    }
    for (std::size_t i = 0; i < plan.rounds.size(); ++i) {
      const auto& r = plan.rounds[i];
      t.add({pn, std::to_string(r.index), group_set(r.groups), std::to_string(r.users), std::to_string(r.omega),
             std::to_string(r.beta_hat), r.phi.str(), r.s_count.str(), r.zeta.str(),
             to_decimal(plan.dof_by_rounds[i], opt.precision), to_fraction_string(plan.dof_by_rounds[i]), ""});
    }
    std::string note = "theta=" + plan.theta_final.str() + " unicast=" + plan.uc_interval_count.str();
    if (plan.uc_supply_binds) note += " supply-bound";
    t.add({pn, "total", "", std::to_string(cfg.user_count()), "", "", "", BigCount(plan.mc_intervals + plan.uc_interval_count).str(),
           "", to_decimal(plan.dof, opt.precision), to_fraction_string(plan.dof), note});
  }
  return t;
}

struct VerifyResult {
  ReportTable table;
  bool passed = true;
};

/// Builds and audits the explicit schedule. Single-group configs use the symmetric
/// construction; heterogeneous configs materialize the Phantom plan.
/// GuardExceeded propagates to the caller.
inline VerifyResult cmd_verify(const NetworkConfig& cfg, const Options& opt, std::ostream* dump = nullptr) {
  VerifyResult out{{{"policy", "check", "passed", "detail"}, {}}, true};
  for (auto p : opt.policies) {
    const std::string pn(to_string(p));
    Schedule sched;
    Expectation expected;
    if (cfg.group_count() == 1) {
      HomogeneousInstance inst{cfg.user_count(), cfg.cache_gain(), cfg.tx_gain(), cfg.min_gain()};
      auto outcome = eval_policy_t(p, inst.users, inst.cache_gain, inst.tx_gain, inst.rx_gain);
      if (!outcome.feasible) {
        out.table.add({pn, "policy", "skipped", outcome.reason});
        continue;
      }
      sched = build_schedule(inst, p, outcome.omega, outcome.beta);
      expected = expectation_for(outcome);
    } else {
      auto plan = phantom_plan(cfg, p);
      if (!plan.feasible) {
        out.table.add({pn, "policy", "skipped", plan.reason});
        continue;
      }
      sched = build_phantom_schedule(cfg, p, plan);
      expected = expectation_for(plan);
    }
    Placement placement = build_placement(cfg, p);
    auto rep = verify_schedule(sched, placement, expected);
    for (const auto& c : rep.checks) out.table.add({pn, c.name, c.passed ? "true" : "false", c.detail});
    for (const auto& note : sched.notes) out.table.add({pn, "note", "", note});
    out.passed = out.passed && rep.passed();
    if (dump) dump_schedule(*dump, sched, placement);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Reference tables

namespace detail {

inline std::string compare_numeric(const reference::Cell& ref, const Rational& computed) {
  Rational expected = parse_rational(ref.value);
  Rational tol = parse_rational(ref.tolerance);
  Rational diff = computed - expected;
  if (diff < 0) diff = -diff;
  if (ref.relative) tol *= expected;
  return diff <= tol ? "OK" : "DIFF";
}

inline std::string excluded_or(const reference::Cell& ref, std::string status) {
  return ref.excluded ? "EXCLUDED" : status;
}

}  // namespace detail

inline const NetworkConfig& table_iii_config() {
  static const NetworkConfig cfg = validate_config(14, Rational(1, 5), {{5, 2}, {30, 8}});
  return cfg;
}
inline const NetworkConfig& table_iv_config() {
  static const NetworkConfig cfg = validate_config(16, Rational(1, 20), {{20, 2}, {20, 5}, {20, 6}, {20, 7}, {220, 16}});
  return cfg;
}
inline const NetworkConfig& table_v_config() {
  static const NetworkConfig cfg = validate_config(16, Rational(1, 25), {{25, 2}, {75, 4}, {125, 8}});
  return cfg;
}

/// Recomputes every cell of a reference table and marks it OK, DIFF or EXCLUDED.
inline ReportTable cmd_table(std::string_view name, int precision = 4) {
  ReportTable t{{"table", "cell", "computed", "reference", "status", "note"}, {}};
  if (name == "III") {
    const auto& cfg = table_iii_config();
    for (const auto& ref : reference::kTableIII) {
      auto slash = ref.cell.find('/');
      auto strategy = *parse_strategy(ref.cell.substr(0, slash));
      auto policy = *parse_policy(ref.cell.substr(slash + 1));
      auto row = evaluate_strategy(cfg, policy, strategy);
      std::string computed = row.feasible ? row.max_theta.str() : "infeasible";
      std::string status = row.feasible ? detail::compare_numeric(ref, Rational(row.max_theta)) : "DIFF";
      t.add({"III", std::string(ref.cell), computed, std::string(ref.display), detail::excluded_or(ref, status),
             std::string(ref.excluded ? ref.note : row.detail)});
    }
  } else if (name == "IV") {
    auto res = super_grouping(table_iv_config(), PolicyKind::Opt);
    for (const auto& ref : reference::kTableIV) {
      auto it = std::find_if(res.grid.begin(), res.grid.end(),
                             [&](const PartitionCell& c) { return c.partition.label() == ref.cell; });
      if (it == res.grid.end() || !it->report.feasible) {
        t.add({"IV", std::string(ref.cell), "infeasible", std::string(ref.display), "DIFF", ""});
        continue;
      }
      const bool best = it->partition == res.best;
      t.add({"IV", std::string(ref.cell), to_decimal(it->report.dof, precision), std::string(ref.display),
             detail::compare_numeric(ref, it->report.dof), best ? "maximum" : ""});
    }
  } else if (name == "V") {
    const auto& cfg = table_v_config();
    auto sph = sph_optimize(cfg, PolicyKind::Opt);
    auto mg = min_g(cfg, PolicyKind::Opt);
    auto gr = grouping(cfg, PolicyKind::Opt);
    auto ph = phantom_plan(cfg, PolicyKind::Opt);
    for (const auto& ref : reference::kTableV) {
      std::optional<Rational> value;
      std::string text;
      const std::string key(ref.cell);
      if (key.rfind("b=", 0) == 0) {
        auto comma = key.find(',');
        std::int64_t b = std::stoll(key.substr(2, comma - 2)), w = std::stoll(key.substr(comma + 3));
        value = sph_dof(cfg, PolicyKind::Opt, w, b);
      } else if (key == "min-G") {
        value = mg.dof;
      } else if (key == "min-G/Omega") {
        value = Rational(mg.units[0].outcome.omega);
      } else if (key == "Grouping") {
        value = gr.dof;
      } else if (key.rfind("Grouping/", 0) == 0) {
        const auto& u = gr.units[std::stoul(key.substr(9)) - 1].outcome;
        text = "(" + std::to_string(u.omega) + "," + to_decimal_trimmed(u.dof, precision) + ")";
      } else if (key == "Phantom" && ph.feasible) {
        value = ph.dof;
      }
      if (text.empty()) text = value ? to_decimal(*value, precision) : "--";
      std::string status;
      if (ref.display == "--")
        status = value ? "DIFF" : "OK";
      else if (ref.value.empty())
        status = text == ref.display ? "OK" : "DIFF";
      else
        status = value ? detail::compare_numeric(ref, *value) : "DIFF";
      t.add({"V", key, text, std::string(ref.display), status, ""});
    }
  } else {
    throw Error(ErrorCode::ParseError, "unknown table '" + std::string(name) + "' (expected III, IV or V)");
  }
  return t;
}

inline std::size_t count_status(const ReportTable& t, std::string_view status) {
  return static_cast<std::size_t>(std::count_if(t.rows.begin(), t.rows.end(), [&](const auto& r) { return r[4] == status; }));
}

}  // namespace mimocc::cli
