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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimocc/core.hpp"
#include "mimocc/policies.hpp"

namespace mimocc {

/// Consecutive-index partition of groups 1..J, stored as boundaries 0 = J_0 < J_1 < ... < J_Jbar = J.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> boundaries) : bounds_(std::move(boundaries)) {
    if (bounds_.size() < 2 || bounds_.front() != 0)
      throw Error(ErrorCode::InvalidParameter, "partition boundaries must start at 0");
    for (std::size_t i = 1; i < bounds_.size(); ++i)
      if (bounds_[i] <= bounds_[i - 1]) throw Error(ErrorCode::InvalidParameter, "boundaries must increase");
  }

  static Partition single(std::size_t groups) { return Partition({0, groups}); }
  static Partition singletons(std::size_t groups) {
    std::vector<std::size_t> b(groups + 1);
    for (std::size_t i = 0; i <= groups; ++i) b[i] = i;
    return Partition(std::move(b));
  }

  std::size_t block_count() const noexcept { return bounds_.size() - 1; }
  std::size_t group_count() const noexcept { return bounds_.back(); }
  /// Zero-based group indices [first, last) of block l.
  std::size_t block_begin(std::size_t l) const { return bounds_[l]; }
  std::size_t block_end(std::size_t l) const { return bounds_[l + 1]; }
  const std::vector<std::size_t>& boundaries() const noexcept { return bounds_; }

  /// "{1},{2,3,4},{5}" with one-based group numbers.
  std::string label() const {
    std::string s;
    for (std::size_t l = 0; l < block_count(); ++l) {
      if (l) s += ",";
      s += "{";
      for (std::size_t j = block_begin(l); j < block_end(l); ++j) {
        if (j != block_begin(l)) s += ",";
        s += std::to_string(j + 1);
      }
      s += "}";
    }
    return s;
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) return a.block_count() <=> b.block_count();
    return a.bounds_ <=> b.bounds_;
  }

 private:
  std::vector<std::size_t> bounds_{0, 1};
};

/// A set of users served with one symmetric policy instance.
struct ServedUnit {
  std::string label;
  std::int64_t users = 0;
  std::int64_t gain = 0;
  PolicyOutcome outcome;
};

struct StrategyReport {
  std::string strategy;
  PolicyKind policy = PolicyKind::Opt;
  Rational dof;
  std::vector<ServedUnit> units;
  BigCount max_theta;
  BigCount total_intervals;
  bool feasible = false;
  std::string reason;
};

namespace detail {

/// Serves each unit in orthogonal time and combines the per-unit DoF harmonically,
/// weighted by unit size: K / sum_l (K_l / DoF_l).
inline StrategyReport serve_units(std::string strategy, PolicyKind policy, const NetworkConfig& cfg,
                                  const std::vector<ServedUnit>& shapes, bool strict_integrality) {
  StrategyReport rep;
  rep.strategy = std::move(strategy);
  rep.policy = policy;
  rep.feasible = true;
  Rational inverse_sum = 0;
  std::int64_t total_users = 0;
  for (const auto& shape : shapes) {
    ServedUnit unit = shape;
    Rational t = cfg.cache_ratio() * unit.users;
    if (!is_integer(t)) {
      std::string why = "unit " + unit.label + ": K*gamma = " + to_fraction_string(t) + " is not an integer";
      if (strict_integrality) throw Error(ErrorCode::GroupCacheGainNonInteger, why);
      rep.feasible = false;
      if (rep.reason.empty()) rep.reason = why;
      rep.units.push_back(std::move(unit));
      continue;
    }
    unit.outcome = eval_policy_t(policy, unit.users, static_cast<std::int64_t>(numerator(t)), cfg.tx_gain(),
                                 unit.gain);
    if (!unit.outcome.feasible) {
      rep.feasible = false;
      if (rep.reason.empty()) rep.reason = "unit " + unit.label + ": " + unit.outcome.reason;
    } else {
      inverse_sum += Rational(unit.users) / unit.outcome.dof;
      if (unit.outcome.theta > rep.max_theta) rep.max_theta = unit.outcome.theta;
      rep.total_intervals += unit.outcome.s_count;
    }
    total_users += unit.users;
    rep.units.push_back(std::move(unit));
  }
  if (rep.feasible) rep.dof = Rational(total_users) / inverse_sum;
  return rep;
}

inline std::string group_label(std::size_t first, std::size_t last) {
  std::string s = "{";
  for (std::size_t j = first; j < last; ++j) {
    if (j != first) s += ",";
    s += std::to_string(j + 1);
  }
  return s + "}";
}

}  // namespace detail

/// Treats every user as having the smallest receive gain.
inline StrategyReport min_g(const NetworkConfig& cfg, PolicyKind policy) {
  ServedUnit all{detail::group_label(0, cfg.group_count()), cfg.user_count(), cfg.min_gain(), {}};
  return detail::serve_units("min-G", policy, cfg, {all}, true);
}

/// Serves each antenna-homogeneous group separately.
inline StrategyReport grouping(const NetworkConfig& cfg, PolicyKind policy) {
  std::vector<ServedUnit> shapes;
  for (std::size_t j = 0; j < cfg.group_count(); ++j)
    shapes.push_back({detail::group_label(j, j + 1), cfg.groups()[j].count, cfg.groups()[j].gain, {}});
  return detail::serve_units("Grouping", policy, cfg, shapes, true);
}

/// Merges the blocks of `partition` into equivalent sets (summed users, minimum gain)
/// and serves the sets with Grouping. Non-integral set cache gains mark the report infeasible.
inline StrategyReport evaluate_partition(const NetworkConfig& cfg, PolicyKind policy, const Partition& partition) {
  if (partition.group_count() != cfg.group_count())
    throw Error(ErrorCode::InvalidParameter, "partition does not cover the configured groups");
  std::vector<ServedUnit> shapes;
  for (std::size_t l = 0; l < partition.block_count(); ++l) {
    ServedUnit u;
    u.label = detail::group_label(partition.block_begin(l), partition.block_end(l));
    u.gain = cfg.groups()[partition.block_begin(l)].gain;  // sorted ascending: first is the minimum
    for (std::size_t j = partition.block_begin(l); j < partition.block_end(l); ++j) u.users += cfg.groups()[j].count;
    shapes.push_back(std::move(u));
  }
  return detail::serve_units("Super-grouping", policy, cfg, shapes, false);
}

/// All C(J-1, Jbar-1) consecutive-index partitions into Jbar blocks, cut points in lexicographic order.
inline std::vector<Partition> enumerate_partitions(std::size_t groups, std::size_t blocks) {
  if (blocks < 1 || blocks > groups) throw Error(ErrorCode::InvalidParameter, "need 1 <= Jbar <= J");
  std::vector<Partition> out;
  const std::size_t cuts = blocks - 1;
  std::vector<std::size_t> idx(cuts);
  for (std::size_t i = 0; i < cuts; ++i) idx[i] = i + 1;
  while (true) {
    std::vector<std::size_t> b{0};
    b.insert(b.end(), idx.begin(), idx.end());
    b.push_back(groups);
    out.emplace_back(std::move(b));
    // next combination of `cuts` values from {1..groups-1}
    std::size_t i = cuts;
    while (i > 0 && idx[i - 1] == groups - 1 - (cuts - i)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < cuts; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

inline constexpr std::size_t kMaxPartitionGroups = 24;

struct PartitionCell {
  Partition partition;
  StrategyReport report;
};

struct SuperGroupingResult {
  Partition best;
  StrategyReport report;
  std::vector<PartitionCell> grid;  // ordered by Jbar, then boundaries
  bool feasible = false;
};

/// Exhaustive search over the 2^(J-1) consecutive partitions. Ties prefer fewer blocks,
/// then the lexicographically smallest boundaries; infeasible partitions stay in the grid.
inline SuperGroupingResult super_grouping(const NetworkConfig& cfg, PolicyKind policy) {
  const std::size_t groups = cfg.group_count();
  if (groups > kMaxPartitionGroups)
    throw Error(ErrorCode::TooManyGroups, "partition search supports at most " +
                                              std::to_string(kMaxPartitionGroups) + " groups");
  SuperGroupingResult res;
  for (std::size_t blocks = 1; blocks <= groups; ++blocks) {
    for (auto& p : enumerate_partitions(groups, blocks)) {
      PartitionCell cell{p, evaluate_partition(cfg, policy, p)};
      if (cell.report.feasible && (!res.feasible || cell.report.dof > res.report.dof)) {
        res.feasible = true;
        res.best = cell.partition;
        res.report = cell.report;
      }
      res.grid.push_back(std::move(cell));
    }
  }
  if (!res.feasible) {
    res.report.strategy = "Super-grouping";
    res.report.policy = policy;
    res.report.reason = "no feasible partition";
  }
  return res;
}

/// Best DoF over every set partition of the groups (consecutive or not); each block uses
/// its minimum gain. Only for J <= 6; used to check the consecutive-merging restriction.
struct SetPartitionSearch {
  std::vector<std::vector<std::size_t>> best_blocks;
  Rational best_dof;
  std::size_t partitions_examined = 0;
  bool feasible = false;
};

inline SetPartitionSearch super_grouping_all_set_partitions(const NetworkConfig& cfg, PolicyKind policy) {
  const std::size_t groups = cfg.group_count();
  if (groups > 6) throw Error(ErrorCode::TooManyGroups, "set-partition mode supports at most 6 groups");
  SetPartitionSearch out;
  std::vector<std::size_t> rgs(groups, 0);  // restricted growth string
  while (true) {
    std::size_t blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<ServedUnit> shapes(blocks);
    std::vector<std::vector<std::size_t>> members(blocks);
    for (std::size_t j = 0; j < groups; ++j) {
      auto& u = shapes[rgs[j]];
      u.users += cfg.groups()[j].count;
      u.gain = u.gain == 0 ? cfg.groups()[j].gain : std::min(u.gain, cfg.groups()[j].gain);
      members[rgs[j]].push_back(j);
    }
    for (std::size_t b = 0; b < blocks; ++b) {
      shapes[b].label = "{";
      for (std::size_t m = 0; m < members[b].size(); ++m)
        shapes[b].label += (m ? "," : "") + std::to_string(members[b][m] + 1);
      shapes[b].label += "}";
    }
    auto rep = detail::serve_units("Super-grouping", policy, cfg, shapes, false);
    ++out.partitions_examined;
    if (rep.feasible && (!out.feasible || rep.dof > out.best_dof)) {
      out.feasible = true;
      out.best_dof = rep.dof;
      out.best_blocks = members;
    }
    // next restricted growth string; rgs[0] stays 0
    bool advanced = false;
    for (std::size_t i = groups; i-- > 1;) {
      std::size_t prefix_max = *std::max_element(rgs.begin(), rgs.begin() + static_cast<std::ptrdiff_t>(i));
      if (rgs[i] <= prefix_max) {
        ++rgs[i];
        std::fill(rgs.begin() + static_cast<std::ptrdiff_t>(i) + 1, rgs.end(), 0);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return out;
}

}  // namespace mimocc
