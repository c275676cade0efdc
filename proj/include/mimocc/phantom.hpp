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

// Phantom delivery: every multicast round pretends the served users share the
// round's largest receive gain, drops the streams weaker users cannot resolve,
// and defers them to later rounds or to a final unicast round of L streams.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mimocc/core.hpp"
#include "mimocc/policies.hpp"

namespace mimocc {

/// Cache gain used inside rounds i > 1. Global keeps t = K*gamma (placement is global);
/// PerRound uses K_hat_i*gamma and exists for sensitivity studies only.
enum class CacheGainMode { Global, PerRound };

struct PhantomOptions {
  CacheGainMode gain_mode = CacheGainMode::Global;
  std::size_t max_rounds = 0;  // 0: run until the target set empties
};

struct PhantomRound {
  std::size_t index = 0;               // 1-based
  std::vector<std::size_t> groups;     // zero-based group indices forming K_hat_i
  std::int64_t users = 0;              // |K_hat_i|
  std::int64_t max_gain = 0;           // G_hat_i
  std::int64_t cache_gain = 0;         // t used for this round
  std::int64_t omega = 0;
  std::int64_t beta_hat = 0;
  std::vector<std::int64_t> streams;   // min(beta_hat, G_j) for each entry of `groups`
  BigCount stream_sum;                 // sum over users of min(beta_hat, G_k)
  BigCount phi;
  BigCount s_count;
  BigCount lambda;
  BigCount zeta;     // prod_i' phi_i' / phi_i
  BigCount epsilon;  // prod_{i' > i} phi_i'
};

struct PhantomPlan {
  PolicyKind policy = PolicyKind::Opt;
  std::vector<PhantomRound> rounds;
  BigCount vartheta;
  BigCount theta_final;
  BigCount z_total;
  BigCount z_mc;
  BigCount z_uc;
  BigCount mc_intervals;       // normalized: sum_i zeta_i S_i
  Rational uc_intervals;       // Z_uc / L
  BigCount uc_interval_count;  // ceil(Z_uc / L)
  bool uc_supply_binds = false;
  Rational dof;
  std::vector<Rational> dof_by_rounds;  // DoF when multicasting stops after 1..I rounds
  bool feasible = false;
  std::string reason;
};

namespace detail {

struct RoundShape {
  std::vector<std::size_t> groups;
  std::int64_t users = 0;
  std::int64_t max_gain = 0;
  std::int64_t cache_gain = 0;
};

inline BigCount placement_split(PolicyKind policy, std::int64_t users, std::int64_t cache_gain) {
  return policy == PolicyKind::Lin ? BigCount(users) : binom(users, cache_gain);
}

/// phi, S and lambda of the hypothetical symmetric network of one round.
inline void fill_round_counts(PolicyKind policy, PhantomRound& r) {
  const std::int64_t k = r.users, t = r.cache_gain, om = r.omega;
  if (policy == PolicyKind::Lin) {
    r.phi = BigCount(r.beta_hat) * om;
    r.s_count = BigCount(k) * (k - t);
    r.lambda = BigCount(k - t) * om;
  } else {
    r.phi = binom(k - t - 1, om - t - 1) * r.beta_hat;
    r.s_count = binom(k, om) * binom(om - 1, t);
    r.lambda = binom(k - 1, om - 1) * binom(om - 1, t);
  }
}

/// Admissible (Omega, beta_hat) pairs for a round; beta_hat acts as the round's symmetric gain.
inline std::vector<OmegaBeta> round_candidates(PolicyKind policy, std::int64_t users, std::int64_t cache_gain,
                                               std::int64_t tx_gain, std::int64_t beta_lo, std::int64_t beta_hi) {
  std::vector<OmegaBeta> out;
  if (users < cache_gain + 1) return out;
  for (std::int64_t b = std::max<std::int64_t>(beta_lo, 1); b <= beta_hi; ++b) {
    if (policy == PolicyKind::Opt) {
      const std::int64_t hi = std::min(users, cache_gain + tx_gain);
      for (std::int64_t om = cache_gain + 1; om <= hi; ++om)
        if (opt_beta_bound(tx_gain, cache_gain, om, b) >= b) out.push_back({om, b});
    } else {
      if (tx_gain / b < 1) continue;
      if (policy == PolicyKind::Lin && tx_gain / b < cache_gain) continue;
      out.push_back({parallel_links_omega(users, cache_gain, tx_gain, b), b});
    }
  }
  return out;
}

inline PhantomRound make_round(PolicyKind policy, const NetworkConfig& cfg, const RoundShape& shape,
                               OmegaBeta pair, std::size_t index) {
  PhantomRound r;
  r.index = index;
  r.groups = shape.groups;
  r.users = shape.users;
  r.max_gain = shape.max_gain;
  r.cache_gain = shape.cache_gain;
  r.omega = pair.omega;
  r.beta_hat = pair.beta;
  for (std::size_t j : r.groups) {
    std::int64_t s = std::min(r.beta_hat, cfg.groups()[j].gain);
    r.streams.push_back(s);
    r.stream_sum += BigCount(s) * cfg.groups()[j].count;
  }
  fill_round_counts(policy, r);
  return r;
}

/// Share of one user's missing data delivered in round r when the user receives `streams` per interval.
inline Rational delivered_share(const NetworkConfig& cfg, const PhantomRound& r, const BigCount& vartheta,
                                std::int64_t streams) {
  Rational missing_share = (Rational(1) - cfg.cache_ratio()) * vartheta * r.phi;
  return Rational(r.lambda * streams) / missing_share;
}

inline std::optional<RoundShape> next_shape(const NetworkConfig& cfg, const PhantomRound& prev,
                                            const PhantomOptions& opt, std::string* stop) {
  RoundShape s;
  for (std::size_t j : prev.groups)
    if (cfg.groups()[j].gain < prev.beta_hat) {
      s.groups.push_back(j);
      s.users += cfg.groups()[j].count;
      s.max_gain = std::max(s.max_gain, cfg.groups()[j].gain);
    }
  if (s.groups.empty()) {
    *stop = "no user discarded streams in round " + std::to_string(prev.index);
    return std::nullopt;
  }
  if (opt.gain_mode == CacheGainMode::Global) {
    s.cache_gain = cfg.cache_gain();
  } else {
    Rational t = cfg.cache_ratio() * s.users;
    if (!is_integer(t)) {
      *stop = "round " + std::to_string(prev.index + 1) + " cache gain is not an integer";
      return std::nullopt;
    }
    s.cache_gain = static_cast<std::int64_t>(numerator(t));
  }
  if (s.cache_gain < 1 || s.users < s.cache_gain + 1) {
    *stop = "round " + std::to_string(prev.index + 1) + " has fewer than t+1 users";
    return std::nullopt;
  }
  return s;
}

/// Total missing subpackets over multicast plus unicast intervals,
/// all counted at the final subpacketization.
inline void finalize_plan(const NetworkConfig& cfg, PhantomPlan& plan) {
  const std::int64_t k = cfg.user_count(), t = cfg.cache_gain(), L = cfg.tx_gain();
  plan.vartheta = placement_split(plan.policy, k, t);
  BigCount prod = 1;
  for (const auto& r : plan.rounds) prod *= r.phi;
  plan.theta_final = plan.vartheta * prod;
  plan.z_total = BigCount(k - t) * plan.theta_final;  // K(1-gamma) * Theta
  plan.z_mc = 0;
  plan.mc_intervals = 0;
  BigCount tail = 1;
  for (std::size_t i = plan.rounds.size(); i-- > 0;) {
    auto& r = plan.rounds[i];
    r.epsilon = tail;
    tail *= r.phi;
    r.zeta = prod / r.phi;
    plan.z_mc += r.zeta * r.lambda * r.stream_sum;
    plan.mc_intervals += r.zeta * r.s_count;
  }
  plan.z_uc = plan.z_total - plan.z_mc;
  plan.uc_intervals = Rational(plan.z_uc, BigCount(L));
  plan.uc_interval_count = ceil(plan.uc_intervals);
  plan.dof = Rational(plan.z_total) / (Rational(plan.mc_intervals) + plan.uc_intervals);

  // Unicast supply: T intervals can carry at most sum_k min(r_k, G_k T) streams.
  BigCount per_user_missing = plan.z_total / k;
  BigCount supply = 0;
  for (std::size_t j = 0; j < cfg.group_count(); ++j) {
    BigCount left = per_user_missing;
    for (const auto& r : plan.rounds)
      for (std::size_t m = 0; m < r.groups.size(); ++m)
        if (r.groups[m] == j) left -= r.zeta * r.lambda * r.streams[m];
    BigCount cap = BigCount(cfg.groups()[j].gain) * plan.uc_interval_count;
    supply += (left < cap ? left : cap) * cfg.groups()[j].count;
  }
  plan.uc_supply_binds = supply < plan.z_uc;
}

inline PhantomPlan plan_from_rounds(const NetworkConfig& cfg, PolicyKind policy, std::vector<PhantomRound> rounds) {
  PhantomPlan plan;
  plan.policy = policy;
  plan.rounds = std::move(rounds);
  plan.feasible = !plan.rounds.empty();
  if (!plan.feasible) {
    plan.reason = "no admissible first round";
    return plan;
  }
  finalize_plan(cfg, plan);
  for (std::size_t n = 1; n <= plan.rounds.size(); ++n) {
    if (n == plan.rounds.size()) {
      plan.dof_by_rounds.push_back(plan.dof);
      break;
    }
    PhantomPlan prefix;
    prefix.policy = policy;
    prefix.rounds.assign(plan.rounds.begin(), plan.rounds.begin() + static_cast<std::ptrdiff_t>(n));
    finalize_plan(cfg, prefix);
    plan.dof_by_rounds.push_back(prefix.dof);
  }
  return plan;
}

/// Greedy continuation after a fixed first round. Each later round maximizes its own
/// contribution (lambda*B - L*S)/phi, never delivering more than a user still has deferred.
inline std::vector<PhantomRound> extend_rounds(const NetworkConfig& cfg, PolicyKind policy, PhantomRound first,
                                               const PhantomOptions& opt, std::string* stop) {
  std::vector<PhantomRound> rounds{std::move(first)};
  const BigCount vartheta = placement_split(policy, cfg.user_count(), cfg.cache_gain());
  std::vector<Rational> delivered(cfg.group_count(), Rational(0));
  auto account = [&](const PhantomRound& r) {
    for (std::size_t m = 0; m < r.groups.size(); ++m)
      delivered[r.groups[m]] += delivered_share(cfg, r, vartheta, r.streams[m]);
  };
  account(rounds.front());
  while (opt.max_rounds == 0 || rounds.size() < opt.max_rounds) {
    auto shape = next_shape(cfg, rounds.back(), opt, stop);
    if (!shape) break;
    std::optional<PhantomRound> best;
    Rational best_gain;
    for (auto pair : round_candidates(policy, shape->users, shape->cache_gain, cfg.tx_gain(), 1, shape->max_gain)) {
      PhantomRound r = make_round(policy, cfg, *shape, pair, rounds.size() + 1);
      bool fits = true;
      for (std::size_t m = 0; m < r.groups.size() && fits; ++m)
        fits = delivered[r.groups[m]] + delivered_share(cfg, r, vartheta, r.streams[m]) <= 1;
      if (!fits) continue;
      Rational gain = Rational(r.lambda * r.stream_sum - r.s_count * cfg.tx_gain()) / Rational(r.phi);
      if (!best || gain > best_gain) {
        best = std::move(r);
        best_gain = gain;
      }
    }
    if (!best) {
      *stop = "no admissible pair in round " + std::to_string(rounds.size() + 1);
      break;
    }
    if (best_gain <= 0) {
      *stop = "round " + std::to_string(rounds.size() + 1) + " would not beat unicast";
      break;
    }
    account(*best);
    rounds.push_back(std::move(*best));
  }
  if (opt.max_rounds != 0 && rounds.size() == opt.max_rounds && stop->empty())
    *stop = "stopped after " + std::to_string(opt.max_rounds) + " round(s)";
  return rounds;
}

inline RoundShape first_shape(const NetworkConfig& cfg) {
  RoundShape s;
  for (std::size_t j = 0; j < cfg.group_count(); ++j) s.groups.push_back(j);
  s.users = cfg.user_count();
  s.max_gain = cfg.max_gain();
  s.cache_gain = cfg.cache_gain();
  return s;
}

}  // namespace detail

/// f(K_hat, K) = C(K_hat-1, t) / C(K-1, t), evaluated as a product of t ratios.
inline Rational multiplicative_ratio(std::int64_t round_users, std::int64_t users, std::int64_t cache_gain) {
  Rational f = 1;
  for (std::int64_t l = 0; l < cache_gain; ++l) f *= Rational(BigCount(round_users - 1 - l), BigCount(users - 1 - l));
  return f;
}

/// Single-round Phantom DoF at (Omega, beta_hat); std::nullopt when the pair is not admissible.
/// For cmb and lin Omega must equal t + min(floor(L/beta_hat), K - t).
inline std::optional<Rational> sph_dof(const NetworkConfig& cfg, PolicyKind policy, std::int64_t omega,
                                       std::int64_t beta_hat) {
  const std::int64_t k = cfg.user_count(), t = cfg.cache_gain(), L = cfg.tx_gain();
  if (beta_hat < 1 || omega < t + 1 || omega > k) return std::nullopt;
  if (policy == PolicyKind::Opt) {
    if (omega > t + L || opt_beta_bound(L, t, omega, beta_hat) < beta_hat) return std::nullopt;
  } else {
    if (L / beta_hat < 1) return std::nullopt;
    if (policy == PolicyKind::Lin && L / beta_hat < t) return std::nullopt;
    if (omega != parallel_links_omega(k, t, L, beta_hat)) return std::nullopt;
  }
  Rational streams = 0;
  for (const auto& g : cfg.groups()) streams += Rational(g.count * std::min(beta_hat, g.gain));
  Rational drop = (streams - Rational(L * k, omega)) / Rational(k * beta_hat);
  return Rational(L) / (1 - drop);
}

struct SphCell {
  std::int64_t omega = 0;
  std::int64_t beta_hat = 0;
  std::optional<Rational> dof;
};

struct SphResult {
  std::int64_t omega = 0;
  std::int64_t beta_hat = 0;
  Rational dof;
  BigCount theta;  // subpacketization of the chosen operating point
  std::vector<SphCell> grid;
};

/// Exhaustive single-round search; ties prefer smaller beta_hat, then smaller Omega.
inline SphResult sph_optimize(const NetworkConfig& cfg, PolicyKind policy) {
  const std::int64_t k = cfg.user_count(), t = cfg.cache_gain(), L = cfg.tx_gain();
  SphResult res;
  bool found = false;
  for (std::int64_t b = 1; b <= cfg.max_gain(); ++b) {
    std::vector<std::int64_t> omegas;
    if (policy == PolicyKind::Opt) {
      for (std::int64_t om = t + 1; om <= std::min(k, t + L); ++om) omegas.push_back(om);
    } else if (L / b >= 1) {
      omegas.push_back(parallel_links_omega(k, t, L, b));
    }
    for (std::int64_t om : omegas) {
      SphCell cell{om, b, sph_dof(cfg, policy, om, b)};
      if (cell.dof && (!found || *cell.dof > res.dof)) {
        found = true;
        res.omega = om;
        res.beta_hat = b;
        res.dof = *cell.dof;
      }
      res.grid.push_back(std::move(cell));
    }
  }
  if (!found) throw Error(ErrorCode::InvalidParameter, "no admissible single-round operating point");
  PhantomRound r = detail::make_round(policy, cfg, detail::first_shape(cfg), {res.omega, res.beta_hat}, 1);
  res.theta = detail::placement_split(policy, k, t) * r.phi;
  return res;
}

/// Evaluates a fixed round schedule with the general interval-counting formula.
inline PhantomPlan phantom_evaluate(const NetworkConfig& cfg, PolicyKind policy, std::vector<PhantomRound> rounds) {
  return detail::plan_from_rounds(cfg, policy, std::move(rounds));
}

/// Builds a round for the given users (group indices) at (Omega, beta_hat).
inline PhantomRound phantom_round(const NetworkConfig& cfg, PolicyKind policy, std::vector<std::size_t> groups,
                                  std::int64_t omega, std::int64_t beta_hat, std::size_t index,
                                  std::int64_t cache_gain = -1) {
  detail::RoundShape s;
  s.groups = std::move(groups);
  for (std::size_t j : s.groups) {
    s.users += cfg.groups()[j].count;
    s.max_gain = std::max(s.max_gain, cfg.groups()[j].gain);
  }
  s.cache_gain = cache_gain < 0 ? cfg.cache_gain() : cache_gain;
  return detail::make_round(policy, cfg, s, {omega, beta_hat}, index);
}

/// Multi-round Phantom plan. The first round is chosen by maximizing the DoF of the
/// whole plan over admissible (Omega, beta_hat) with beta_hat above the smallest gain
/// (so weaker users actually carry phantom streams); later rounds are greedy.
inline PhantomPlan phantom_plan(const NetworkConfig& cfg, PolicyKind policy, const PhantomOptions& opt = {}) {
  const auto shape = detail::first_shape(cfg);
  const std::int64_t lo = cfg.max_gain() > cfg.min_gain() ? cfg.min_gain() + 1 : 1;
  std::optional<PhantomPlan> best;
  std::string best_stop;
  for (auto pair : detail::round_candidates(policy, shape.users, shape.cache_gain, cfg.tx_gain(), lo, cfg.max_gain())) {
    std::string stop;
    auto rounds = detail::extend_rounds(cfg, policy, detail::make_round(policy, cfg, shape, pair, 1), opt, &stop);
    PhantomPlan plan = detail::plan_from_rounds(cfg, policy, std::move(rounds));
    if (!best || plan.dof > best->dof) {
      best = std::move(plan);
      best_stop = stop;
    }
  }
  if (!best) {
    PhantomPlan none;
    none.policy = policy;
    none.reason = "no admissible first-round operating point";
    return none;
  }
  best->reason = best_stop;
  return *best;
}

/// Policy-specific closed form for a fixed round schedule; must agree exactly with
/// phantom_evaluate on the same rounds (global cache gain).
inline Rational phantom_closed_form(const NetworkConfig& cfg, PolicyKind policy, const std::vector<PhantomRound>& rounds) {
  const std::int64_t k = cfg.user_count(), t = cfg.cache_gain(), L = cfg.tx_gain();
  Rational drop = 0;
  for (const auto& r : rounds) {
    Rational b(r.stream_sum);
    if (policy == PolicyKind::Lin) {
      drop += Rational(r.users - t, k * (k - t) * r.beta_hat) * (b - Rational(L * r.users, r.omega));
    } else {
      Rational f = multiplicative_ratio(r.users, k, t);
      drop += f / Rational(k * r.omega * r.beta_hat) * (Rational(r.omega) * b - Rational(L * r.users));
    }
  }
  return Rational(L) / (1 - drop);
}

}  // namespace mimocc
