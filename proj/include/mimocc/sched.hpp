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

// Counting-level placement and delivery schedules.
//
// Subpackets are tracked as (user, label, q) triples where the label is the
// placement subfile (a t-subset of users, or a cyclic packet index) and q the
// delivery-phase piece index. The schedule never looks at signals; the
// verifier checks that accounting is complete and that every interval obeys
// the linear decodability inequality for the streams it carries.

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "mimocc/core.hpp"
#include "mimocc/phantom.hpp"
#include "mimocc/policies.hpp"

namespace mimocc {

inline constexpr std::uint64_t kScheduleGuard = 1'000'000;  // max subpackets per file

struct HomogeneousInstance {
  std::int64_t users = 0;       // K
  std::int64_t cache_gain = 0;  // t
  std::int64_t tx_gain = 0;     // L
  std::int64_t rx_gain = 0;     // G

  static HomogeneousInstance from_ratio(std::int64_t users, const Rational& gamma, std::int64_t tx_gain,
                                        std::int64_t rx_gain) {
    return {users, detail::require_integer_gain(users, gamma), tx_gain, rx_gain};
  }
  Rational cache_ratio() const { return Rational(cache_gain, users); }
};

class Placement {
 public:
  Placement(PolicyKind policy, std::int64_t users, std::int64_t cache_gain)
      : policy_(policy), users_(users), cache_gain_(cache_gain) {
    if (users < 2 || cache_gain < 1 || cache_gain >= users)
      throw Error(ErrorCode::InvalidParameter, "placement needs 1 <= t < K");
    if (cyclic()) {
      for (std::int64_t p = 0; p < users; ++p) add_label(static_cast<std::uint64_t>(p));
      cached_.resize(static_cast<std::size_t>(users));
      // user k stores packets k-1, k, ..., k+t-2 (mod K)
      for (std::int64_t k = 0; k < users; ++k)
        for (std::int64_t j = 0; j < cache_gain; ++j)
          cached_[static_cast<std::size_t>(k)].push_back(
              static_cast<std::uint32_t>(((k - 1 + j) % users + users) % users));
    } else {
      if (users > 63) throw Error(ErrorCode::GuardExceeded, "subset placement supports at most 63 users");
      if (binom(users, cache_gain) > kScheduleGuard)
        throw Error(ErrorCode::GuardExceeded, "placement has more than 10^6 subfiles");
      // t-subsets as bitmasks; increasing mask value is colex order
      std::uint64_t mask = (std::uint64_t{1} << cache_gain) - 1;
      const std::uint64_t limit = std::uint64_t{1} << users;
      while (mask < limit) {
        add_label(mask);
        std::uint64_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
      }
      cached_.resize(static_cast<std::size_t>(users));
      for (std::uint32_t id = 0; id < labels_.size(); ++id)
        for (std::int64_t k = 0; k < users; ++k)
          if (labels_[id] >> k & 1) cached_[static_cast<std::size_t>(k)].push_back(id);
    }
    for (auto& c : cached_) std::sort(c.begin(), c.end());
  }

  PolicyKind policy() const noexcept { return policy_; }
  bool cyclic() const noexcept { return policy_ == PolicyKind::Lin; }
  std::int64_t users() const noexcept { return users_; }
  std::int64_t cache_gain() const noexcept { return cache_gain_; }
  std::size_t label_count() const noexcept { return labels_.size(); }
  std::uint64_t label_value(std::uint32_t id) const { return labels_[id]; }
  const std::vector<std::uint32_t>& cached(std::size_t user) const { return cached_[user]; }

  bool caches(std::size_t user, std::uint32_t label) const {
    return std::binary_search(cached_[user].begin(), cached_[user].end(), label);
  }

  std::optional<std::uint32_t> find(std::uint64_t value) const {
    auto it = index_.find(value);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  /// Subsets render as one-based members joined by '-' ("1-3"); packets as "p<index>".
  std::string label_name(std::uint32_t id) const {
    if (cyclic()) return "p" + std::to_string(labels_[id] + 1);
    std::string s;
    for (std::int64_t k = 0; k < users_; ++k)
      if (labels_[id] >> k & 1) s += (s.empty() ? "" : "-") + std::to_string(k + 1);
    return s;
  }

  /// Fraction of labels each user stores.
  Rational cached_fraction(std::size_t user) const {
    return Rational(BigCount(cached_[user].size()), BigCount(labels_.size()));
  }

 private:
  void add_label(std::uint64_t v) {
    index_.emplace(v, static_cast<std::uint32_t>(labels_.size()));
    labels_.push_back(v);
  }

  PolicyKind policy_;
  std::int64_t users_;
  std::int64_t cache_gain_;
  std::vector<std::uint64_t> labels_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::vector<std::vector<std::uint32_t>> cached_;
};

inline Placement build_placement(std::int64_t users, std::int64_t cache_gain, PolicyKind policy) {
  return Placement(policy, users, cache_gain);
}

inline Placement build_placement(const NetworkConfig& cfg, PolicyKind policy) {
  return Placement(policy, cfg.user_count(), cfg.cache_gain());
}

struct Delivery {
  std::uint32_t user = 0;
  std::uint32_t label = 0;
  std::uint64_t q = 0;
};

struct Interval {
  std::vector<std::uint32_t> users;  // ascending
  std::vector<Delivery> deliveries;
  bool unicast = false;
};

struct Schedule {
  PolicyKind policy = PolicyKind::Opt;
  std::int64_t users = 0;
  std::int64_t cache_gain = 0;
  std::int64_t tx_gain = 0;
  std::vector<std::int64_t> gains;  // receive gain per user
  std::uint64_t pieces_per_label = 0;
  BigCount theta;  // labels * pieces_per_label
  std::vector<Interval> intervals;
  std::vector<std::string> notes;

  std::uint64_t delivery_count() const {
    std::uint64_t n = 0;
    for (const auto& iv : intervals) n += iv.deliveries.size();
    return n;
  }
};

namespace detail {

/// One multicast interval before subpacket indices are attached: for each served user
/// the labels it is sent (label ids of `placement`, or local packet ids for cyclic passes).
struct SlotPlan {
  std::vector<std::uint32_t> users;
  std::vector<std::vector<std::uint32_t>> labels;  // parallel to users
};

/// Combinatorial pass over `members` (global user ids, ascending): every Omega-subset
/// gets C(Omega-1, t) intervals and every served user gets beta labels per interval,
/// round-robin over the t-subsets of the other members (colex order).
inline void subset_pass(const Placement& placement, const std::vector<std::uint32_t>& members, std::int64_t t,
                        std::int64_t omega, std::int64_t beta, const std::function<void(const SlotPlan&)>& emit) {
  const std::size_t n = members.size();
  const auto om = static_cast<std::size_t>(omega);
  std::vector<std::size_t> pick(om);
  for (std::size_t i = 0; i < om; ++i) pick[i] = i;
  while (true) {
    std::vector<std::uint32_t> subset(om);
    for (std::size_t i = 0; i < om; ++i) subset[i] = members[pick[i]];
    // eligible labels for each user of the subset
    std::vector<std::vector<std::uint32_t>> eligible(om);
    for (std::size_t u = 0; u < om; ++u) {
      std::vector<std::uint32_t> others;
      for (std::size_t v = 0; v < om; ++v)
        if (v != u) others.push_back(subset[v]);
      std::vector<std::uint64_t> masks;
      std::vector<std::size_t> c(static_cast<std::size_t>(t));
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = i;
      while (true) {
        std::uint64_t m = 0;
        for (std::size_t i : c) m |= std::uint64_t{1} << others[i];
        masks.push_back(m);
        std::size_t i = c.size();
        while (i > 0 && c[i - 1] == others.size() - c.size() + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < c.size(); ++j) c[j] = c[j - 1] + 1;
      }
      std::sort(masks.begin(), masks.end());
      for (auto m : masks) eligible[u].push_back(*placement.find(m));
    }
    const std::size_t slots = eligible[0].size();
    for (std::size_t s = 0; s < slots; ++s) {
      SlotPlan plan;
      plan.users = subset;
      plan.labels.resize(om);
      for (std::size_t u = 0; u < om; ++u)
        for (std::int64_t r = 0; r < beta; ++r)
          plan.labels[u].push_back(eligible[u][(s * static_cast<std::size_t>(beta) + static_cast<std::size_t>(r)) % slots]);
      emit(plan);
    }
    std::size_t i = om;
    while (i > 0 && pick[i - 1] == n - om + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < om; ++j) pick[j] = pick[j - 1] + 1;
  }
}

/// Cyclic pass over `members`: n(n - t) intervals indexed by (row shift r, column shift c).
/// Interval (r, c) serves the Omega members starting at position r; the member at offset d
/// receives beta pieces of its ((c + d) mod (n - t))-th missing packet. Labels are local
/// packet ids (position in `members`).
inline void cyclic_pass(const std::vector<std::uint32_t>& members, std::int64_t t, std::int64_t omega,
                        std::int64_t beta, const std::function<void(const SlotPlan&)>& emit) {
  const auto n = static_cast<std::int64_t>(members.size());
  for (std::int64_t r = 0; r < n; ++r) {
    for (std::int64_t c = 0; c < n - t; ++c) {
      std::vector<std::pair<std::uint32_t, std::uint32_t>> served;
      for (std::int64_t d = 0; d < omega; ++d) {
        std::int64_t u = (r + d) % n;
        std::int64_t packet = (u + t - 1 + (c + d) % (n - t)) % n;
        served.emplace_back(members[static_cast<std::size_t>(u)], static_cast<std::uint32_t>(packet));
      }
      std::sort(served.begin(), served.end());
      SlotPlan plan;
      for (auto [user, packet] : served) {
        plan.users.push_back(user);
        plan.labels.emplace_back(static_cast<std::size_t>(beta), packet);
      }
      emit(plan);
    }
  }
}

inline void run_pass(PolicyKind policy, const Placement& placement, const std::vector<std::uint32_t>& members,
                     std::int64_t t, std::int64_t omega, std::int64_t beta,
                     const std::function<void(const SlotPlan&)>& emit) {
  if (policy == PolicyKind::Lin)
    cyclic_pass(members, t, omega, beta, emit);
  else
    subset_pass(placement, members, t, omega, beta, emit);
}

inline std::uint64_t to_u64_guarded(const BigCount& v, const char* what) {
  if (v > kScheduleGuard)
    throw Error(ErrorCode::GuardExceeded, std::string(what) + " = " + v.str() + " exceeds the 10^6 guard");
  return static_cast<std::uint64_t>(v);
}

}  // namespace detail

/// Explicit schedule for a symmetric instance at (Omega, beta).
inline Schedule build_schedule(const HomogeneousInstance& inst, PolicyKind policy, std::int64_t omega,
                               std::int64_t beta) {
  const std::int64_t k = inst.users, t = inst.cache_gain, L = inst.tx_gain;
  const std::int64_t g = std::min(inst.rx_gain, L);
  if (omega > k) throw Error(ErrorCode::InvalidParameter, "Omega exceeds the number of users");
  if (omega < t + 1) throw Error(ErrorCode::InvalidParameter, "Omega must be at least t + 1");
  if (beta < 1 || beta > g) throw Error(ErrorCode::InvalidParameter, "beta must lie in [1, min(G, L)]");
  if (policy == PolicyKind::Opt) {
    if (omega > t + L || opt_beta_bound(L, t, omega, g) < beta)
      throw Error(ErrorCode::InvalidParameter, "(Omega, beta) violates the decodability bound");
  } else {
    if (policy == PolicyKind::Lin && L / g < t) throw Error(ErrorCode::InvalidParameter, "lin needs floor(L/G) >= t");
    if (beta != g || omega != parallel_links_omega(k, t, L, g))
      throw Error(ErrorCode::InvalidParameter, "cmb/lin fix beta = G and Omega = t + floor(L/G)");
  }
  PhantomRound shape;
  shape.users = k;
  shape.cache_gain = t;
  shape.omega = omega;
  shape.beta_hat = beta;
  detail::fill_round_counts(policy, shape);
  const BigCount vartheta = detail::placement_split(policy, k, t);
  detail::to_u64_guarded(vartheta * shape.phi, "subpacketization");

  Placement placement(policy, k, t);
  Schedule sched;
  sched.policy = policy;
  sched.users = k;
  sched.cache_gain = t;
  sched.tx_gain = L;
  sched.gains.assign(static_cast<std::size_t>(k), inst.rx_gain);
  sched.pieces_per_label = static_cast<std::uint64_t>(shape.phi);
  sched.theta = vartheta * shape.phi;

  std::vector<std::uint64_t> next_q(static_cast<std::size_t>(k) * placement.label_count(), 0);
  std::vector<std::uint32_t> members(static_cast<std::size_t>(k));
  for (std::uint32_t u = 0; u < members.size(); ++u) members[u] = u;
  detail::run_pass(policy, placement, members, t, omega, beta, [&](const detail::SlotPlan& plan) {
    Interval iv;
    iv.users = plan.users;
    for (std::size_t u = 0; u < plan.users.size(); ++u)
      for (std::uint32_t label : plan.labels[u]) {
        auto& q = next_q[plan.users[u] * placement.label_count() + label];
        iv.deliveries.push_back({plan.users[u], label, q++});
      }
    sched.intervals.push_back(std::move(iv));
  });
  return sched;
}

inline Schedule build_schedule(const HomogeneousInstance& inst, PolicyKind policy) {
  auto out = eval_policy_t(policy, inst.users, inst.cache_gain, inst.tx_gain, inst.rx_gain);
  if (!out.feasible) throw Error(ErrorCode::InvalidParameter, out.reason);
  return build_schedule(inst, policy, out.omega, out.beta);
}

/// Materializes a Phantom plan. Everything is counted at the final subpacketization:
/// round-i intervals are replicated zeta_i times, weak users keep their first G_k
/// streams of each interval (ordered by label, then piece) and the rest goes to a
/// per-user deferred ledger. Later rounds draw from that ledger, and whatever is left
/// is packed into unicast intervals of at most L streams and G_k per user.
inline Schedule build_phantom_schedule(const NetworkConfig& cfg, PolicyKind policy, const PhantomPlan& plan) {
  if (!plan.feasible) throw Error(ErrorCode::InvalidParameter, "plan is not feasible");
  detail::to_u64_guarded(plan.theta_final, "final subpacketization");
  for (const auto& r : plan.rounds) {
    detail::to_u64_guarded(r.zeta * r.s_count, "multicast intervals");
    if (r.cache_gain != cfg.cache_gain())
      throw Error(ErrorCode::InvalidParameter, "schedules require the global cache gain in every round");
  }
  const std::int64_t k = cfg.user_count(), t = cfg.cache_gain(), L = cfg.tx_gain();
  Placement placement(policy, k, t);
  const std::size_t labels = placement.label_count();

  Schedule sched;
  sched.policy = policy;
  sched.users = k;
  sched.cache_gain = t;
  sched.tx_gain = L;
  sched.gains = cfg.user_gains();
  sched.theta = plan.theta_final;
  sched.pieces_per_label = static_cast<std::uint64_t>(plan.theta_final / plan.vartheta);

  // first user index of each group
  std::vector<std::uint32_t> group_start;
  std::uint32_t acc = 0;
  for (const auto& g : cfg.groups()) {
    group_start.push_back(acc);
    acc += static_cast<std::uint32_t>(g.count);
  }

  // deferred ledger: per user, label -> sorted piece indices
  std::vector<std::map<std::uint32_t, std::vector<std::uint64_t>>> ledger(static_cast<std::size_t>(k));
  std::uint64_t shortfall = 0;

  for (const auto& r : plan.rounds) {
    std::vector<std::uint32_t> members;
    for (std::size_t j : r.groups)
      for (std::int64_t m = 0; m < cfg.groups()[j].count; ++m) members.push_back(group_start[j] + static_cast<std::uint32_t>(m));
    std::sort(members.begin(), members.end());
    const auto copies = static_cast<std::uint64_t>(r.zeta);
    const auto eps = static_cast<std::uint64_t>(r.epsilon);
    std::vector<std::uint64_t> next_q(static_cast<std::size_t>(k) * labels, 0);

    detail::run_pass(policy, placement, members, t, r.omega, r.beta_hat, [&](const detail::SlotPlan& slot) {
      if (r.index == 1) {
        // coarse piece q1 in [phi_1]; fine piece = q1 * epsilon_1 + copy
        std::vector<std::vector<std::pair<std::uint32_t, std::uint64_t>>> items(slot.users.size());
        for (std::size_t u = 0; u < slot.users.size(); ++u) {
          for (std::uint32_t label : slot.labels[u]) items[u].emplace_back(label, next_q[slot.users[u] * labels + label]++);
          std::sort(items[u].begin(), items[u].end());
        }
        for (std::uint64_t c = 0; c < eps; ++c) {
          Interval iv;
          iv.users = slot.users;
          for (std::size_t u = 0; u < slot.users.size(); ++u) {
            const std::uint32_t user = slot.users[u];
            const auto keep = static_cast<std::size_t>(std::min<std::int64_t>(r.beta_hat, sched.gains[user]));
            for (std::size_t x = 0; x < items[u].size(); ++x) {
              std::uint64_t fine = items[u][x].second * eps + c;
              if (x < keep)
                iv.deliveries.push_back({user, items[u][x].first, fine});
              else
                ledger[user][items[u][x].first].push_back(fine);
            }
          }
          sched.intervals.push_back(std::move(iv));
        }
        return;
      }
      for (std::uint64_t c = 0; c < copies; ++c) {
        Interval iv;
        iv.users = slot.users;
        for (std::size_t u = 0; u < slot.users.size(); ++u) {
          const std::uint32_t user = slot.users[u];
          const auto keep = static_cast<std::size_t>(std::min<std::int64_t>(r.beta_hat, sched.gains[user]));
          std::uint64_t member_mask = 0;
          for (auto m : members)
            if (m != user) member_mask |= std::uint64_t{1} << m;
          for (std::size_t x = 0; x < keep && x < slot.labels[u].size(); ++x) {
            auto& pool = ledger[user];
            auto take = [&](std::map<std::uint32_t, std::vector<std::uint64_t>>::iterator it) {
              iv.deliveries.push_back({user, it->first, it->second.front()});
              it->second.erase(it->second.begin());
              if (it->second.empty()) pool.erase(it);
            };
            auto it = policy == PolicyKind::Lin ? pool.end() : pool.find(slot.labels[u][x]);
            if (it != pool.end()) {
              take(it);
              continue;
            }
            auto alt = std::find_if(pool.begin(), pool.end(), [&](const auto& e) {
              return placement.cyclic() || (placement.label_value(e.first) & ~member_mask) == 0;
            });
            if (alt == pool.end()) {
              ++shortfall;
              continue;
            }
            take(alt);
          }
        }
        sched.intervals.push_back(std::move(iv));
      }
    });
  }
  if (shortfall) sched.notes.push_back("deferred ledger exhausted for " + std::to_string(shortfall) + " stream(s)");

  // unicast packing: fullest users first, at most G_k per user and L per interval
  std::vector<std::uint64_t> remaining(static_cast<std::size_t>(k), 0);
  for (std::size_t u = 0; u < ledger.size(); ++u)
    for (const auto& [label, qs] : ledger[u]) remaining[u] += qs.size();
  bool supply_bound = false;
  while (true) {
    std::vector<std::uint32_t> order;
    for (std::uint32_t u = 0; u < remaining.size(); ++u)
      if (remaining[u]) order.push_back(u);
    if (order.empty()) break;
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return remaining[a] > remaining[b]; });
    Interval iv;
    iv.unicast = true;
    std::int64_t room = L;
    for (std::uint32_t u : order) {
      if (room == 0) break;
      auto take = std::min<std::int64_t>({room, sched.gains[u], static_cast<std::int64_t>(remaining[u])});
      for (std::int64_t x = 0; x < take; ++x) {
        auto it = ledger[u].begin();
        iv.deliveries.push_back({u, it->first, it->second.front()});
        it->second.erase(it->second.begin());
        if (it->second.empty()) ledger[u].erase(it);
      }
      remaining[u] -= static_cast<std::uint64_t>(take);
      room -= take;
      iv.users.push_back(u);
    }
    std::sort(iv.users.begin(), iv.users.end());
    bool more_left = std::any_of(remaining.begin(), remaining.end(), [](auto r) { return r > 0; });
    if (room > 0 && more_left) supply_bound = true;
    sched.intervals.push_back(std::move(iv));
  }
  if (supply_bound) sched.notes.push_back("unicast supply constraint left some intervals below L streams");
  return sched;
}

// ---------------------------------------------------------------------------
// Verification

struct Expectation {
  BigCount intervals;
  Rational dof;
};

inline Expectation expectation_for(const PolicyOutcome& out) { return {out.s_count, out.dof}; }

inline Expectation expectation_for(const PhantomPlan& plan) {
  return {plan.mc_intervals + plan.uc_interval_count, plan.dof};
}

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  Rational empirical_dof;  // unicast intervals charged at occupancy / L
  Rational airtime;
  BigCount interval_count;
  std::uint64_t deliveries = 0;

  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
  }
  const CheckResult* find(std::string_view name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
};

/// Independent audit of a schedule against its placement and the expected counts.
/// Never throws on a bad schedule; every failure lands in the report.
inline VerificationReport verify_schedule(const Schedule& sched, const Placement& placement, const Expectation& expected) {
  VerificationReport rep;
  const std::size_t k = static_cast<std::size_t>(sched.users);
  const std::size_t labels = placement.label_count();
  const std::uint64_t pieces = sched.pieces_per_label;
  const std::int64_t t = sched.cache_gain, L = sched.tx_gain;

  auto user_name = [](std::uint32_t u) { return std::to_string(u + 1); };
  auto triple = [&](std::uint32_t u, std::uint32_t label, std::uint64_t q) {
    return "(user " + user_name(u) + ", label " + placement.label_name(label) + ", q " + std::to_string(q) + ")";
  };

  CheckResult complete{"completeness", true, ""};
  CheckResult unique{"no-duplicates", true, ""};
  CheckResult local{"interval-constraints", true, ""};
  auto fail = [](CheckResult& c, const std::string& why) {
    if (c.passed) c.detail = why;
    c.passed = false;
  };

  if (static_cast<std::uint64_t>(k) * labels * pieces > 64ull * kScheduleGuard) {
    fail(complete, "schedule too large to audit");
    rep.checks = {complete};
    return rep;
  }
  std::vector<std::uint8_t> seen(k * labels * pieces, 0);

  for (std::size_t s = 0; s < sched.intervals.size(); ++s) {
    const auto& iv = sched.intervals[s];
    const std::string where = "interval " + std::to_string(s + 1);
    std::map<std::uint32_t, std::map<std::uint32_t, std::int64_t>> per_user;  // user -> label -> count
    std::int64_t streams = 0;
    for (const auto& d : iv.deliveries) {
      ++rep.deliveries;
      ++streams;
      if (d.user >= k || d.label >= labels || d.q >= pieces) {
        fail(complete, where + ": delivery out of range " + triple(d.user, d.label, d.q));
        continue;
      }
      if (placement.caches(d.user, d.label)) fail(complete, where + ": sends a cached label " + triple(d.user, d.label, d.q));
      if (!std::binary_search(iv.users.begin(), iv.users.end(), d.user))
        fail(local, where + ": user " + user_name(d.user) + " is not in the target set");
      auto& cell = seen[(d.user * labels + d.label) * pieces + d.q];
      if (cell) fail(unique, "duplicate " + triple(d.user, d.label, d.q) + " in " + where);
      cell = 1;
      ++per_user[d.user][d.label];
    }
    if (std::adjacent_find(iv.users.begin(), iv.users.end()) != iv.users.end())
      fail(local, where + ": repeated user in the target set");
    const auto omega = static_cast<std::int64_t>(iv.users.size());
    rep.airtime += iv.unicast ? Rational(streams, L) : Rational(1);
    if (iv.unicast) {
      if (streams > L) fail(local, where + ": unicast interval carries " + std::to_string(streams) + " > L streams");
    }
    for (const auto& [user, by_label] : per_user) {
      std::int64_t beta = 0, delta = 0;
      for (const auto& [label, n] : by_label) {
        beta += n;
        delta = std::max(delta, n);
      }
      if (beta > sched.gains[user])
        fail(local, where + ": user " + user_name(user) + " gets " + std::to_string(beta) + " streams, gain " +
                        std::to_string(sched.gains[user]));
      if (!iv.unicast && !passes_decodability(L, t, omega, beta, delta))
        fail(local, where + ": user " + user_name(user) + " violates beta <= (L - delta)/(Omega - t - 1) with beta=" +
                        std::to_string(beta) + ", delta=" + std::to_string(delta) + ", Omega=" + std::to_string(omega));
    }
  }
  for (std::size_t u = 0; u < k && complete.passed; ++u)
    for (std::uint32_t label = 0; label < labels && complete.passed; ++label) {
      if (placement.caches(u, label)) continue;
      for (std::uint64_t q = 0; q < pieces; ++q)
        if (!seen[(u * labels + label) * pieces + q]) {
          fail(complete, "missing " + triple(static_cast<std::uint32_t>(u), label, q));
          break;
        }
    }

  rep.interval_count = sched.intervals.size();
  CheckResult count{"interval-count", rep.interval_count == expected.intervals, ""};
  count.detail = "got " + rep.interval_count.str() + ", expected " + expected.intervals.str();
  if (rep.airtime > 0) rep.empirical_dof = Rational(BigCount(rep.deliveries)) / rep.airtime;
  CheckResult dof{"dof", rep.airtime > 0 && rep.empirical_dof == expected.dof, ""};
  dof.detail = "empirical " + to_fraction_string(rep.empirical_dof) + ", expected " + to_fraction_string(expected.dof);
  if (rep.airtime != Rational(rep.interval_count) && rep.interval_count > 0)
    dof.detail += ", whole intervals " + to_fraction_string(Rational(BigCount(rep.deliveries), rep.interval_count));
  rep.checks = {complete, unique, local, count, dof};
  return rep;
}

/// One line per interval: `s;user:label.q,label.q|user:...` with one-based s and users.
inline void dump_schedule(std::ostream& os, const Schedule& sched, const Placement& placement) {
  for (std::size_t s = 0; s < sched.intervals.size(); ++s) {
    const auto& iv = sched.intervals[s];
    os << s + 1 << ';';
    bool first_user = true;
    for (std::uint32_t u : iv.users) {
      if (!first_user) os << '|';
      first_user = false;
      os << u + 1 << ':';
      bool first = true;
      for (const auto& d : iv.deliveries) {
        if (d.user != u) continue;
        if (!first) os << ',';
        first = false;
        os << placement.label_name(d.label) << '.' << d.q;
      }
    }
    os << '\n';
  }
}

}  // namespace mimocc
