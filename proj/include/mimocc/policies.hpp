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

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "mimocc/core.hpp"

namespace mimocc {

/// Reference symmetric delivery policies.
enum class PolicyKind { Opt, Cmb, Lin };

inline constexpr std::array<PolicyKind, 3> kAllPolicies = {PolicyKind::Opt, PolicyKind::Cmb, PolicyKind::Lin};

inline std::string_view to_string(PolicyKind p) {
  switch (p) {
    case PolicyKind::Opt: return "opt";
    case PolicyKind::Cmb: return "cmb";
    case PolicyKind::Lin: return "lin";
  }
  return "?";
}

inline std::optional<PolicyKind> parse_policy(std::string_view s) {
  if (s == "opt") return PolicyKind::Opt;
  if (s == "cmb") return PolicyKind::Cmb;
  if (s == "lin") return PolicyKind::Lin;
  return std::nullopt;
}

/// One symmetric policy evaluated on a homogeneous (K, gamma, L, G) instance.
struct PolicyOutcome {
  PolicyKind policy = PolicyKind::Opt;
  std::int64_t users = 0;       // K
  std::int64_t cache_gain = 0;  // t
  std::int64_t tx_gain = 0;     // L
  std::int64_t rx_gain = 0;     // G as used by the policy (capped at L)

  std::int64_t omega = 0;  // users served per transmission
  std::int64_t beta = 0;   // streams per served user
  Rational dof;
  BigCount theta;     // final subpacketization
  BigCount s_count;   // transmission intervals
  BigCount lambda;    // intervals that serve a fixed user
  BigCount phi;       // delivery-phase split factor
  BigCount vartheta;  // placement split factor
  bool feasible = false;
  std::string reason;  // set when infeasible
};

/// Largest beta admitted by linear decodability for (L, t, Omega, delta).
/// std::nullopt means unbounded (Omega == t + 1); the caller caps by G.
inline std::optional<std::int64_t> decodability_beta_bound(std::int64_t tx_gain, std::int64_t cache_gain,
                                                           std::int64_t omega, std::int64_t delta) {
  if (omega < cache_gain + 1) throw Error(ErrorCode::InvalidParameter, "omega must be at least t + 1");
  if (omega == cache_gain + 1) return std::nullopt;
  std::int64_t num = tx_gain - delta;
  if (num <= 0) return 0;
  return num / (omega - cache_gain - 1);
}

inline bool passes_decodability(std::int64_t tx_gain, std::int64_t cache_gain, std::int64_t omega,
                                std::int64_t beta, std::int64_t delta) {
  auto bound = decodability_beta_bound(tx_gain, cache_gain, omega, delta);
  return !bound || beta <= *bound;
}

/// floor(min(G, L*C(Omega-1,t) / (1 + (Omega-t-1)*C(Omega-1,t)))): the per-user stream
/// budget that keeps every served user linearly decodable.
inline std::int64_t opt_beta_bound(std::int64_t tx_gain, std::int64_t cache_gain, std::int64_t omega,
                                   std::int64_t rx_gain) {
  BigCount c = binom(omega - 1, cache_gain);
  BigCount num = c * tx_gain;
  BigCount den = 1 + (omega - cache_gain - 1) * c;
  BigCount q = num / den;
  return q >= rx_gain ? rx_gain : static_cast<std::int64_t>(q);
}

struct OmegaBeta {
  std::int64_t omega = 0;
  std::int64_t beta = 0;
  friend bool operator==(const OmegaBeta&, const OmegaBeta&) = default;
};

namespace detail {

inline std::int64_t require_integer_gain(std::int64_t users, const Rational& cache_ratio) {
  Rational t = cache_ratio * users;
  if (!is_integer(t))
    throw Error(ErrorCode::NonIntegerCacheGain, "K*gamma = " + to_fraction_string(t) + " is not an integer");
  if (t < 1 || t >= users)
    throw Error(ErrorCode::InvalidParameter, "cache gain t must satisfy 1 <= t < K");
  return static_cast<std::int64_t>(numerator(t));
}

}  // namespace detail

/// Line search for the DoF-optimal (Omega, beta) with the cache gain already known.
/// Omega ranges over [t+1, min(K, t+L)]; ties go to the smallest Omega.
inline OmegaBeta delta_opt_t(std::int64_t users, std::int64_t cache_gain, std::int64_t tx_gain,
                             std::int64_t rx_gain) {
  OmegaBeta best;
  const std::int64_t hi = std::min(users, cache_gain + tx_gain);
  for (std::int64_t omega = cache_gain + 1; omega <= hi; ++omega) {
    std::int64_t beta = opt_beta_bound(tx_gain, cache_gain, omega, rx_gain);
    if (beta >= 1 && omega * beta > best.omega * best.beta) best = {omega, beta};
  }
  if (best.beta < 1) throw Error(ErrorCode::InvalidParameter, "no admissible (Omega, beta) pair");
  return best;
}

inline OmegaBeta delta_opt(std::int64_t users, const Rational& cache_ratio, std::int64_t tx_gain,
                           std::int64_t rx_gain) {
  return delta_opt_t(users, detail::require_integer_gain(users, cache_ratio), tx_gain, rx_gain);
}

/// Multicast width for cmb/lin: t + min(floor(L/G), K - t). The second term keeps
/// Omega <= K on small groups.
inline std::int64_t parallel_links_omega(std::int64_t users, std::int64_t cache_gain, std::int64_t tx_gain,
                                         std::int64_t rx_gain) {
  return cache_gain + std::min(tx_gain / rx_gain, users - cache_gain);
}

/// Evaluates a reference policy with a known integer cache gain t.
inline PolicyOutcome eval_policy_t(PolicyKind policy, std::int64_t users, std::int64_t cache_gain,
                                   std::int64_t tx_gain, std::int64_t rx_gain) {
  if (users < 2 || cache_gain < 1 || cache_gain >= users || tx_gain < 1 || rx_gain < 1)
    throw Error(ErrorCode::InvalidParameter, "invalid homogeneous instance");
  PolicyOutcome out;
  out.policy = policy;
  out.users = users;
  out.cache_gain = cache_gain;
  out.tx_gain = tx_gain;
  // A user cannot resolve more streams than the transmitter can send.
  out.rx_gain = std::min(rx_gain, tx_gain);
  const std::int64_t k = users, t = cache_gain, g = out.rx_gain;

  switch (policy) {
    case PolicyKind::Opt: {
      auto [omega, beta] = delta_opt_t(k, t, tx_gain, g);
      out.omega = omega;
      out.beta = beta;
      out.vartheta = binom(k, t);
      out.phi = binom(k - t - 1, omega - t - 1) * beta;
      out.s_count = binom(k, omega) * binom(omega - 1, t);
      out.lambda = binom(k - 1, omega - 1) * binom(omega - 1, t);
      break;
    }
    case PolicyKind::Cmb: {
      out.omega = parallel_links_omega(k, t, tx_gain, g);
      out.beta = g;
      out.vartheta = binom(k, t);
      out.phi = binom(k - t - 1, out.omega - t - 1) * g;
      out.s_count = binom(k, out.omega) * binom(out.omega - 1, t);
      out.lambda = binom(k - 1, out.omega - 1) * binom(out.omega - 1, t);
      break;
    }
    case PolicyKind::Lin: {
      if (tx_gain / g < t) {
        out.feasible = false;
        out.reason = "lin requires floor(L/G) >= t (floor(" + std::to_string(tx_gain) + "/" +
                     std::to_string(g) + ") = " + std::to_string(tx_gain / g) + " < " + std::to_string(t) + ")";
        return out;
      }
      out.omega = parallel_links_omega(k, t, tx_gain, g);
      out.beta = g;
      out.vartheta = k;
      out.phi = BigCount(g) * out.omega;
      out.s_count = BigCount(k) * (k - t);
      out.lambda = BigCount(k - t) * out.omega;
      break;
    }
  }
  out.theta = out.vartheta * out.phi;
  out.dof = Rational(out.omega * out.beta);
  out.feasible = true;
  return out;
}

inline PolicyOutcome eval_policy(PolicyKind policy, std::int64_t users, const Rational& cache_ratio,
                                 std::int64_t tx_gain, std::int64_t rx_gain) {
  return eval_policy_t(policy, users, detail::require_integer_gain(users, cache_ratio), tx_gain, rx_gain);
}

}  // namespace mimocc
