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

// Independent reference computations for the test suites. Nothing here calls into
// the library's formulas: binomials come from Pascal's triangle, operating points
// from full-grid search, partitions from bitmask enumeration, and Phantom DoF from
// explicit interval counting.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using Int = boost::multiprecision::cpp_int;
using Q = boost::multiprecision::cpp_rational;

/// Pascal's triangle up to row n_max.
class Pascal {
 public:
  explicit Pascal(int n_max) : rows_(static_cast<std::size_t>(n_max) + 1) {
    for (int n = 0; n <= n_max; ++n) {
      auto& row = rows_[static_cast<std::size_t>(n)];
      row.assign(static_cast<std::size_t>(n) + 1, Int(1));
      for (int k = 1; k < n; ++k) row[static_cast<std::size_t>(k)] = rows_[n - 1][k - 1] + rows_[n - 1][k];
    }
  }
  Int operator()(std::int64_t n, std::int64_t k) const {
    if (n < 0 || k < 0 || k > n) return 0;
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
  }

 private:
  std::vector<std::vector<Int>> rows_;
};

inline const Pascal& C() {
  static const Pascal p(400);
  return p;
}

struct Point {
  std::int64_t omega = 0;
  std::int64_t beta = 0;
};

/// Full (Omega, beta) grid: beta * (1 + (Omega - t - 1) * C(Omega-1, t)) <= L * C(Omega-1, t),
/// beta <= min(G, L). Largest Omega*beta wins; ties go to the smaller Omega.
inline std::optional<Point> best_opt_point(std::int64_t K, std::int64_t t, std::int64_t L, std::int64_t G) {
  std::optional<Point> best;
  const std::int64_t cap = std::min(G, L);
  for (std::int64_t om = t + 1; om <= K; ++om) {
    Int c = C()(om - 1, t);
    for (std::int64_t b = 1; b <= cap; ++b) {
      if (b * (1 + (om - t - 1) * c) > L * c) continue;
      if (!best || om * b > best->omega * best->beta) best = Point{om, b};
    }
  }
  return best;
}

/// Symmetric DoF of each reference policy, from scratch.
inline std::optional<Q> symmetric_dof(int policy, std::int64_t K, std::int64_t t, std::int64_t L, std::int64_t G) {
  const std::int64_t g = std::min(G, L);
  if (policy == 0) {
    auto p = best_opt_point(K, t, L, g);
    if (!p) return std::nullopt;
    return Q(p->omega * p->beta);
  }
  if (policy == 2 && L / g < t) return std::nullopt;
  return Q((t + std::min(L / g, K - t)) * g);
}

struct Group {
  std::int64_t count;
  std::int64_t gain;
};

/// Harmonic combination of orthogonally served blocks; std::nullopt when any block is infeasible.
inline std::optional<Q> blocks_dof(int policy, const std::vector<Group>& blocks, const Q& gamma, std::int64_t L) {
  Q inv = 0;
  std::int64_t total = 0;
  for (const auto& b : blocks) {
    Q t = gamma * b.count;
    if (denominator(t) != 1) return std::nullopt;
    auto d = symmetric_dof(policy, b.count, static_cast<std::int64_t>(numerator(t)), L, b.gain);
    if (!d || numerator(t) < 1 || numerator(t) >= b.count) return std::nullopt;
    inv += Q(b.count) / *d;
    total += b.count;
  }
  return Q(total) / inv;
}

/// Every consecutive partition, encoded by a bitmask of cut positions.
struct PartitionValue {
  unsigned cuts = 0;
  std::optional<Q> dof;
};

inline std::vector<PartitionValue> all_consecutive(int policy, const std::vector<Group>& groups, const Q& gamma,
                                                   std::int64_t L) {
  const std::size_t J = groups.size();
  std::vector<PartitionValue> out;
  for (unsigned mask = 0; mask < (1u << (J - 1)); ++mask) {
    std::vector<Group> blocks;
    Group cur{0, 0};
    for (std::size_t j = 0; j < J; ++j) {
      if (cur.count == 0) cur.gain = groups[j].gain;
      cur.count += groups[j].count;
      cur.gain = std::min(cur.gain, groups[j].gain);
      if (j + 1 == J || (mask >> j & 1)) {
        blocks.push_back(cur);
        cur = {0, 0};
      }
    }
    out.push_back({mask, blocks_dof(policy, blocks, gamma, L)});
  }
  return out;
}

/// Round description for explicit interval counting.
struct Round {
  std::vector<std::size_t> groups;
  std::int64_t omega;
  std::int64_t beta_hat;
};

/// Counts subpackets and intervals of a multi-round Phantom schedule at the common
/// subpacketization and returns (total delivered) / (multicast + unicast/L intervals).
inline Q phantom_general(int policy, const std::vector<Group>& groups, const Q& gamma, std::int64_t L,
                         const std::vector<Round>& rounds) {
  std::int64_t K = 0;
  for (const auto& g : groups) K += g.count;
  const auto t = static_cast<std::int64_t>(numerator(Q(gamma * K)));
  auto& c = C();
  struct Counts {
    Int phi, s, lambda, streams;
  };
  std::vector<Counts> counts;
  Int prod = 1;
  for (const auto& r : rounds) {
    std::int64_t n = 0;
    Int streams = 0;
    for (auto j : r.groups) {
      n += groups[j].count;
      streams += Int(groups[j].count) * std::min(r.beta_hat, groups[j].gain);
    }
    Counts x;
    if (policy == 2) {
      x.phi = Int(r.beta_hat) * r.omega;
      x.s = Int(n) * (n - t);
      x.lambda = Int(n - t) * r.omega;
    } else {
      x.phi = c(n - t - 1, r.omega - t - 1) * r.beta_hat;
      x.s = c(n, r.omega) * c(r.omega - 1, t);
      x.lambda = c(n - 1, r.omega - 1) * c(r.omega - 1, t);
    }
    x.streams = streams;
    prod *= x.phi;
    counts.push_back(x);
  }
  Int vartheta = policy == 2 ? Int(K) : c(K, t);
  Int z = Int(K - t) * vartheta * prod;
  Int mc_streams = 0, mc_intervals = 0;
  for (const auto& x : counts) {
    Int zeta = prod / x.phi;
    mc_streams += zeta * x.lambda * x.streams;
    mc_intervals += zeta * x.s;
  }
  return Q(z) / (Q(mc_intervals) + Q(z - mc_streams, Int(L)));
}

/// Deterministic generator for randomized configurations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
  }

 private:
  std::mt19937_64 eng_;
};

/// Random sorted groups with every K_j a multiple of `den`, so each K_j * (1/den) is integral.
inline std::vector<Group> random_groups(Rng& rng, std::size_t J, std::int64_t den, std::int64_t max_mult,
                                        std::int64_t max_gain) {
  std::vector<std::int64_t> gains;
  std::int64_t g = 0;
  for (std::size_t j = 0; j < J; ++j) {
    g += rng.uniform(1, std::max<std::int64_t>(1, max_gain / static_cast<std::int64_t>(J)));
    gains.push_back(g);
  }
  std::vector<Group> out;
  for (std::size_t j = 0; j < J; ++j) out.push_back({den * rng.uniform(1, max_mult), gains[j]});
  return out;
}

}  // namespace oracle
