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

#include <gtest/gtest.h>

#include <sstream>

#include "mimocc/sched.hpp"
#include "oracles.hpp"

using namespace mimocc;

TEST(Placement, SubsetLabels) {
  auto pl = build_placement(4, 2, PolicyKind::Opt);
  EXPECT_EQ(pl.label_count(), 6u);
  std::vector<std::string> names;
  for (auto id : pl.cached(0)) names.push_back(pl.label_name(id));
  EXPECT_EQ(names, (std::vector<std::string>{"1-2", "1-3", "1-4"}));
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(pl.cached_fraction(k), Rational(1, 2));
}

TEST(Placement, CyclicPackets) {
  auto pl = build_placement(4, 1, PolicyKind::Lin);
  EXPECT_EQ(pl.label_count(), 4u);
  EXPECT_EQ(pl.label_name(pl.cached(0).at(0)), "p4");
  EXPECT_EQ(pl.label_name(pl.cached(1).at(0)), "p1");
  EXPECT_EQ(pl.label_name(pl.cached(3).at(0)), "p3");
  auto pl2 = build_placement(4, 2, PolicyKind::Lin);
  for (std::size_t k = 0; k < 4; ++k) EXPECT_EQ(pl2.cached_fraction(k), Rational(1, 2));
}

TEST(Placement, CacheRatioInvariant) {
  for (std::int64_t K = 2; K <= 12; ++K)
    for (std::int64_t t = 1; t < K; ++t)
      for (auto p : kAllPolicies) {
        auto pl = build_placement(K, t, p);
        for (std::size_t k = 0; k < static_cast<std::size_t>(K); ++k) ASSERT_EQ(pl.cached_fraction(k), Rational(t, K));
      }
}

TEST(Schedule, SmallOptInstance) {
  HomogeneousInstance inst{4, 2, 1, 1};
  auto s = build_schedule(inst, PolicyKind::Opt, 3, 1);
  EXPECT_EQ(s.intervals.size(), 4u);
  EXPECT_EQ(s.delivery_count(), 12u);
  auto rep = verify_schedule(s, build_placement(4, 2, PolicyKind::Opt), expectation_for(eval_policy_t(PolicyKind::Opt, 4, 2, 1, 1)));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.empirical_dof, 3);
}

TEST(Schedule, SmallLinInstance) {
  auto inst = HomogeneousInstance::from_ratio(4, Rational(1, 4), 2, 1);
  auto s = build_schedule(inst, PolicyKind::Lin);
  EXPECT_EQ(s.intervals.size(), 12u);
  std::vector<std::uint64_t> per_user(4, 0);
  for (const auto& iv : s.intervals)
    for (const auto& d : iv.deliveries) ++per_user[d.user];
  for (auto n : per_user) EXPECT_EQ(n, 9u);
  auto rep = verify_schedule(s, build_placement(4, 1, PolicyKind::Lin), expectation_for(eval_policy_t(PolicyKind::Lin, 4, 1, 2, 1)));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.empirical_dof, 3);
}

TEST(Schedule, Preconditions) {
  HomogeneousInstance inst{4, 2, 1, 1};
  EXPECT_THROW(build_schedule(inst, PolicyKind::Opt, 5, 1), Error);
  EXPECT_THROW(build_schedule(inst, PolicyKind::Opt, 2, 1), Error);
  EXPECT_THROW(build_schedule(inst, PolicyKind::Opt, 4, 2), Error);
  try {
    build_schedule(HomogeneousInstance{40, 10, 8, 4}, PolicyKind::Opt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GuardExceeded);
  }
}

TEST(Schedule, EveryUserAppearsInLambdaIntervals) {
  for (std::int64_t K = 3; K <= 9; ++K)
    for (std::int64_t t = 1; t <= 2 && t < K; ++t)
      for (std::int64_t L = 1; L <= 4; ++L)
        for (auto p : kAllPolicies) {
          auto o = eval_policy_t(p, K, t, L, 2);
          if (!o.feasible) continue;
          auto s = build_schedule({K, t, L, 2}, p, o.omega, o.beta);
          std::vector<std::uint64_t> seen(static_cast<std::size_t>(K), 0);
          for (const auto& iv : s.intervals)
            for (auto u : iv.users) ++seen[u];
          for (auto n : seen) ASSERT_EQ(BigCount(n), o.lambda);
        }
}

TEST(Schedule, MeasuredRepetitionWithinPolicyAssumption) {
  for (std::int64_t K = 3; K <= 9; ++K)
    for (std::int64_t t = 1; t <= 3 && t < K; ++t)
      for (auto p : kAllPolicies) {
        auto o = eval_policy_t(p, K, t, 6, 3);
        if (!o.feasible) continue;
        auto s = build_schedule({K, t, 6, 3}, p, o.omega, o.beta);
        for (const auto& iv : s.intervals) {
          std::map<std::pair<std::uint32_t, std::uint32_t>, std::int64_t> mult;
          for (const auto& d : iv.deliveries) ++mult[{d.user, d.label}];
          for (const auto& [key, n] : mult) {
            if (p == PolicyKind::Opt)
              ASSERT_TRUE(passes_decodability(6, t, o.omega, o.beta, n));
            else
              ASSERT_LE(n, o.beta);
          }
        }
      }
}

TEST(Verifier, MissingDeliveryIsNamed) {
  HomogeneousInstance inst{4, 2, 1, 1};
  auto s = build_schedule(inst, PolicyKind::Opt, 3, 1);
  auto pl = build_placement(4, 2, PolicyKind::Opt);
  auto removed = s.intervals[1].deliveries.back();
  s.intervals[1].deliveries.pop_back();
  auto rep = verify_schedule(s, pl, expectation_for(eval_policy_t(PolicyKind::Opt, 4, 2, 1, 1)));
  EXPECT_FALSE(rep.passed());
  const auto* c = rep.find("completeness");
  ASSERT_NE(c, nullptr);
  EXPECT_FALSE(c->passed);
  std::string who = "(user " + std::to_string(removed.user + 1) + ", label " + pl.label_name(removed.label) +
                    ", q " + std::to_string(removed.q) + ")";
  EXPECT_NE(c->detail.find(who), std::string::npos) << c->detail;
}

// a repeated interval keeps the delivery/interval ratio, so only the structural checks notice it
TEST(Verifier, DuplicatedIntervalIsCaught) {
  HomogeneousInstance inst{4, 2, 1, 1};
  auto s = build_schedule(inst, PolicyKind::Opt, 3, 1);
  s.intervals.push_back(s.intervals.front());
  auto rep = verify_schedule(s, build_placement(4, 2, PolicyKind::Opt), expectation_for(eval_policy_t(PolicyKind::Opt, 4, 2, 1, 1)));
  EXPECT_FALSE(rep.find("no-duplicates")->passed);
  const auto* dof = rep.find("dof");
  EXPECT_TRUE(dof->passed);
  EXPECT_NE(dof->detail.find("empirical 3"), std::string::npos);
  EXPECT_NE(dof->detail.find("expected 3"), std::string::npos);
  EXPECT_EQ(rep.empirical_dof, Rational(15, 5));
  EXPECT_FALSE(rep.find("interval-count")->passed);
}

TEST(Verifier, CatchesDecodabilityViolation) {
  HomogeneousInstance inst{6, 1, 5, 2};
  auto o = eval_policy_t(PolicyKind::Opt, 6, 1, 5, 2);
  ASSERT_EQ(o.omega, 4);
  ASSERT_EQ(o.beta, 2);
  auto s = build_schedule(inst, PolicyKind::Opt, o.omega, o.beta);
  auto pl = build_placement(6, 1, PolicyKind::Opt);
  // pile every stream of the first interval onto one label to force delta up
  auto& iv = s.intervals.front();
  for (auto& d : iv.deliveries)
    if (d.user == iv.deliveries.front().user) d.label = iv.deliveries.front().label;
  auto rep = verify_schedule(s, pl, expectation_for(o));
  EXPECT_FALSE(rep.find("interval-constraints")->passed);
  EXPECT_NE(rep.find("interval-constraints")->detail.find("violates"), std::string::npos);
}

TEST(Verifier, CachedLabelIsRejected) {
  HomogeneousInstance inst{4, 2, 1, 1};
  auto s = build_schedule(inst, PolicyKind::Opt, 3, 1);
  auto pl = build_placement(4, 2, PolicyKind::Opt);
  auto& d = s.intervals.front().deliveries.front();
  d.label = pl.cached(d.user).front();
  EXPECT_FALSE(verify_schedule(s, pl, expectation_for(eval_policy_t(PolicyKind::Opt, 4, 2, 1, 1))).find("completeness")->passed);
}

TEST(PhantomSchedule, ToyInstance) {
  auto cfg = validate_config(2, Rational(1, 2), {{2, 1}, {2, 2}});
  auto plan = phantom_plan(cfg, PolicyKind::Opt);
  auto s = build_phantom_schedule(cfg, PolicyKind::Opt, plan);
  std::size_t mc = 0, uc = 0;
  for (const auto& iv : s.intervals) (iv.unicast ? uc : mc)++;
  EXPECT_EQ(mc, 4u);
  EXPECT_EQ(uc, 3u);
  auto rep = verify_schedule(s, build_placement(cfg, PolicyKind::Opt), expectation_for(plan));
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.empirical_dof, Rational(24, 7));
}

TEST(PhantomSchedule, HomogeneousHasEmptyLedger) {
  auto cfg = validate_config(2, Rational(1, 2), {{4, 1}});
  auto plan = phantom_plan(cfg, PolicyKind::Opt);
  auto s = build_phantom_schedule(cfg, PolicyKind::Opt, plan);
  for (const auto& iv : s.intervals) EXPECT_FALSE(iv.unicast);
  EXPECT_TRUE(s.notes.empty());
  EXPECT_TRUE(verify_schedule(s, build_placement(cfg, PolicyKind::Opt), expectation_for(plan)).passed());
}

TEST(PhantomSchedule, GuardOnLargeConfig) {
  auto cfg = validate_config(16, Rational(1, 25), {{25, 2}, {75, 4}, {125, 8}});
  auto plan = phantom_plan(cfg, PolicyKind::Opt);
  try {
    build_phantom_schedule(cfg, PolicyKind::Opt, plan);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::GuardExceeded);
  }
}

TEST(PhantomSchedule, SmallHeterogeneousCorpus) {
  oracle::Rng rng(99);
  int verified = 0;
  for (int iter = 0; iter < 300 && verified < 40; ++iter) {
    auto groups = oracle::random_groups(rng, 2, 1, 4, 4);
    std::int64_t K = groups[0].count + groups[1].count;
    std::int64_t t = rng.uniform(1, std::max<std::int64_t>(1, K / 2));
    if (K < 3 || t >= K) continue;
    std::vector<UserGroup> ug{{groups[0].count, groups[0].gain}, {groups[1].count, groups[1].gain}};
    auto cfg = validate_config(rng.uniform(1, 4), Rational(t, K), ug);
    for (auto p : kAllPolicies) {
      auto plan = phantom_plan(cfg, p);
      if (!plan.feasible) continue;
      Schedule s;
      try {
        s = build_phantom_schedule(cfg, p, plan);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::GuardExceeded);
        continue;
      }
      auto rep = verify_schedule(s, build_placement(cfg, p), expectation_for(plan));
      if (!plan.uc_supply_binds && s.notes.empty()) {
        for (const auto& c : rep.checks) ASSERT_TRUE(c.passed) << c.name << ": " << c.detail << " policy " << to_string(p);
      } else {
        // the schedule still never delivers twice or breaks an interval constraint
        ASSERT_TRUE(rep.find("no-duplicates")->passed);
        ASSERT_TRUE(rep.find("interval-constraints")->passed);
      }
      ++verified;
    }
  }
  EXPECT_GE(verified, 20);
}

TEST(Dump, StableFormat) {
  HomogeneousInstance inst{4, 2, 1, 1};
  auto s = build_schedule(inst, PolicyKind::Opt, 3, 1);
  std::ostringstream os;
  dump_schedule(os, s, build_placement(4, 2, PolicyKind::Opt));
  std::string first = os.str().substr(0, os.str().find('\n'));
  EXPECT_EQ(first, "1;1:2-3.0|2:1-3.0|3:1-2.0");
}
