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

#include "mimocc/core.hpp"
#include "oracles.hpp"

using namespace mimocc;

TEST(Binomial, MatchesPascalTriangleUpTo64) {
  oracle::Pascal pascal(64);
  for (std::int64_t n = 0; n <= 64; ++n)
    for (std::int64_t k = 0; k <= n; ++k) ASSERT_EQ(binom(n, k), pascal(n, k)) << n << " choose " << k;
}

TEST(Binomial, OutOfRangeIsZero) {
  EXPECT_EQ(binom(5, -1), 0);
  EXPECT_EQ(binom(5, 6), 0);
  EXPECT_EQ(binom(-1, 0), 0);
  EXPECT_EQ(binom(0, 0), 1);
}

TEST(Binomial, KnownLargeValues) {
  EXPECT_EQ(binom(35, 7), 6724520);
  EXPECT_EQ(binom(27, 6), 296010);
  EXPECT_EQ(binom(225, 9), oracle::C()(225, 9));
  EXPECT_EQ(binom(300, 150), oracle::C()(300, 150));
}

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(Rational(81, 2), 4), "40.5000");
  EXPECT_EQ(to_decimal(Rational(4536, 127), 4), "35.7165");
  EXPECT_EQ(to_decimal(Rational(4536, 127), 2), "35.72");
  EXPECT_EQ(to_decimal(Rational(1, 8), 2), "0.13");  // half away from zero
  EXPECT_EQ(to_decimal(Rational(-1, 8), 2), "-0.13");
  EXPECT_EQ(to_decimal(Rational(-1, 1000), 2), "0.00");
  EXPECT_EQ(to_decimal(Rational(7), 0), "7");
  EXPECT_EQ(to_decimal_trimmed(Rational(34), 4), "34");
  EXPECT_EQ(to_decimal_trimmed(Rational(5, 2), 4), "2.5");
}

TEST(Rational, ParseRoundTrip) {
  for (std::int64_t p = -30; p <= 30; ++p)
    for (std::int64_t q = 1; q <= 30; ++q) {
      Rational r(p, q);
      ASSERT_EQ(parse_rational(to_fraction_string(r)), r);
    }
  EXPECT_EQ(parse_rational("0.04"), Rational(1, 25));
  EXPECT_EQ(parse_rational(" 1/20 "), Rational(1, 20));
  EXPECT_EQ(parse_rational("0.5/2"), Rational(1, 4));
  EXPECT_EQ(parse_rational("3"), Rational(3));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* bad : {"", "abc", "1/0", "1..2", "1/", "/3", "1e3", "--1"}) {
    try {
      parse_rational(bad);
      FAIL() << "accepted '" << bad << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::ParseError);
    }
  }
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(6, 3)), 2);
  EXPECT_EQ(ceil(Rational(6, 3)), 2);
}

namespace {

ErrorCode code_of(std::int64_t L, Rational gamma, std::vector<UserGroup> groups) {
  try {
    validate_config(L, gamma, std::move(groups));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an error";
  return ErrorCode::ParseError;
}

}  // namespace

TEST(ValidateConfig, AcceptsPublishedSetups) {
  auto ex = validate_config(16, Rational(1, 25), {{25, 2}, {75, 4}, {125, 8}});
  EXPECT_EQ(ex.user_count(), 225);
  EXPECT_EQ(ex.cache_gain(), 9);
  EXPECT_EQ(ex.min_gain(), 2);
  EXPECT_EQ(ex.max_gain(), 8);
  EXPECT_TRUE(ex.per_group_integral());

  auto t3 = validate_config(14, Rational(1, 5), {{5, 2}, {30, 8}});
  EXPECT_EQ(t3.user_count(), 35);
  EXPECT_EQ(t3.cache_gain(), 7);
}

TEST(ValidateConfig, Rejections) {
  EXPECT_EQ(code_of(2, Rational(1, 3), {{4, 1}}), ErrorCode::NonIntegerCacheGain);
  EXPECT_EQ(code_of(2, Rational(1, 2), {}), ErrorCode::EmptyGroup);
  EXPECT_EQ(code_of(2, Rational(1, 2), {{2, 1}, {0, 2}}), ErrorCode::EmptyGroup);
  EXPECT_EQ(code_of(2, Rational(1, 2), {{2, 3}, {2, 2}}), ErrorCode::UnsortedGroups);
  EXPECT_EQ(code_of(0, Rational(1, 2), {{4, 1}}), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of(2, Rational(0), {{4, 1}}), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of(2, Rational(1), {{4, 1}}), ErrorCode::InvalidParameter);
  EXPECT_EQ(code_of(2, Rational(1, 2), {{1, 1}}), ErrorCode::InvalidParameter);
}

TEST(ValidateConfig, MergesEqualGainsAndIsIdempotent) {
  auto cfg = validate_config(4, Rational(1, 4), {{2, 1}, {2, 1}, {4, 3}});
  ASSERT_EQ(cfg.group_count(), 2u);
  EXPECT_EQ(cfg.groups()[0], (UserGroup{4, 1}));
  EXPECT_EQ(validate_config(cfg), cfg);
  EXPECT_EQ(cfg.user_gains(), (std::vector<std::int64_t>{1, 1, 1, 1, 3, 3, 3, 3}));
}

TEST(ValidateConfig, PerGroupIntegrality) {
  auto cfg = validate_config(4, Rational(1, 4), {{2, 1}, {6, 3}});
  EXPECT_FALSE(cfg.per_group_integral());
}
