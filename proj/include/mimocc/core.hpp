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

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mimocc {

/// Arbitrary-precision non-negative counts (subpacketization, interval counts).
using BigCount = boost::multiprecision::cpp_int;

/// Exact rational, always kept in canonical reduced form with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorCode {
  NonIntegerCacheGain,
  GroupCacheGainNonInteger,
  EmptyGroup,
  UnsortedGroups,
  InvalidParameter,
  TooManyGroups,
  GuardExceeded,
  ParseError,
};

inline const char* to_string(ErrorCode c) {
  switch (c) {
    case ErrorCode::NonIntegerCacheGain: return "NonIntegerCacheGain";
    case ErrorCode::GroupCacheGainNonInteger: return "GroupCacheGainNonInteger";
    case ErrorCode::EmptyGroup: return "EmptyGroup";
    case ErrorCode::UnsortedGroups: return "UnsortedGroups";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::TooManyGroups: return "TooManyGroups";
    case ErrorCode::GuardExceeded: return "GuardExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// ---------------------------------------------------------------------------
// Binomials

/// C(n, k); zero when k < 0 or k > n.
inline BigCount binom(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r holds C(n-k+i, i) after the division
  }
  return r;
}

// ---------------------------------------------------------------------------
// Rational helpers

inline Rational make_rational(std::int64_t num, std::int64_t den = 1) {
  if (den == 0) throw Error(ErrorCode::InvalidParameter, "zero denominator");
  return Rational(BigCount(num), BigCount(den));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

inline BigCount floor_div(const BigCount& a, const BigCount& b) {
  BigCount q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline BigCount floor(const Rational& r) { return floor_div(numerator(r), denominator(r)); }

inline BigCount ceil(const Rational& r) { return -floor_div(-numerator(r), denominator(r)); }

/// Fixed-point rendering with `digits` fractional digits, rounded half away from zero.
inline std::string to_decimal(const Rational& value, int digits = 4) {
  if (digits < 0) digits = 0;
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  const bool negative = value < 0;
  BigCount num = abs(numerator(value)) * scale;
  const BigCount& den = denominator(value);
  BigCount q = num / den;
  if ((num % den) * 2 >= den) ++q;
  std::string s = q.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
  }
  if (negative && q != 0) s.insert(0, "-");
  return s;
}

/// Like to_decimal but trims trailing zeros ("34.0000" -> "34").
inline std::string to_decimal_trimmed(const Rational& value, int digits = 4) {
  std::string s = to_decimal(value, digits);
  if (s.find('.') == std::string::npos) return s;
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  return s;
}

inline std::string to_fraction_string(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Parses "p/q", an integer, or a plain decimal such as "0.04" (no exponent) exactly.
inline Rational parse_rational(std::string_view text) {
  auto fail = [&] { return Error(ErrorCode::ParseError, "not a rational: '" + std::string(text) + "'"); };
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  auto parse_decimal = [&](std::string_view s) -> Rational {
    s = trim(s);
    bool negative = false;
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
      negative = s.front() == '-';
      s.remove_prefix(1);
    }
    if (s.empty()) throw fail();
    BigCount num = 0, den = 1;
    bool seen_point = false, seen_digit = false;
    for (char c : s) {
      if (c == '.') {
        if (seen_point) throw fail();
        seen_point = true;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        num = num * 10 + (c - '0');
        if (seen_point) den *= 10;
        seen_digit = true;
      } else {
        throw fail();
      }
    }
    if (!seen_digit) throw fail();
    Rational r(num, den);
    return negative ? Rational(-r) : r;
  };
  text = trim(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational p = parse_decimal(text.substr(0, slash));
    Rational q = parse_decimal(text.substr(slash + 1));
    if (q == 0) throw fail();
    return p / q;
  }
  return parse_decimal(text);
}

// ---------------------------------------------------------------------------
// Network configuration

struct UserGroup {
  std::int64_t count = 0;  // K_j
  std::int64_t gain = 0;   // G_j, receive spatial multiplexing gain

  friend bool operator==(const UserGroup&, const UserGroup&) = default;
};

/// A validated asymmetric system: L transmit gain, cache ratio gamma, groups sorted by gain.
class NetworkConfig {
 public:
  NetworkConfig() = default;

  std::int64_t tx_gain() const noexcept { return tx_gain_; }
  const Rational& cache_ratio() const noexcept { return cache_ratio_; }
  const std::vector<UserGroup>& groups() const noexcept { return groups_; }

  std::int64_t user_count() const noexcept { return user_count_; }
  std::size_t group_count() const noexcept { return groups_.size(); }
  /// t = K * gamma.
  std::int64_t cache_gain() const noexcept { return cache_gain_; }
  std::int64_t min_gain() const noexcept { return groups_.front().gain; }
  std::int64_t max_gain() const noexcept { return groups_.back().gain; }

  /// Per-user gains in global user order (group 1 users first).
  std::vector<std::int64_t> user_gains() const {
    std::vector<std::int64_t> g;
    g.reserve(static_cast<std::size_t>(user_count_));
    for (const auto& grp : groups_) g.insert(g.end(), static_cast<std::size_t>(grp.count), grp.gain);
    return g;
  }

  /// True when every K_j * gamma is an integer.
  bool per_group_integral() const {
    return std::all_of(groups_.begin(), groups_.end(),
                       [&](const UserGroup& g) { return is_integer(cache_ratio_ * g.count); });
  }

  friend bool operator==(const NetworkConfig& a, const NetworkConfig& b) {
    return a.tx_gain_ == b.tx_gain_ && a.cache_ratio_ == b.cache_ratio_ && a.groups_ == b.groups_;
  }

  friend NetworkConfig validate_config(std::int64_t, const Rational&, std::vector<UserGroup>);

 private:
  std::int64_t tx_gain_ = 0;
  Rational cache_ratio_;
  std::vector<UserGroup> groups_;
  std::int64_t user_count_ = 0;
  std::int64_t cache_gain_ = 0;
};

/// Checks every configuration invariant and returns the canonical config.
/// Adjacent groups with the same gain are merged; a descending pair is an error.
inline NetworkConfig validate_config(std::int64_t tx_gain, const Rational& cache_ratio,
                                     std::vector<UserGroup> groups) {
  if (tx_gain < 1) throw Error(ErrorCode::InvalidParameter, "L must be a positive integer");
  if (cache_ratio <= 0 || cache_ratio >= 1)
    throw Error(ErrorCode::InvalidParameter, "gamma must lie strictly between 0 and 1");
  if (groups.empty()) throw Error(ErrorCode::EmptyGroup, "at least one user group is required");
  std::vector<UserGroup> merged;
  for (std::size_t j = 0; j < groups.size(); ++j) {
    const auto& g = groups[j];
    if (g.count < 1) throw Error(ErrorCode::EmptyGroup, "group " + std::to_string(j + 1) + " has no users");
    if (g.gain < 1)
      throw Error(ErrorCode::InvalidParameter, "group " + std::to_string(j + 1) + " has non-positive gain");
    if (!merged.empty() && g.gain < merged.back().gain)
      throw Error(ErrorCode::UnsortedGroups, "group " + std::to_string(j + 1) + " has gain " +
                                                 std::to_string(g.gain) + " below its predecessor");
    if (!merged.empty() && g.gain == merged.back().gain)
      merged.back().count += g.count;
    else
      merged.push_back(g);
  }
  std::int64_t k = 0;
  for (const auto& g : merged) k += g.count;
  if (k < 2) throw Error(ErrorCode::InvalidParameter, "at least two users are required");
  Rational t = cache_ratio * k;
  if (!is_integer(t))
    throw Error(ErrorCode::NonIntegerCacheGain,
                "K*gamma = " + to_fraction_string(t) + " is not an integer");

  NetworkConfig cfg;
  cfg.tx_gain_ = tx_gain;
  cfg.cache_ratio_ = cache_ratio;
  cfg.groups_ = std::move(merged);
  cfg.user_count_ = k;
  cfg.cache_gain_ = static_cast<std::int64_t>(numerator(t));
  return cfg;
}

inline NetworkConfig validate_config(const NetworkConfig& cfg) {
  return validate_config(cfg.tx_gain(), cfg.cache_ratio(), cfg.groups());
}

}  // namespace mimocc
