// Copyright 2026 The mibs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <cmath>
#include <tuple>

#include <gtest/gtest.h>

#include "mibs/arith.hpp"
#include "mibs/bounds.hpp"
#include "mibs/error.hpp"
#include "mibs/wreath.hpp"

namespace mibs {
namespace {

constexpr auto S = Ambient::symmetric;
constexpr auto A = Ambient::alternating;

TEST(Arith, OmegaAndBinaryWeight) {
  EXPECT_EQ(omega(6), 2u);
  EXPECT_EQ(omega(12), 3u);
  EXPECT_EQ(omega(1), 0u);
  EXPECT_EQ(binary_weight(7), 3u);
  EXPECT_EQ(binary_weight(8), 1u);
  EXPECT_EQ(binary_weight(1), 1u);
  EXPECT_THROW(binary_weight(0), Error);
  EXPECT_THROW(omega(0), Error);
}

TEST(Arith, OmegaMatchesTrialDivision) {
  for (std::uint64_t n = 1; n <= 5000; ++n) {
    unsigned count = 0;
    std::uint64_t r = n;
    for (std::uint64_t q = 2; q <= r; ++q) {
      while (r % q == 0) {
        r /= q;
        ++count;
      }
    }
    ASSERT_EQ(omega(n), count) << n;
  }
}

TEST(Arith, PrimitiveRoots) {
  EXPECT_EQ(smallest_primitive_root(7), 3u);
  EXPECT_EQ(smallest_primitive_root(11), 2u);
  EXPECT_EQ(smallest_primitive_root(13), 2u);
  EXPECT_EQ(smallest_primitive_root(3), 2u);
  EXPECT_EQ(smallest_primitive_root(23), 5u);
}

TEST(Epsilon, Values) {
  EXPECT_EQ(epsilon(S, 7), 1);
  EXPECT_EQ(epsilon(A, 7), 0);
  EXPECT_EQ(epsilon(S, 5), 1);
  EXPECT_THROW(epsilon(S, 4), DomainError);
}

TEST(LengthSym, HandValues) {
  EXPECT_EQ(length_sym(7, S), 7);
  EXPECT_EQ(length_sym(8, A), 9);
  EXPECT_THROW(length_sym(1, S), DomainError);
}

TEST(LengthSym, InequalityUpToAMillion) {
  for (std::uint64_t n = 2; n <= 1'000'000; ++n) {
    for (auto ambient : {S, A}) {
      ASSERT_LE(static_cast<double>(length_sym(n, ambient)), length_sym_ceiling(n, ambient) + kTolerance)
          << n;
    }
  }
}

TEST(PrimitiveUpperBound, Values) {
  EXPECT_NEAR(primitive_upper_bound(9, false), 14.22, 0.01);
  EXPECT_DOUBLE_EQ(primitive_upper_bound(25, true), 14.0);
  EXPECT_DOUBLE_EQ(primitive_upper_bound(49, true), 20.0);
  EXPECT_THROW(primitive_upper_bound(6, false), DomainError);
}

TEST(AffineBounds, Values) {
  auto line = affine_bounds(7, 1, S);
  EXPECT_TRUE(line.exact);
  EXPECT_EQ(line.lower, 4);
  EXPECT_EQ(affine_bounds(7, 1, A).lower, 3);
  EXPECT_EQ(affine_bounds(13, 1, S).lower, 5);
  auto plane = affine_bounds(3, 2, S);
  EXPECT_FALSE(plane.exact);
  EXPECT_EQ(plane.lower, 5);
  EXPECT_NEAR(plane.strict_upper, 3.0 * (1.0 + std::log2(3.0)) + 1.0, 1e-12);
  EXPECT_EQ(plane.max_value(), 8);
  EXPECT_EQ(affine_bounds(7, 2, S).lower, 7);
  EXPECT_EQ(affine_bounds(3, 3, S).lower, 9);
  EXPECT_THROW(affine_bounds(2, 3, S), DomainError);
  EXPECT_THROW(affine_bounds(5, 1, S), DomainError);
  EXPECT_THROW(affine_bounds(9, 2, S), DomainError);
}

TEST(AffineBounds, LowerBelowUpper) {
  for (std::uint32_t p = 3; p <= 10'000; p += 2) {
    if (!is_prime(p)) continue;
    std::uint64_t n = p;
    for (std::uint32_t d = 1; n <= 10'000; ++d, n *= p) {
      if (n < 7) continue;
      for (auto ambient : {S, A}) {
        auto b = affine_bounds(p, d, ambient);
        if (!b.exact) {
          ASSERT_LT(static_cast<double>(b.lower), b.strict_upper) << p << " " << d;
        }
      }
    }
  }
}

TEST(WreathBounds, Values) {
  auto a = wreath_bounds(5, 2, S);
  EXPECT_EQ(a.lower, 6);
  EXPECT_DOUBLE_EQ(a.upper, 13.0);
  auto b = wreath_bounds(5, 3, S);
  EXPECT_EQ(b.lower, 10);
  EXPECT_DOUBLE_EQ(b.upper, 20.0);  // 22.5 - 1.5 - 1
  EXPECT_EQ(wreath_bounds(5, 2, A).lower, 5);
  EXPECT_THROW(wreath_bounds(4, 2, S), DomainError);
}

TEST(WreathBounds, LowerBelowUpper) {
  for (std::uint32_t m = 5; m <= 100; ++m) {
    for (std::uint32_t k = 2; k <= 6; ++k) {
      for (auto ambient : {S, A}) {
        auto b = wreath_bounds(m, k, ambient);
        ASSERT_LE(static_cast<double>(b.lower), b.upper) << m << " " << k;
      }
    }
  }
}

TEST(Maximality, AffineTable) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, Ambient, bool>> cases{
      {3, 2, S, true},   {3, 2, A, true},   {5, 3, A, true},   {7, 1, S, true},
      {11, 1, S, true},  {7, 1, A, false},  {11, 1, A, false}, {13, 1, A, true},
      {17, 1, A, false}, {19, 1, A, true},  {23, 1, A, false}, {29, 1, A, true},
      {31, 1, A, true},  {2, 3, A, true},   {2, 3, S, false},  {2, 4, S, false},
  };
  for (auto [p, d, ambient, expected] : cases) {
    EXPECT_EQ(affine_is_maximal(p, d, ambient), expected) << p << " " << d;
  }
  EXPECT_THROW(affine_is_maximal(5, 1, S), DomainError);
}

TEST(Maximality, WreathTable) {
  const std::vector<std::tuple<std::uint32_t, std::uint32_t, Ambient, bool>> cases{
      {5, 2, S, true},  {5, 3, A, true},  {7, 4, S, true},  {6, 2, S, true},
      {10, 2, S, true}, {6, 3, S, false}, {6, 2, A, false}, {8, 2, A, true},
      {8, 2, S, false}, {6, 3, A, true},  {8, 4, A, true},  {8, 3, S, false},
  };
  for (auto [m, k, ambient, expected] : cases) {
    EXPECT_EQ(wreath_is_maximal(m, k, ambient), expected) << m << " " << k;
  }
}

TEST(Maximality, WreathAlternatingContainmentMatchesParity) {
  for (auto [m, k] : {std::pair{5u, 2u}, {6u, 2u}, {8u, 2u}, {6u, 3u}, {5u, 3u}}) {
    auto ctx = build_wreath(m, k);
    bool all_even = true;
    for (const auto &g : ctx.generators) all_even &= parity(g) == Parity::even;
    BoundsQuery query;
    query.ambient = A;
    query.family = "wreath";
    query.params = {{"m", m}, {"k", k}};
    auto report = bounds_report(query);
    BigInt reported;
    for (const auto &[name, value] : report.quantities) {
      if (name == "order") reported = parse_decimal(std::get<std::string>(value));
    }
    EXPECT_EQ(reported, all_even ? ctx.group.order() : ctx.group.order() / 2) << m << " " << k;
  }
}

TEST(OrderCheck, SmallDegrees) {
  auto nine = primitive_order_check(9, 432);
  EXPECT_TRUE(nine.below_general);
  EXPECT_NEAR(nine.log2_general_bound, std::log2(36450.0), 1e-12);
  EXPECT_EQ(nine.small_bound, 6561);
  EXPECT_TRUE(nine.below_small);
  auto twenty_five = primitive_order_check(25, 28800);
  EXPECT_TRUE(twenty_five.below_general);
  auto forty_nine = primitive_order_check(49, BigInt(49) * 48 * 42 * 2);
  EXPECT_TRUE(forty_nine.below_general);
  EXPECT_FALSE(primitive_order_check(9, 40000).below_general);
}

TEST(IndexDegree, LogFactorialMatchesLgamma) {
  for (std::uint64_t n : {1u, 2u, 10u, 101u, 1000u, 100000u}) {
    const double expected = std::lgamma(static_cast<double>(n) + 1.0) / std::log(2.0);
    EXPECT_NEAR(log2_factorial(n), expected, 1e-9 * std::max(1.0, expected));
  }
  EXPECT_NEAR(log2_factorial(101), 531.4, 0.1);
}

TEST(IndexDegree, ConstructedInstances) {
  const std::vector<std::pair<std::uint64_t, BigInt>> cases{
      {101, BigInt(10100)}, {121, BigInt(1597200)}, {125, BigInt(10368000)}};
  for (const auto &[n, order] : cases) {
    for (bool proof : {false, true}) {
      auto check = index_degree_check(n, order, proof);
      EXPECT_TRUE(check.above_stirling) << n;
      EXPECT_TRUE(check.below_order) << n;
      EXPECT_TRUE(check.degree_window) << n;
      EXPECT_TRUE(check.log_window) << n;
    }
  }
  auto line = index_degree_check(101, 10100, false);
  EXPECT_NEAR(line.log_t, 518.0, 1.0);
}

TEST(IndexDegree, ProofModeNeedsLargeDegree) {
  EXPECT_THROW(index_degree_check(81, 81 * 80, true), DomainError);
  EXPECT_NO_THROW(index_degree_check(81, 81 * 80, false));
}

TEST(IndexDegree, HugeSubgroupFailsTheWindow) {
  // A point stabiliser has tiny index, far below the Stirling threshold.
  auto check = index_degree_check(101, factorial(100), false);
  EXPECT_FALSE(check.above_stirling);
  EXPECT_FALSE(check.passed());
}

TEST(Constants, Recorded) {
  EXPECT_EQ(kMathieuLengths[0], std::pair(11, 7));
  EXPECT_EQ(kMathieuLengths[3], std::pair(24, 14));
  EXPECT_DOUBLE_EQ(kTableConstants.c6, 4.03);
  EXPECT_EQ(relational_complexity_bound(5), 6);
}

TEST(Report, AffinePlane) {
  BoundsQuery query;
  query.n = 9;
  query.family = "agl";
  query.params = {{"p", 3}, {"d", 2}};
  query.mibs = 5;
  auto report = bounds_report(query);
  EXPECT_TRUE(report.all_hold());
  bool saw_maximal = false;
  for (const auto &[name, value] : report.quantities) {
    if (name == "maximal") saw_maximal = std::get<bool>(value);
    if (name == "mibs_lower") EXPECT_EQ(std::get<std::int64_t>(value), 5);
    if (name == "mibs_max") EXPECT_EQ(std::get<std::int64_t>(value), 8);
  }
  EXPECT_TRUE(saw_maximal);
  for (const auto &c : report.comparisons) EXPECT_FALSE(c.relation.empty());

  query.mibs = 9;
  EXPECT_FALSE(bounds_report(query).all_hold());
}

TEST(Report, IndexDegree) {
  BoundsQuery query;
  query.n = 121;
  query.order = BigInt(1597200);
  query.index_degree = true;
  auto report = bounds_report(query);
  EXPECT_TRUE(report.all_hold());
  EXPECT_GE(report.comparisons.size(), 4u);
}

TEST(Report, Rejects) {
  BoundsQuery small;
  small.n = 6;
  EXPECT_THROW(bounds_report(small), DomainError);
  BoundsQuery mismatch;
  mismatch.n = 10;
  mismatch.family = "agl";
  mismatch.params = {{"p", 3}, {"d", 2}};
  EXPECT_THROW(bounds_report(mismatch), DomainError);
}

}  // namespace
}  // namespace mibs
