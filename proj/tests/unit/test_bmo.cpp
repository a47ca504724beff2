// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "brute.hpp"
#include "common.hpp"
#include "dyadic/bmo.hpp"

using namespace dyadic;

namespace {

IntervalCoefficients random_sequence(int max_level, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> n;
  IntervalCoefficients a(max_level);
  for (int l = 0; l <= max_level; ++l) {
    for (std::int64_t q = 0; q < (std::int64_t{1} << l); ++q) a.at(l, q) = n(rng);
  }
  return a;
}

std::vector<std::vector<double>> by_level(const IntervalCoefficients& a) {
  std::vector<std::vector<double>> out;
  for (int l = 0; l <= a.max_level(); ++l) {
    out.emplace_back();
    for (std::int64_t q = 0; q < (std::int64_t{1} << l); ++q) out.back().push_back(a.at(l, q));
  }
  return out;
}

}  // namespace

TEST(SeqBmo, Examples) {
  IntervalCoefficients a(2);
  EXPECT_EQ(seq_bmo(a), 0.0);
  a.at(0, 0) = 3.0;
  EXPECT_DOUBLE_EQ(seq_bmo(a), 3.0);
  IntervalCoefficients b(1);
  b.at(1, 0) = 2.0;
  b.at(1, 1) = 2.0;
  EXPECT_NEAR(seq_bmo(b), 2.0 * std::sqrt(2.0), 1e-15);
}

TEST(SeqBmo, MatchesEnumeration) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const auto a = random_sequence(4, s);
    EXPECT_NEAR(seq_bmo(a), brute::seq_bmo(by_level(a)), 1e-12);
  }
}

TEST(ProductBmo, SingleRectangle) {
  for (const auto& R : all_rectangles(Grid(2, 2))) {
    if (R.first.level == 2 || R.second.level == 2) continue;
    RectangleCoefficients a(Grid(2, 2));
    a[R] = -1.75;
    const BmoResult r = product_bmo(a, BmoStrategy::exhaustive());
    EXPECT_NEAR(r.value, 1.75 * std::sqrt(std::ldexp(1.0, R.first.level + R.second.level)), 1e-14);
    EXPECT_FALSE(r.lower_bound);
  }
  RectangleCoefficients top(Grid(1, 1));
  top[DyadicRectangle()] = 1.0;
  EXPECT_DOUBLE_EQ(product_bmo(top, BmoStrategy::exhaustive()).value, 1.0);
  EXPECT_EQ(product_bmo(RectangleCoefficients(Grid(2, 1)), BmoStrategy::exhaustive()).value, 0.0);
}

TEST(ProductBmo, StrategiesOrdered) {
  const Grid g(2, 2);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 5; ++t) {
    RectangleCoefficients a(g);
    for (auto& x : a.data()) x = n(rng);
    const double rect = rectangle_bmo(a);
    const BmoResult sampled = product_bmo(a, BmoStrategy::sampled(128, t));
    const BmoResult exact = product_bmo(a, BmoStrategy::exhaustive());
    EXPECT_TRUE(sampled.lower_bound);
    EXPECT_LE(rect, sampled.value + 1e-12);
    EXPECT_LE(sampled.value, exact.value + 1e-12);
  }
  EXPECT_EQ(BmoStrategy::automatic(Grid(2, 2), 1).kind, BmoStrategy::Kind::Exhaustive);
  EXPECT_EQ(BmoStrategy::automatic(Grid(3, 2), 1).kind, BmoStrategy::Kind::Sampled);
}

TEST(LittleBmo, Examples) {
  const Grid g(1, 1);
  EXPECT_EQ(little_bmo(constant(g, 4.0)), 0.0);
  EXPECT_DOUBLE_EQ(little_bmo(GridFunction(g, {1, 1, -1, -1})), 1.0);
}

TEST(LittleBmo, InvariancesAndEnumeration) {
  const Grid g(3, 2);
  const GridFunction b = testing_util::rand_fn(g, 5);
  const double base = little_bmo(b);
  EXPECT_NEAR(base, brute::little_bmo(b), 1e-14);
  EXPECT_NEAR(little_bmo(b + constant(g, 7.0)), base, 1e-13);
  EXPECT_NEAR(little_bmo(b * -3.0), 3.0 * base, 1e-13);
  EXPECT_GE(little_bmo_slices(b), 0.0);
}

TEST(H1Pairing, SingleInterval) {
  IntervalCoefficients a(0), b(0);
  a.at(0, 0) = 2.0;
  b.at(0, 0) = -3.0;
  EXPECT_DOUBLE_EQ(h1_pairing_ratio(a, b).value, 1.0);
  EXPECT_EQ(h1_pairing_ratio(IntervalCoefficients(2), random_sequence(2, 1)).value, 0.0);
}

TEST(H1Pairing, RandomSequencesBounded) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const double r = h1_pairing_ratio(random_sequence(4, s), random_sequence(4, 100 + s)).value;
    EXPECT_GT(r, 0.0);
    EXPECT_LT(r, 10.0);
  }
  const Grid g(1, 2);
  RectangleCoefficients a(g), b(g);
  a[DyadicRectangle()] = 1.0;
  b[DyadicRectangle()] = 2.0;
  const PairingRatio r = h1_pairing_ratio(a, b, BmoStrategy::exhaustive());
  EXPECT_DOUBLE_EQ(r.value, 1.0);
  EXPECT_FALSE(r.lower_bound_bmo);
}
