// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "brute.hpp"
#include "common.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/martingale.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/sqmax.hpp"

using namespace dyadic;
using testing_util::rand_fn;
using testing_util::rel_sup;
using testing_util::sup_abs;
using testing_util::sup_diff;

TEST(Maximal, CellIndicator) {
  const Grid g(1, 1);
  const GridFunction f[] = {cell_indicator(g, 0, 0)};
  const GridFunction m = maximal(f);
  EXPECT_DOUBLE_EQ(m.at(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(m.at(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(m.at(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(m.at(1, 1), 0.25);
}

TEST(Maximal, OnesAndTopRectangle) {
  const Grid g(2, 3);
  const GridFunction ones[] = {constant(g, 1.0), constant(g, 1.0)};
  for (const GridFunction m = maximal(ones); double v : m.values()) EXPECT_DOUBLE_EQ(v, 1.0);
  const GridFunction fs[] = {rand_fn(g, 1), rand_fn(g, 2)};
  const double floor = average(abs(fs[0]), DyadicRectangle()) * average(abs(fs[1]), DyadicRectangle());
  for (const GridFunction m = maximal(fs); double v : m.values()) EXPECT_GE(v, floor - 1e-15);
}

TEST(Maximal, MatchesEnumeration) {
  const Grid g(2, 3);
  const GridFunction fs[] = {rand_fn(g, 3), rand_fn(g, 4), rand_fn(g, 5)};
  EXPECT_LE(sup_diff(maximal(fs), brute::maximal(fs)), 1e-15);
}

TEST(Maximal, WeightedMatchesEnumeration) {
  const Grid g(2, 2);
  const GridFunction f = rand_fn(g, 6);
  const Weight mu(testing_util::rand_positive(g, 7));
  EXPECT_LE(sup_diff(weighted_maximal(f, mu), brute::weighted_maximal(f, mu.values())), 1e-14);
  const GridFunction single[] = {f};
  EXPECT_LE(sup_diff(weighted_maximal(f, Weight(constant(g, 1.0))), maximal(single)), 1e-15);
  for (const GridFunction m = weighted_maximal(constant(g, -2.0), mu); double v : m.values()) EXPECT_NEAR(v, 2.0, 1e-15);
}

TEST(Square, CellIndicator) {
  const Grid g(1, 1);
  for (const GridFunction m = square_full(cell_indicator(g, 0, 0)); double v : m.values()) EXPECT_DOUBLE_EQ(v, 0.25);
  EXPECT_LE(sup_abs(square_full(constant(g, 5.0))), 1e-15);
}

TEST(Square, MatchesEnumeration) {
  const Grid g(3, 2);
  const GridFunction f = rand_fn(g, 8);
  EXPECT_LE(rel_sup(square_full(f), brute::square_full(f)), 1e-13);
  GridFunction sp(g);
  for (int l = 0; l < 3; ++l) {
    for (std::int64_t q = 0; q < (1 << l); ++q) {
      const GridFunction d = brute::diff1(f, 0, l, q);
      sp += d * d;
    }
  }
  EXPECT_LE(rel_sup(square_param(f, Param::One), sp.map([](double v) { return std::sqrt(v); })), 1e-13);
}

TEST(Square, BlockRegrouping) {
  const Grid g(3, 3);
  const GridFunction f = rand_fn(g, 9);
  const GridFunction full = square_full(f);
  for (int k1 = 0; k1 <= 2; ++k1) {
    for (int k2 = 0; k2 <= 2; ++k2) EXPECT_LE(rel_sup(square_block(f, k1, k2), full), 1e-12);
  }
  EXPECT_THROW(square_block(f, 3, 0), PreconditionError);
}

TEST(AFamilies, A1MatchesOracle) {
  const Grid g(2, 2);
  const GridFunction fs[] = {rand_fn(g, 10), rand_fn(g, 11), rand_fn(g, 12)};
  for (int k1 = 0; k1 <= 1; ++k1) {
    for (int k2 = 0; k2 <= 1; ++k2) {
      for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
          EXPECT_LE(rel_sup(a1k(fs, {k1, k2}, {a, b}), brute::a1k(fs, {k1, k2}, a, b)), 1e-12)
              << k1 << k2 << a << b;
        }
      }
    }
  }
}

TEST(AFamilies, A1Collapse) {
  const Grid g(2, 3);
  const GridFunction f = rand_fn(g, 13);
  const GridFunction fs[] = {f, constant(g, 1.0)};
  GridFunction acc(g);
  for (const auto& K : all_rectangles(g)) {
    if (K.first.level >= 2 || K.second.level >= 3) continue;
    const double a = average(abs(martingale_difference(f, K)), K);
    acc += indicator(g, K) * (a * a);
  }
  EXPECT_LE(rel_sup(a1k(fs, {0, 0}), acc.map([](double v) { return std::sqrt(v); })), 1e-12);
  const GridFunction zero[] = {f, GridFunction(g)};
  EXPECT_LE(sup_abs(a1k(zero, {0, 0})), 0.0);
}

TEST(AFamilies, A2MatchesOracle) {
  const Grid g(2, 2);
  const GridFunction fs[] = {rand_fn(g, 14), rand_fn(g, 15), rand_fn(g, 16)};
  for (A2Orientation o : {A2Orientation::OuterSecond, A2Orientation::OuterFirst}) {
    for (const std::array<int, 3> k : {std::array<int, 3>{0, 0, 0}, {1, 0, 1}, {0, 1, 0}}) {
      for (const std::array<std::size_t, 3> s : {std::array<std::size_t, 3>{0, 1, 2}, {0, 0, 1}, {2, 1, 0}}) {
        const GridFunction got = a2k(fs, k, {o, s[0], s[1], s[2]});
        const GridFunction want = brute::a2k(fs, k, o == A2Orientation::OuterSecond, s[0], s[1], s[2]);
        EXPECT_LE(rel_sup(got, want), 1e-12);
      }
    }
  }
}

TEST(AFamilies, A3MatchesOracle) {
  const Grid g(2, 2);
  const GridFunction fs[] = {rand_fn(g, 17), rand_fn(g, 18), rand_fn(g, 19)};
  for (const std::array<int, 4> k : {std::array<int, 4>{0, 0, 0, 0}, {1, 0, 0, 1}, {1, 1, 1, 1}}) {
    for (const std::array<std::size_t, 4> s :
         {std::array<std::size_t, 4>{0, 0, 1, 1}, {0, 1, 1, 0}, {2, 0, 0, 2}}) {
      const GridFunction got = a3k(fs, k, {s[0], s[1], s[2], s[3]});
      EXPECT_LE(rel_sup(got, brute::a3k(fs, k, s)), 1e-12);
    }
  }
  const GridFunction zero[] = {GridFunction(g), fs[1]};
  EXPECT_LE(sup_abs(a3k(zero, {0, 0, 0, 0})), 0.0);
}

TEST(Prop56, MatchesOracle) {
  const Grid g(2, 2);
  const GridFunction fam[] = {rand_fn(g, 20), rand_fn(g, 21)};
  const Weight u(testing_util::rand_positive(g, 22));
  for (const std::array<int, 2> k : {std::array<int, 2>{0, 0}, {1, 0}, {1, 1}}) {
    const Ratio r = prop56_ratio(fam, u, 2.5, 3.0, k);
    EXPECT_NEAR(r.value, brute::prop56_ratio(fam, u.values(), 2.5, 3.0, k), 1e-12 * r.value);
  }
}

TEST(Prop56, UnweightedSingleIsContraction) {
  const Grid g(3, 3);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const GridFunction fam[] = {rand_fn(g, 30 + s)};
    EXPECT_LE(prop56_ratio(fam, Weight(constant(g, 1.0)), 2.0, 2.0, {0, 0}).value, 1.0 + 1e-12);
  }
}

TEST(Prop56, ZeroFamily) {
  const Grid g(2, 2);
  const GridFunction fam[] = {GridFunction(g)};
  const Ratio r = prop56_ratio(fam, Weight(constant(g, 1.0)), 2.0, 2.0, {0, 0});
  EXPECT_EQ(r.value, 0.0);
  EXPECT_TRUE(r.degenerate);
}

TEST(Ratio, Conventions) {
  EXPECT_DOUBLE_EQ(make_ratio(1.0, 4.0).value, 0.25);
  EXPECT_TRUE(make_ratio(0.0, 0.0).degenerate);
  EXPECT_FALSE(make_ratio(0.0, 1.0).degenerate);
  EXPECT_THROW(make_ratio(1.0, 0.0), InternalError);
}
