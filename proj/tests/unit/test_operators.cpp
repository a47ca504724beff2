// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "brute.hpp"
#include "common.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/martingale.hpp"
#include "dyadic/norms.hpp"
#include "dyadic/operators.hpp"

using namespace dyadic;
using testing_util::rand_fn;
using testing_util::rel_sup;
using testing_util::sup_abs;

namespace {

std::vector<GridFunction> inputs(const Grid& g, std::size_t count, std::uint64_t seed) {
  std::vector<GridFunction> fs;
  for (std::size_t j = 0; j < count; ++j) fs.push_back(rand_fn(g, seed * 31 + j));
  return fs;
}

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// <T(f_1..f_n), f_{n+1}> through apply, against `want` on the Cauchy-Schwarz scale.
double applied(const OperatorSpec& spec, const std::vector<GridFunction>& fs, double want) {
  const std::span<const GridFunction> head(fs.data(), fs.size() - 1);
  const GridFunction t = apply(spec, head);
  const double scale = std::sqrt(inner_product(t, t) * inner_product(fs.back(), fs.back()));
  return std::abs(inner_product(t, fs.back()) - want) / std::max({std::abs(want), scale, 1e-300});
}

std::vector<double> random_vector(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> v(n);
  for (auto& x : v) x = u(rng);
  return v;
}

}  // namespace

TEST(Shift, FormMatchesQuadrupleLoop) {
  const Grid g(2, 2);
  const std::vector<std::vector<Complexity>> ks = {
      {{0, 0}, {0, 0}, {0, 0}}, {{1, 0}, {0, 1}, {1, 1}}, {{1, 1}, {1, 1}, {0, 0}}, {{0, 1}, {1, 0}, {1, 0}}};
  const std::vector<std::vector<HaarPattern>> patterns = {
      default_shift_pattern(2), {{1, 1}, {1, 1}, {1, 1}}, {{1, 0}, {0, 1}, {1, 1}}};
  std::uint64_t seed = 0;
  for (const auto& k : ks) {
    for (const auto& p : patterns) {
      const ShiftSpec s = make_shift(g, 2, k, p, ++seed);
      const auto fs = inputs(g, 3, seed);
      const double want = brute::shift_form(s, fs);
      EXPECT_LE(rel(shift_form(s, fs), want), 1e-12);
      EXPECT_LE(applied(s, fs, want), 1e-12);
    }
  }
}

TEST(Shift, ZeroInput) {
  const Grid g(2, 2);
  const ShiftSpec s = make_shift(g, 2, Complexity{1, 0}, 3);
  const GridFunction fs[] = {rand_fn(g, 1), GridFunction(g)};
  EXPECT_EQ(sup_abs(apply_shift(s, fs)), 0.0);
}

TEST(Shift, DiagonalHaarMultiplier) {
  const Grid g(3, 2);
  const ShiftSpec s = make_shift(g, 1, Complexity{0, 0}, 1, CoefficientMode::Plus);
  const GridFunction f = rand_fn(g, 5);
  GridFunction expect(g);
  for (const auto& R : all_rectangles(g)) {
    if (R.first.level < 3 && R.second.level < 2) expect += martingale_difference(f, R);
  }
  const GridFunction fs[] = {f};
  const GridFunction got = apply_shift(s, fs);
  EXPECT_LE(rel_sup(got, expect), 1e-13);
  EXPECT_NEAR(lp_norm(got, Exponent::finite(2.0)), lp_norm(expect, Exponent::finite(2.0)), 1e-13);
}

TEST(Shift, Validation) {
  const Grid g(2, 2);
  EXPECT_THROW(make_shift(g, 2, {{0, 0}, {0, 0}}, default_shift_pattern(2), 1), PreconditionError);
  // Parameter 2 has only one cancellative slot.
  EXPECT_THROW(make_shift(g, 1, {{0, 0}, {0, 0}}, {{1, 1}, {1, 0}}, 1), PreconditionError);
  const ShiftSpec s = make_shift(g, 1, Complexity{1, 1}, 1);
  EXPECT_TRUE(shift_admissible(s, DyadicRectangle()));
  EXPECT_FALSE(shift_admissible(s, DyadicRectangle(1, 0, 0, 0)));
}

TEST(Shift, TrivialAdjoint) {
  const Grid g(2, 2);
  const ShiftSpec s = make_shift(g, 2, {{1, 0}, {0, 1}, {1, 1}}, default_shift_pattern(2), 4);
  const auto fs = inputs(g, 3, 9);
  EXPECT_LE(rel(shift_form(shift_adjoint(s, 0, 0), fs), shift_form(s, fs)), 1e-14);
}

TEST(Shift, FullAdjointGeneralInputs) {
  const Grid g(3, 2);
  const ShiftSpec s = make_shift(g, 2, {{1, 0}, {0, 1}, {1, 1}}, {{1, 1}, {1, 0}, {1, 1}}, 6);
  const auto fs = inputs(g, 3, 10);
  const ShiftSpec adj = shift_adjoint(s, 1, 1);
  const std::vector<GridFunction> swapped{fs[2], fs[1], fs[0]};
  EXPECT_LE(rel(shift_form(adj, swapped), shift_form(s, fs)), 1e-12);
  EXPECT_LE(rel(brute::shift_form(adj, swapped), brute::shift_form(s, fs)), 1e-12);
  EXPECT_LE(rel(shift_form(shift_adjoint(adj, 1, 1), fs), shift_form(s, fs)), 1e-12);
}

TEST(Shift, PartialAdjointTensorInputs) {
  const Grid g(2, 2);
  const ShiftSpec s = make_shift(g, 2, {{0, 1}, {1, 0}, {1, 1}}, default_shift_pattern(2), 7);
  std::mt19937_64 rng(8);
  std::vector<std::vector<double>> u, v;
  for (int j = 0; j < 3; ++j) {
    u.push_back(random_vector(4, rng));
    v.push_back(random_vector(4, rng));
  }
  std::vector<GridFunction> fs;
  for (int j = 0; j < 3; ++j) fs.push_back(brute::tensor(g, u[j], v[j]));
  const double base = brute::shift_form(s, fs);
  for (std::size_t j1 = 0; j1 <= 2; ++j1) {
    for (std::size_t j2 = 0; j2 <= 2; ++j2) {
      auto uu = u;
      auto vv = v;
      if (j1 > 0) std::swap(uu[j1 - 1], uu[2]);
      if (j2 > 0) std::swap(vv[j2 - 1], vv[2]);
      std::vector<GridFunction> permuted;
      for (int j = 0; j < 3; ++j) permuted.push_back(brute::tensor(g, uu[j], vv[j]));
      EXPECT_LE(rel(brute::shift_form(shift_adjoint(s, j1, j2), permuted), base), 1e-12) << j1 << j2;
    }
  }
}

TEST(PartialParaproduct, FormMatchesOracle) {
  const Grid g(2, 2);
  std::uint64_t seed = 0;
  for (Param m : {Param::One, Param::Two}) {
    for (const auto& cfg : std::vector<std::pair<std::vector<int>, std::vector<int>>>{
             {{0, 0, 0}, {1, 0, 1}}, {{1, 0, 1}, {1, 1, 0}}, {{1, 1, 1}, {1, 1, 1}}}) {
      for (std::size_t para = 0; para <= 2; ++para) {
        const auto spec = make_partial_paraproduct(g, 2, m, cfg.first, cfg.second, para, ++seed);
        const auto fs = inputs(g, 3, seed + 100);
        const double want = brute::partial_form(spec, fs);
        EXPECT_LE(rel(partial_paraproduct_form(spec, fs), want), 1e-12);
        EXPECT_LE(applied(spec, fs, want), 1e-12);
      }
    }
  }
}

TEST(PartialParaproduct, CoefficientNormalization) {
  const Grid g(3, 3);
  const auto spec = make_partial_paraproduct(g, 2, Param::One, 1, 5);
  const DyadicInterval K{Param::One, 0, 0};
  const auto is = K.descendants(1);
  const std::vector<DyadicInterval> slots{is[0], is[1], is[1]};
  const IntervalCoefficients a = normalized_coefficients(spec, K, slots);
  EXPECT_LE(seq_bmo(a), partial_bound(K, slots) * (1.0 + 1e-12));
  EXPECT_EQ(a.max_level(), 2);
}

TEST(PartialParaproduct, SingleKey) {
  const Grid g(2, 2);
  PartialParaproductSpec spec{g, 1, Param::One, {0, 0}, {1, 1}, 1,
                              [](const DyadicInterval& K, std::span<const DyadicInterval>) {
                                IntervalCoefficients a(1);
                                if (K.level == 0) a.at(0, 0) = 0.5;
                                return a;
                              }};
  validate(spec);
  const GridFunction f1 = rand_fn(g, 1), f2 = rand_fn(g, 2);
  const brute::Rect top{0, 0, 0, 0};
  const double p1 = brute::inner(f1, brute::haar(g, top, 1, 0));
  const GridFunction h11 = brute::haar(g, top, 1, 1);
  const std::vector<GridFunction> fs{f1, f2};
  EXPECT_NEAR(partial_paraproduct_form(spec, fs), 0.5 * p1 * brute::inner(f2, h11), 1e-15);
  const GridFunction one[] = {f1};
  EXPECT_LE(testing_util::sup_diff(apply_partial_paraproduct(spec, one), h11 * (0.5 * p1)), 1e-15);
}

TEST(FullParaproduct, FormMatchesOracle) {
  const Grid g(2, 2);
  std::uint64_t seed = 0;
  for (std::size_t s1 = 0; s1 <= 2; ++s1) {
    for (std::size_t s2 = 0; s2 <= 2; ++s2) {
      const auto spec = make_full_paraproduct(g, 2, s1, s2, ++seed, 0.5);
      EXPECT_LE(spec.bmo.value, 1.0 + 1e-12);
      EXPECT_LE(product_bmo(spec.a, BmoStrategy::exhaustive()).value, 1.0 + 1e-12);
      const auto fs = inputs(g, 3, seed + 50);
      const double want = brute::full_form(spec, fs);
      EXPECT_LE(rel(full_paraproduct_form(spec, fs), want), 1e-12);
      EXPECT_LE(applied(spec, fs, want), 1e-12);
    }
  }
}

TEST(FullParaproduct, SingleTopRectangle) {
  const Grid g(2, 1);
  RectangleCoefficients a(g);
  a[DyadicRectangle()] = 0.5;
  const auto spec = make_full_paraproduct(1, 1, 1, a, 1);
  const GridFunction f2 = rand_fn(g, 3);
  const std::vector<GridFunction> fs{constant(g, 1.0), f2};
  EXPECT_NEAR(full_paraproduct_form(spec, fs), 0.5 * brute::inner(f2, brute::haar(g, {0, 0, 0, 0}, 1, 1)), 1e-15);
  RectangleCoefficients fine(g);
  fine[DyadicRectangle(2, 0, 0, 0)] = 1.0;
  EXPECT_THROW(make_full_paraproduct(1, 1, 1, fine, 1), PreconditionError);
}

TEST(Commutator, ConstantSymbolVanishes) {
  const Grid g(2, 2);
  const Operator op = as_operator(make_shift(g, 2, Complexity{1, 0}, 2));
  const auto fs = inputs(g, 2, 4);
  EXPECT_LE(sup_abs(commutator(op, constant(g, 3.0), 0, fs)), 1e-14);
  EXPECT_LE(sup_abs(commutator_contour(op, constant(g, 3.0), 1, fs)), 1e-12);
}

TEST(Commutator, LinearInSymbol) {
  const Grid g(2, 2);
  const Operator op = as_operator(make_shift(g, 2, Complexity{0, 1}, 3));
  const auto fs = inputs(g, 2, 5);
  const GridFunction b1 = rand_fn(g, 6), b2 = rand_fn(g, 7);
  const GridFunction lhs = commutator(op, b1 * 2.0 + b2, 1, fs);
  const GridFunction rhs = commutator(op, b1, 1, fs) * 2.0 + commutator(op, b2, 1, fs);
  EXPECT_LE(rel_sup(lhs, rhs), 1e-13);
}

TEST(Commutator, ContourAgreement) {
  const Grid g(2, 2);
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Operator op = as_operator(make_full_paraproduct(g, 2, 2, 0, s, 0.5));
    const auto fs = inputs(g, 2, 20 + s);
    const GridFunction b = rand_fn(g, 40 + s);
    const GridFunction direct = commutator(op, b, 0, fs);
    const double delta = default_contour_radius(b);
    EXPECT_LE(rel_sup(commutator_contour(op, b, 0, fs, {delta, 64}), direct), 1e-6);
    EXPECT_LE(rel_sup(commutator_contour(op, b, 0, fs, {delta / 2.0, 64}), direct), 1e-6);
  }
}

TEST(Commutator, IteratedComposes) {
  const Grid g(2, 2);
  const Operator op = as_operator(make_shift(g, 2, Complexity{0, 0}, 8));
  const GridFunction b1 = rand_fn(g, 9), b2 = rand_fn(g, 10);
  const auto fs = inputs(g, 2, 11);
  const Operator c1 = commutator_operator(op, b1, 0);
  const GridFunction iter = commutator(c1, b2, 1, fs);
  // [[b1,T]_1, b2]_2 = b2 [b1,T]_1(f) - [b1,T]_1(f1, b2 f2)
  std::vector<GridFunction> moved = fs;
  moved[1] = moved[1] * b2;
  const GridFunction expect = b2 * commutator(op, b1, 0, fs) - commutator(op, b1, 0, moved);
  EXPECT_LE(rel_sup(iter, expect), 1e-13);
}
