// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

// Slow reference implementations written straight from the definitions.
// Only the Grid / GridFunction containers and the operator spec structs are
// shared with the library; every sum is an explicit loop over cells.

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"
#include "dyadic/operators.hpp"

namespace brute {

using dyadic::Grid;
using dyadic::GridFunction;

struct Rect {
  int l1 = 0;
  std::int64_t q1 = 0;
  int l2 = 0;
  std::int64_t q2 = 0;
};

/// Every dyadic rectangle of the grid, levels 0..N in each parameter.
std::vector<Rect> rects(const Grid& grid);
bool in_interval(int depth, int level, std::int64_t pos, std::size_t cell);
bool in_rect(const Grid& grid, const Rect& r, std::size_t i1, std::size_t i2);

/// One-parameter Haar value on a finest cell; eta = 0 is |I|^{-1/2} 1_I.
double haar1(int depth, int level, std::int64_t pos, int eta, std::size_t cell);
GridFunction haar(const Grid& grid, const Rect& r, int eta1, int eta2);
/// 1_I / |I| in parameter m (0 or 1), constant in the other variable.
GridFunction avg_kernel(const Grid& grid, int m, int level, std::int64_t pos);
/// Tensor of two one-variable profiles.
GridFunction tensor(const Grid& grid, const std::vector<double>& u, const std::vector<double>& v);

double inner(const GridFunction& f, const GridFunction& g);
double average(const GridFunction& f, const Rect& r);
double lp(const GridFunction& f, double p);

/// sup over rectangles containing each point of prod <|f_i|>_R.
GridFunction maximal(std::span<const GridFunction> fs);
GridFunction weighted_maximal(const GridFunction& f, const GridFunction& mu);

/// sup_R <w>_R <w^{-1/(p-1)}>_R^{p-1}.
double ap_constant(const GridFunction& w, double p);
/// sup_R <w^p>^{1/p} prod <w_i^{-p_i'}>^{1/p_i'} for finite p_i > 1.
double multilinear_constant(std::span<const GridFunction> ws, std::span<const double> p);
/// sup_R <w>^mu_R (<w^{-1/(p-1)}>^mu_R)^{p-1}.
double ap_mu_constant(const GridFunction& w, double p, const GridFunction& mu);

/// <f, h_R> h_R with both Haar functions cancellative.
GridFunction diff(const GridFunction& f, const Rect& r);
/// One-parameter difference in parameter m (0 or 1).
GridFunction diff1(const GridFunction& f, int m, int level, std::int64_t pos);
/// Sum of diff1 over the descendants k levels below; zero past the finest level.
GridFunction block1(const GridFunction& f, int m, int level, std::int64_t pos, int k);
GridFunction square_full(const GridFunction& f);

GridFunction a1k(std::span<const GridFunction> fs, std::array<int, 2> k, std::size_t first, std::size_t second);
/// outer_second = true: l^2 over K^2 outside.
GridFunction a2k(std::span<const GridFunction> fs, std::array<int, 3> k, bool outer_second, std::size_t outer,
                 std::size_t inner_a, std::size_t inner_b);
GridFunction a3k(std::span<const GridFunction> fs, std::array<int, 4> k, std::array<std::size_t, 4> slots);
double prop56_ratio(std::span<const GridFunction> family, const GridFunction& u, double p, double s,
                    std::array<int, 2> k);

/// Coefficients listed level by level: a[level][pos].
double seq_bmo(const std::vector<std::vector<double>>& a);
double little_bmo(const GridFunction& b);

double shift_form(const dyadic::ShiftSpec& spec, std::span<const GridFunction> fs);
double partial_form(const dyadic::PartialParaproductSpec& spec, std::span<const GridFunction> fs);
double full_form(const dyadic::FullParaproductSpec& spec, std::span<const GridFunction> fs);

}  // namespace brute
