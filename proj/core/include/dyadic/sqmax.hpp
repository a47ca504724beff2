// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <span>

#include "dyadic/grid_function.hpp"
#include "dyadic/weights.hpp"

namespace dyadic {

/// M_D(f_1..f_n)(x) = sup over dyadic R containing x of prod_i <|f_i|>_R.
GridFunction maximal(std::span<const GridFunction> fs);

/// M^mu_D f(x) = sup over dyadic R containing x of <|f|>^mu_R.
GridFunction weighted_maximal(const GridFunction& f, const Weight& mu);

/// S_D f = (sum_R |Delta_R f|^2)^{1/2}.
GridFunction square_full(const GridFunction& f);
/// S^m f = (sum_I |Delta^m_I f|^2)^{1/2}.
GridFunction square_param(const GridFunction& f, Param m);
/// (sum_K |Delta_{K,(k1,k2)} f|^2)^{1/2}. K ranges over every k-fold dyadic
/// ancestor, including the ancestors of [0,1) that lie beyond the unit square,
/// so the regrouping is complete. Requires k_m <= N_m - 1.
GridFunction square_block(const GridFunction& f, int k1, int k2);

/// Slots receiving the parameter-1 and parameter-2 blocks of Delta_{K,k}.
struct A1Assignment {
  std::size_t first = 0;
  std::size_t second = 0;
};

/// A_{1,k} = (sum_K <|blocked f|>_K^2 prod <|f_j|>_K^2 1_K)^{1/2}.
GridFunction a1k(std::span<const GridFunction> fs, std::array<int, 2> k, A1Assignment assignment = {});

/// OuterSecond: l^2 over K^2 outside, l^1 over K^1 inside, one parameter-2
/// block and two parameter-1 blocks. OuterFirst swaps the parameters.
enum class A2Orientation { OuterSecond, OuterFirst };

/// k = (k_outer, k_inner_a, k_inner_b) and the slots carrying each block.
struct A2Assignment {
  A2Orientation orientation = A2Orientation::OuterSecond;
  std::size_t outer = 0;
  std::size_t inner_a = 1;
  std::size_t inner_b = 2;
};

GridFunction a2k(std::span<const GridFunction> fs, std::array<int, 3> k, A2Assignment assignment = {});

/// k = (k1, k2, k3, k4): parameter-1 blocks k1, k3 and parameter-2 blocks
/// k2, k4. The default puts Delta_{K,(k1,k2)} on f_1 and Delta_{K,(k3,k4)} on f_2.
struct A3Assignment {
  std::size_t first_a = 0;
  std::size_t second_a = 0;
  std::size_t first_b = 1;
  std::size_t second_b = 1;
};

/// A_{3,k} = sum_K <|..|>_K <|..|>_K prod <|f_j|>_K 1_K.
GridFunction a3k(std::span<const GridFunction> fs, std::array<int, 4> k, A3Assignment assignment = {});

/// A ratio of norms; 0/0 is reported as 0 and flagged.
struct Ratio {
  double value = 0.0;
  bool degenerate = false;
};

/// Makes the ratio, flagging 0/0. Throws InternalError on x/0 with x > 0.
Ratio make_ratio(double numerator, double denominator);

/// LHS / RHS of the weighted vector-valued square-function bound with the
/// averaging factor 1/<u>_K^2.
Ratio prop56_ratio(std::span<const GridFunction> family, const Weight& u, double p, double s, std::array<int, 2> k);

}  // namespace dyadic
