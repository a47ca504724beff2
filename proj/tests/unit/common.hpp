// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <random>

#include "dyadic/grid_function.hpp"
#include "dyadic/weights.hpp"

namespace testing_util {

inline dyadic::GridFunction rand_fn(const dyadic::Grid& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  dyadic::GridFunction f(grid);
  for (auto& v : f.values()) v = u(rng);
  return f;
}

inline dyadic::GridFunction rand_positive(const dyadic::Grid& grid, std::uint64_t seed, double spread = 1.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-spread, spread);
  dyadic::GridFunction f(grid);
  for (auto& v : f.values()) v = std::exp(u(rng));
  return f;
}

inline double sup_diff(const dyadic::GridFunction& a, const dyadic::GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

inline double sup_abs(const dyadic::GridFunction& a) {
  double m = 0.0;
  for (double v : a.values()) m = std::max(m, std::abs(v));
  return m;
}

/// sup |a - b| relative to max(sup |b|, 1e-300).
inline double rel_sup(const dyadic::GridFunction& a, const dyadic::GridFunction& b) {
  return sup_diff(a, b) / std::max(sup_abs(b), 1e-300);
}

}  // namespace testing_util
