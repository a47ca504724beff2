// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/rect_table.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace dyadic {
namespace {

// Fills every level pair from the finest one by pairwise combination, first
// coarsening parameter 2 at the finest parameter-1 level, then parameter 1.
template <class Combine>
RectTable<double> build_pyramid(const GridFunction& f, Combine combine) {
  const Grid& grid = f.grid();
  const int n1 = grid.depth1(), n2 = grid.depth2();
  RectTable<double> table(grid);
  auto finest = table.level(n1, n2);
  std::copy(f.values().begin(), f.values().end(), finest.begin());

  for (int l2 = n2 - 1; l2 >= 0; --l2) {
    for (std::size_t q1 = 0; q1 < grid.side(Param::One); ++q1) {
      for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
        table.at(n1, l2, q1, q2) = combine(table.at(n1, l2 + 1, q1, 2 * q2), table.at(n1, l2 + 1, q1, 2 * q2 + 1));
      }
    }
  }
  for (int l1 = n1 - 1; l1 >= 0; --l1) {
    for (int l2 = 0; l2 <= n2; ++l2) {
      for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
        for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
          table.at(l1, l2, q1, q2) = combine(table.at(l1 + 1, l2, 2 * q1, q2), table.at(l1 + 1, l2, 2 * q1 + 1, q2));
        }
      }
    }
  }
  return table;
}

}  // namespace

RectTable<double> rectangle_means(const GridFunction& f) {
  return build_pyramid(f, [](double a, double b) { return 0.5 * (a + b); });
}

RectTable<double> rectangle_maxima(const GridFunction& f) {
  return build_pyramid(f, [](double a, double b) { return std::max(a, b); });
}

RectTable<double> rectangle_minima(const GridFunction& f) {
  return build_pyramid(f, [](double a, double b) { return std::min(a, b); });
}

GridFunction pointwise_sup(const RectTable<double>& table) {
  const Grid& grid = table.grid();
  const int n1 = grid.depth1(), n2 = grid.depth2();
  GridFunction out(grid, -std::numeric_limits<double>::infinity());
  for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
    for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
      double best = -std::numeric_limits<double>::infinity();
      for (int l1 = 0; l1 <= n1; ++l1) {
        const std::size_t q1 = i1 >> (n1 - l1);
        for (int l2 = 0; l2 <= n2; ++l2) best = std::max(best, table.at(l1, l2, q1, i2 >> (n2 - l2)));
      }
      out.at(i1, i2) = best;
    }
  }
  return out;
}

double table_max(const RectTable<double>& table) {
  const auto data = table.data();
  return *std::max_element(data.begin(), data.end());
}

std::vector<double> level_means(const GridFunction& f, int level1, int level2) {
  const Grid& grid = f.grid();
  require(level1 >= 0 && level1 <= grid.depth1() && level2 >= 0 && level2 <= grid.depth2(), "level out of range");
  const int s1 = grid.depth1() - level1, s2 = grid.depth2() - level2;
  std::vector<double> sums((std::size_t{1} << level1) << level2, 0.0);
  for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
    const std::size_t row = (i1 >> s1) << level2;
    for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) sums[row | (i2 >> s2)] += f.at(i1, i2);
  }
  const double scale = std::ldexp(1.0, -(s1 + s2));
  for (auto& s : sums) s *= scale;
  return sums;
}

}  // namespace dyadic
