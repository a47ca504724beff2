// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/martingale.hpp"

#include <cmath>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

// Cell accessor addressing the grid by (coordinate in m, coordinate in the other parameter).
struct Axis {
  const Grid& grid;
  Param m;
  std::size_t flat(std::size_t along, std::size_t across) const {
    return m == Param::One ? grid.flat(along, across) : grid.flat(across, along);
  }
  std::size_t across_size() const { return grid.side(other(m)); }
};

void check_interval(const GridFunction& f, const DyadicInterval& interval) {
  require(interval.valid_on(f.grid()), "interval not on grid");
}

// out += Delta^m_J f, touching only the cells of J x [0,1).
void accumulate_difference(const GridFunction& f, const DyadicInterval& j, GridFunction& out) {
  const Axis axis{f.grid(), j.param};
  const std::size_t start = j.first_cell(f.grid()), count = j.cell_count(f.grid()), half = count / 2;
  for (std::size_t t = 0; t < axis.across_size(); ++t) {
    double left = 0.0, right = 0.0;
    for (std::size_t i = 0; i < half; ++i) left += f[axis.flat(start + i, t)];
    for (std::size_t i = half; i < count; ++i) right += f[axis.flat(start + i, t)];
    left /= static_cast<double>(half);
    right /= static_cast<double>(half);
    const double mean = 0.5 * (left + right);
    for (std::size_t i = 0; i < half; ++i) out[axis.flat(start + i, t)] += left - mean;
    for (std::size_t i = half; i < count; ++i) out[axis.flat(start + i, t)] += right - mean;
  }
}

}  // namespace

double average(const GridFunction& f, const DyadicRectangle& rect) {
  require(rect.valid_on(f.grid()), "rectangle not on grid");
  const Grid& grid = f.grid();
  const std::size_t a1 = rect.first.first_cell(grid), n1 = rect.first.cell_count(grid);
  const std::size_t a2 = rect.second.first_cell(grid), n2 = rect.second.cell_count(grid);
  double sum = 0.0;
  for (std::size_t i1 = a1; i1 < a1 + n1; ++i1) {
    for (std::size_t i2 = a2; i2 < a2 + n2; ++i2) sum += f.at(i1, i2);
  }
  return sum / static_cast<double>(n1 * n2);
}

std::vector<double> slice_average(const GridFunction& f, const DyadicInterval& interval) {
  check_interval(f, interval);
  const Axis axis{f.grid(), interval.param};
  const std::size_t start = interval.first_cell(f.grid()), count = interval.cell_count(f.grid());
  std::vector<double> out(axis.across_size(), 0.0);
  for (std::size_t t = 0; t < out.size(); ++t) {
    double sum = 0.0;
    for (std::size_t i = 0; i < count; ++i) sum += f[axis.flat(start + i, t)];
    out[t] = sum / static_cast<double>(count);
  }
  return out;
}

GridFunction expectation(const GridFunction& f, const DyadicInterval& interval) {
  const auto slice = slice_average(f, interval);
  const Axis axis{f.grid(), interval.param};
  const std::size_t start = interval.first_cell(f.grid()), count = interval.cell_count(f.grid());
  GridFunction out(f.grid());
  for (std::size_t t = 0; t < slice.size(); ++t) {
    for (std::size_t i = 0; i < count; ++i) out[axis.flat(start + i, t)] = slice[t];
  }
  return out;
}

GridFunction conditional_expectation(const GridFunction& f, Param m, int level) {
  const Grid& grid = f.grid();
  require(level >= 0 && level <= grid.depth(m), "level out of range");
  const Axis axis{grid, m};
  const std::size_t width = std::size_t{1} << (grid.depth(m) - level);
  GridFunction out(grid);
  for (std::size_t t = 0; t < axis.across_size(); ++t) {
    for (std::size_t start = 0; start < grid.side(m); start += width) {
      double sum = 0.0;
      for (std::size_t i = 0; i < width; ++i) sum += f[axis.flat(start + i, t)];
      const double mean = sum / static_cast<double>(width);
      for (std::size_t i = 0; i < width; ++i) out[axis.flat(start + i, t)] = mean;
    }
  }
  return out;
}

GridFunction level_difference(const GridFunction& f, Param m, int level) {
  require(level >= 0 && level < f.grid().depth(m), "martingale level must have children");
  return conditional_expectation(f, m, level + 1) - conditional_expectation(f, m, level);
}

GridFunction martingale_difference(const GridFunction& f, const DyadicInterval& interval) {
  check_interval(f, interval);
  require(interval.level < f.grid().depth(interval.param), "martingale difference needs an interval with children");
  GridFunction out(f.grid());
  accumulate_difference(f, interval, out);
  return out;
}

GridFunction martingale_difference(const GridFunction& f, const DyadicRectangle& rect) {
  return martingale_difference(martingale_difference(f, rect.second), rect.first);
}

GridFunction martingale_block(const GridFunction& f, const DyadicInterval& interval, int k) {
  check_interval(f, interval);
  require(k >= 0, "block depth must be non-negative");
  require(interval.level + k < f.grid().depth(interval.param), "martingale block exceeds grid depth");
  GridFunction out(f.grid());
  for (const auto& j : interval.descendants(k)) accumulate_difference(f, j, out);
  return out;
}

GridFunction martingale_block(const GridFunction& f, const DyadicRectangle& rect, int k1, int k2) {
  return martingale_block(martingale_block(f, rect.second, k2), rect.first, k1);
}

}  // namespace dyadic
