// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/grid.hpp"

#include <cmath>

#include "dyadic/errors.hpp"

namespace dyadic {

Grid::Grid(int depth1, int depth2) : depths_{depth1, depth2} {
  if (depth1 < 0 || depth2 < 0 || depth1 > kMaxDepth || depth2 > kMaxDepth ||
      depth1 + depth2 > 2 * 12) {
    throw PreconditionError("grid depths out of range");
  }
}

double Grid::cell_measure() const { return std::ldexp(1.0, -(depths_[0] + depths_[1])); }

double DyadicInterval::length() const { return std::ldexp(1.0, -level); }

DyadicInterval DyadicInterval::parent(int k) const {
  require(k >= 0 && level >= k, "parent does not exist");
  return {param, level - k, pos >> k};
}

std::vector<DyadicInterval> DyadicInterval::children(const Grid& grid) const {
  if (level >= grid.depth(param)) return {};
  return {{param, level + 1, 2 * pos}, {param, level + 1, 2 * pos + 1}};
}

std::vector<DyadicInterval> DyadicInterval::descendants(int k) const {
  require(k >= 0, "negative descendant depth");
  std::vector<DyadicInterval> out;
  const std::int64_t count = std::int64_t{1} << k;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back({param, level + k, (pos << k) + i});
  return out;
}

bool DyadicInterval::contains(const DyadicInterval& other) const {
  if (param != other.param || other.level < level) return false;
  return (other.pos >> (other.level - level)) == pos;
}

std::size_t DyadicInterval::first_cell(const Grid& grid) const {
  return static_cast<std::size_t>(pos) << (grid.depth(param) - level);
}

std::size_t DyadicInterval::cell_count(const Grid& grid) const {
  return std::size_t{1} << (grid.depth(param) - level);
}

bool DyadicInterval::valid_on(const Grid& grid) const {
  return level >= 0 && level <= grid.depth(param) && pos >= 0 && pos < (std::int64_t{1} << level);
}

DyadicInterval top_interval(Param m) { return {m, 0, 0}; }

DyadicRectangle::DyadicRectangle(DyadicInterval i1, DyadicInterval i2) : first(i1), second(i2) {
  require(i1.param == Param::One && i2.param == Param::Two, "rectangle needs one interval per parameter");
}

DyadicRectangle::DyadicRectangle(int level1, std::int64_t pos1, int level2, std::int64_t pos2)
    : first{Param::One, level1, pos1}, second{Param::Two, level2, pos2} {}

bool DyadicRectangle::contains_cell(const Grid& grid, std::size_t i1, std::size_t i2) const {
  return static_cast<std::int64_t>(i1 >> (grid.depth1() - first.level)) == first.pos &&
         static_cast<std::int64_t>(i2 >> (grid.depth2() - second.level)) == second.pos;
}

std::vector<DyadicRectangle> all_rectangles(const Grid& grid) {
  std::vector<DyadicRectangle> out;
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      for (std::int64_t q1 = 0; q1 < (std::int64_t{1} << l1); ++q1) {
        for (std::int64_t q2 = 0; q2 < (std::int64_t{1} << l2); ++q2) out.emplace_back(l1, q1, l2, q2);
      }
    }
  }
  return out;
}

std::vector<DyadicInterval> intervals_up_to(Param m, int max_level) {
  std::vector<DyadicInterval> out;
  for (int l = 0; l <= max_level; ++l) {
    for (std::int64_t q = 0; q < (std::int64_t{1} << l); ++q) out.push_back({m, l, q});
  }
  return out;
}

}  // namespace dyadic
