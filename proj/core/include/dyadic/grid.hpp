// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace dyadic {

/// Index of a product parameter. Only the bi-parameter case is modelled.
enum class Param : int { One = 0, Two = 1 };

constexpr Param other(Param m) { return m == Param::One ? Param::Two : Param::One; }
constexpr int index_of(Param m) { return static_cast<int>(m); }

/// Finite bi-parameter dyadic structure on [0,1)^2: 2^N1 x 2^N2 finest cells,
/// cell (i1, i2) stored at flat index i1 * 2^N2 + i2.
class Grid {
 public:
  static constexpr int kMaxDepth = 14;

  Grid() = default;
  Grid(int depth1, int depth2);

  int depth(Param m) const { return depths_[index_of(m)]; }
  int depth1() const { return depths_[0]; }
  int depth2() const { return depths_[1]; }
  std::size_t side(Param m) const { return std::size_t{1} << depth(m); }
  std::size_t cells() const { return side(Param::One) * side(Param::Two); }
  double cell_measure() const;
  std::size_t flat(std::size_t i1, std::size_t i2) const { return (i1 << depths_[1]) | i2; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::array<int, 2> depths_{0, 0};
};

/// Dyadic interval [q 2^-level, (q+1) 2^-level) in one parameter.
struct DyadicInterval {
  Param param = Param::One;
  int level = 0;
  std::int64_t pos = 0;

  double length() const;
  bool has_parent(int k = 1) const { return level >= k; }
  DyadicInterval parent(int k = 1) const;
  /// Children on a grid of the given depth; empty at the finest level.
  std::vector<DyadicInterval> children(const Grid& grid) const;
  /// Descendants exactly `k` levels down, left to right.
  std::vector<DyadicInterval> descendants(int k) const;
  bool contains(const DyadicInterval& other) const;
  /// First finest cell index (in this parameter) covered on `grid`.
  std::size_t first_cell(const Grid& grid) const;
  std::size_t cell_count(const Grid& grid) const;
  bool valid_on(const Grid& grid) const;

  friend bool operator==(const DyadicInterval&, const DyadicInterval&) = default;
};

DyadicInterval top_interval(Param m);

/// Product I^1 x I^2 of intervals in parameters 1 and 2.
struct DyadicRectangle {
  DyadicInterval first{Param::One, 0, 0};
  DyadicInterval second{Param::Two, 0, 0};

  DyadicRectangle() = default;
  DyadicRectangle(DyadicInterval i1, DyadicInterval i2);
  DyadicRectangle(int level1, std::int64_t pos1, int level2, std::int64_t pos2);

  const DyadicInterval& operator[](Param m) const { return m == Param::One ? first : second; }
  double measure() const { return first.length() * second.length(); }
  bool contains(const DyadicRectangle& other) const {
    return first.contains(other.first) && second.contains(other.second);
  }
  bool contains_cell(const Grid& grid, std::size_t i1, std::size_t i2) const;
  bool valid_on(const Grid& grid) const { return first.valid_on(grid) && second.valid_on(grid); }

  friend bool operator==(const DyadicRectangle&, const DyadicRectangle&) = default;
};

/// Every dyadic rectangle of the grid, coarse to fine.
std::vector<DyadicRectangle> all_rectangles(const Grid& grid);

/// Every dyadic interval of parameter m at levels [0, max_level].
std::vector<DyadicInterval> intervals_up_to(Param m, int max_level);

}  // namespace dyadic
