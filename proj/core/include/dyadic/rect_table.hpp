// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"

namespace dyadic {

/// Dense storage of one value per dyadic rectangle of a grid. Rectangles of
/// level pair (l1, l2) occupy a contiguous row-major block of 2^l1 x 2^l2.
template <class T>
class RectTable {
 public:
  RectTable() = default;
  explicit RectTable(const Grid& grid, T fill = T{}) : grid_(grid) {
    const int n2 = grid.depth2() + 1;
    offsets_.resize(static_cast<std::size_t>((grid.depth1() + 1) * n2) + 1, 0);
    std::size_t offset = 0;
    for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
      for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
        offsets_[static_cast<std::size_t>(l1 * n2 + l2)] = offset;
        offset += (std::size_t{1} << l1) << l2;
      }
    }
    offsets_.back() = offset;
    data_.assign(offset, fill);
  }

  const Grid& grid() const { return grid_; }

  T& at(int l1, int l2, std::size_t q1, std::size_t q2) {
    return data_[offset(l1, l2) + ((q1 << l2) | q2)];
  }
  const T& at(int l1, int l2, std::size_t q1, std::size_t q2) const {
    return data_[offset(l1, l2) + ((q1 << l2) | q2)];
  }
  T& operator[](const DyadicRectangle& r) {
    return at(r.first.level, r.second.level, static_cast<std::size_t>(r.first.pos),
              static_cast<std::size_t>(r.second.pos));
  }
  const T& operator[](const DyadicRectangle& r) const {
    return at(r.first.level, r.second.level, static_cast<std::size_t>(r.first.pos),
              static_cast<std::size_t>(r.second.pos));
  }

  std::span<T> level(int l1, int l2) {
    return {data_.data() + offset(l1, l2), (std::size_t{1} << l1) << l2};
  }
  std::span<const T> level(int l1, int l2) const {
    return {data_.data() + offset(l1, l2), (std::size_t{1} << l1) << l2};
  }
  std::span<const T> data() const { return data_; }
  std::span<T> data() { return data_; }

 private:
  std::size_t offset(int l1, int l2) const {
    return offsets_[static_cast<std::size_t>(l1 * (grid_.depth2() + 1) + l2)];
  }

  Grid grid_;
  std::vector<std::size_t> offsets_;
  std::vector<T> data_;
};

/// Lebesgue averages <f>_R for every dyadic rectangle R.
RectTable<double> rectangle_means(const GridFunction& f);
/// max_R f for every dyadic rectangle R.
RectTable<double> rectangle_maxima(const GridFunction& f);
/// min_R f for every dyadic rectangle R.
RectTable<double> rectangle_minima(const GridFunction& f);

/// x -> sup over dyadic rectangles R containing x of table[R].
GridFunction pointwise_sup(const RectTable<double>& table);

/// Maximum entry of the table (the supremum over all dyadic rectangles).
double table_max(const RectTable<double>& table);

/// Block averages of f over the rectangles of one level pair, row-major.
std::vector<double> level_means(const GridFunction& f, int level1, int level2);

}  // namespace dyadic
