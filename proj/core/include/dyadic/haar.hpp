// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"
#include "dyadic/rect_table.hpp"

namespace dyadic {

/// Per-parameter Haar exponents: 0 selects h^0 = |I|^-1/2 1_I, 1 selects the
/// cancellative h^1 = |I|^-1/2 (1_{I_l} - 1_{I_r}).
struct HaarPattern {
  int eta1 = 1;
  int eta2 = 1;

  int operator[](Param m) const { return m == Param::One ? eta1 : eta2; }
  int index() const { return eta1 * 2 + eta2; }
  friend bool operator==(const HaarPattern&, const HaarPattern&) = default;
};

/// One-parameter Haar function of I, constant in the other parameter.
/// Throws PreconditionError for a cancellative request at the finest level.
GridFunction haar(const Grid& grid, const DyadicInterval& interval, int eta);

/// Tensor Haar function h_{I1}^{eta1} (x) h_{I2}^{eta2}.
GridFunction haar(const Grid& grid, const DyadicRectangle& rect, HaarPattern pattern);

/// Whether h_R^pattern exists on the grid (cancellative parts need children).
bool haar_admissible(const Grid& grid, const DyadicRectangle& rect, HaarPattern pattern);

/// All pairings <f, h_R^eta> in O(1) each, backed by the average pyramid.
class HaarCoefficients {
 public:
  explicit HaarCoefficients(const GridFunction& f);

  const Grid& grid() const { return means_.grid(); }
  double operator()(int l1, std::size_t q1, int l2, std::size_t q2, HaarPattern pattern) const;
  double operator()(const DyadicRectangle& r, HaarPattern pattern) const {
    return (*this)(r.first.level, static_cast<std::size_t>(r.first.pos), r.second.level,
                   static_cast<std::size_t>(r.second.pos), pattern);
  }
  const RectTable<double>& means() const { return means_; }

 private:
  RectTable<double> means_;
};

/// Accumulates sum_R c_{R,eta} h_R^eta and materializes it on the grid.
class HaarSynthesizer {
 public:
  explicit HaarSynthesizer(const Grid& grid);

  void add(int l1, std::size_t q1, int l2, std::size_t q2, HaarPattern pattern, double coefficient);
  void add(const DyadicRectangle& r, HaarPattern pattern, double coefficient) {
    add(r.first.level, static_cast<std::size_t>(r.first.pos), r.second.level,
        static_cast<std::size_t>(r.second.pos), pattern, coefficient);
  }
  GridFunction synthesize() const;

 private:
  RectTable<std::array<double, 4>> coefficients_;
};

}  // namespace dyadic
