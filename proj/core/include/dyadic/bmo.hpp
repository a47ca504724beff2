// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"
#include "dyadic/rect_table.hpp"

namespace dyadic {

/// Scalars indexed by the dyadic intervals of one parameter, levels
/// 0..max_level. Absent keys are zero.
class IntervalCoefficients {
 public:
  IntervalCoefficients() = default;
  explicit IntervalCoefficients(int max_level);

  int max_level() const { return max_level_; }
  double& operator[](const DyadicInterval& i) { return values_[index(i.level, i.pos)]; }
  double operator[](const DyadicInterval& i) const { return values_[index(i.level, i.pos)]; }
  double& at(int level, std::int64_t pos) { return values_[index(level, pos)]; }
  double at(int level, std::int64_t pos) const { return values_[index(level, pos)]; }
  const std::vector<double>& raw() const { return values_; }
  IntervalCoefficients& operator*=(double s);

 private:
  static std::size_t index(int level, std::int64_t pos) {
    return (std::size_t{1} << level) - 1 + static_cast<std::size_t>(pos);
  }
  int max_level_ = 0;
  std::vector<double> values_;
};

/// Scalars indexed by the dyadic rectangles of a grid.
using RectangleCoefficients = RectTable<double>;

/// sup over dyadic K0 of (|K0|^-1 sum_{K subset K0} |a_K|^2)^{1/2}.
double seq_bmo(const IntervalCoefficients& a);

/// How the open-set supremum of product BMO is searched.
struct BmoStrategy {
  enum class Kind { Exhaustive, Sampled };
  Kind kind = Kind::Exhaustive;
  std::size_t samples = 256;
  std::uint64_t seed = 0;

  static BmoStrategy exhaustive() { return {}; }
  static BmoStrategy sampled(std::size_t samples, std::uint64_t seed) { return {Kind::Sampled, samples, seed}; }
  /// Exhaustive on grids with at most 16 cells, sampled otherwise.
  static BmoStrategy automatic(const Grid& grid, std::uint64_t seed);
};

constexpr std::size_t kExhaustiveCellLimit = 16;

struct BmoResult {
  double value = 0.0;
  /// True when the value is only a certified lower bound (sampled search).
  bool lower_bound = false;
};

/// sup over unions of finest cells Omega of (|Omega|^-1 sum_{K subset Omega} |a_K|^2)^{1/2}.
/// Sampled strategy tests every dyadic rectangle plus random unions of rectangles.
BmoResult product_bmo(const RectangleCoefficients& a, const BmoStrategy& strategy);

/// max over dyadic R of (|R|^-1 sum_{K subset R} |a_K|^2)^{1/2}.
double rectangle_bmo(const RectangleCoefficients& a);

/// sup over dyadic R of (1/|R|) integral_R |b - <b>_R|.
double little_bmo(const GridFunction& b);

/// max over slices of the one-parameter dyadic BMO norms (diagnostic only).
double little_bmo_slices(const GridFunction& b);

struct PairingRatio {
  double value = 0.0;
  bool lower_bound_bmo = false;
};

/// sum |a||b| / (||a||_BMO ||(sum |b_K|^2 1_K/|K|)^{1/2}||_{L^1}) for interval sequences.
PairingRatio h1_pairing_ratio(const IntervalCoefficients& a, const IntervalCoefficients& b);
/// Rectangle version with product BMO.
PairingRatio h1_pairing_ratio(const RectangleCoefficients& a, const RectangleCoefficients& b,
                              const BmoStrategy& strategy);

}  // namespace dyadic
