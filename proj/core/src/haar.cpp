// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/haar.hpp"

#include <cmath>

#include "dyadic/errors.hpp"

namespace dyadic {

GridFunction haar(const Grid& grid, const DyadicInterval& interval, int eta) {
  require(interval.valid_on(grid), "interval not on grid");
  require(eta == 0 || eta == 1, "Haar exponent must be 0 or 1");
  require(eta == 0 || interval.level < grid.depth(interval.param),
          "cancellative Haar function needs an interval with children");
  const double amp = std::sqrt(std::ldexp(1.0, interval.level));
  const std::size_t start = interval.first_cell(grid), count = interval.cell_count(grid);
  std::vector<double> profile(grid.side(interval.param), 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    profile[start + i] = (eta == 1 && i >= count / 2) ? -amp : amp;
  }
  GridFunction f(grid);
  for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
    for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
      f.at(i1, i2) = profile[interval.param == Param::One ? i1 : i2];
    }
  }
  return f;
}

GridFunction haar(const Grid& grid, const DyadicRectangle& rect, HaarPattern pattern) {
  return haar(grid, rect.first, pattern.eta1) * haar(grid, rect.second, pattern.eta2);
}

bool haar_admissible(const Grid& grid, const DyadicRectangle& rect, HaarPattern pattern) {
  return rect.valid_on(grid) && (pattern.eta1 == 0 || rect.first.level < grid.depth1()) &&
         (pattern.eta2 == 0 || rect.second.level < grid.depth2());
}

HaarCoefficients::HaarCoefficients(const GridFunction& f) : means_(rectangle_means(f)) {}

double HaarCoefficients::operator()(int l1, std::size_t q1, int l2, std::size_t q2, HaarPattern pattern) const {
  const double root = std::sqrt(std::ldexp(1.0, -(l1 + l2)));
  switch (pattern.index()) {
    case 0:
      return root * means_.at(l1, l2, q1, q2);
    case 1:  // h^0 (x) h^1
      return 0.5 * root * (means_.at(l1, l2 + 1, q1, 2 * q2) - means_.at(l1, l2 + 1, q1, 2 * q2 + 1));
    case 2:  // h^1 (x) h^0
      return 0.5 * root * (means_.at(l1 + 1, l2, 2 * q1, q2) - means_.at(l1 + 1, l2, 2 * q1 + 1, q2));
    default:
      return 0.25 * root *
             (means_.at(l1 + 1, l2 + 1, 2 * q1, 2 * q2) - means_.at(l1 + 1, l2 + 1, 2 * q1, 2 * q2 + 1) -
              means_.at(l1 + 1, l2 + 1, 2 * q1 + 1, 2 * q2) + means_.at(l1 + 1, l2 + 1, 2 * q1 + 1, 2 * q2 + 1));
  }
}

HaarSynthesizer::HaarSynthesizer(const Grid& grid) : coefficients_(grid, {0.0, 0.0, 0.0, 0.0}) {}

void HaarSynthesizer::add(int l1, std::size_t q1, int l2, std::size_t q2, HaarPattern pattern, double coefficient) {
  const Grid& grid = coefficients_.grid();
  require((pattern.eta1 == 0 || l1 < grid.depth1()) && (pattern.eta2 == 0 || l2 < grid.depth2()),
          "cancellative Haar function needs an interval with children");
  coefficients_.at(l1, l2, q1, q2)[static_cast<std::size_t>(pattern.index())] += coefficient;
}

GridFunction HaarSynthesizer::synthesize() const {
  const Grid& grid = coefficients_.grid();
  const int n1 = grid.depth1(), n2 = grid.depth2();
  GridFunction out(grid);
  for (int l1 = 0; l1 <= n1; ++l1) {
    for (int l2 = 0; l2 <= n2; ++l2) {
      const double amp = std::sqrt(std::ldexp(1.0, l1 + l2));
      const std::size_t w1 = std::size_t{1} << (n1 - l1), w2 = std::size_t{1} << (n2 - l2);
      for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
        for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
          const auto& c = coefficients_.at(l1, l2, q1, q2);
          if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0 && c[3] == 0.0) continue;
          for (std::size_t a = 0; a < w1; ++a) {
            const double s1 = a < w1 / 2 ? 1.0 : -1.0;
            for (std::size_t b = 0; b < w2; ++b) {
              const double s2 = b < w2 / 2 ? 1.0 : -1.0;
              out.at(q1 * w1 + a, q2 * w2 + b) += amp * (c[0] + c[1] * s2 + c[2] * s1 + c[3] * s1 * s2);
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace dyadic
