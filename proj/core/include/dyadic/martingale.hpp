// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"

namespace dyadic {

/// (1/|R|) * integral of f over R.
double average(const GridFunction& f, const DyadicRectangle& rect);

/// Slice average <f>_{I,m}: integrates in parameter m only. The result is
/// indexed by the finest cells of the other parameter.
std::vector<double> slice_average(const GridFunction& f, const DyadicInterval& interval);

/// E^m_I f = <f>_{I,m} 1_I, acting in parameter m.
GridFunction expectation(const GridFunction& f, const DyadicInterval& interval);

/// Sum of E^m_I f over all intervals of the given level (conditional expectation).
GridFunction conditional_expectation(const GridFunction& f, Param m, int level);

/// Sum over all I of one level of Delta^m_I f, i.e. E_{level+1} f - E_level f.
GridFunction level_difference(const GridFunction& f, Param m, int level);

/// Delta^m_I f = sum over children J of E_J f - E_I f.
GridFunction martingale_difference(const GridFunction& f, const DyadicInterval& interval);

/// Delta_R f = Delta^1_{I1} Delta^2_{I2} f.
GridFunction martingale_difference(const GridFunction& f, const DyadicRectangle& rect);

/// Delta^m_{I,k} f = sum over J with J^(k) = I of Delta^m_J f.
GridFunction martingale_block(const GridFunction& f, const DyadicInterval& interval, int k);

/// Delta_{K,(k1,k2)} f = Delta^1_{K1,k1} Delta^2_{K2,k2} f.
GridFunction martingale_block(const GridFunction& f, const DyadicRectangle& rect, int k1, int k2);

}  // namespace dyadic
