// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/grid_function.hpp"

#include <cmath>

namespace dyadic {

GridFunction cell_indicator(const Grid& grid, std::size_t i1, std::size_t i2) {
  require(i1 < grid.side(Param::One) && i2 < grid.side(Param::Two), "cell out of range");
  GridFunction f(grid);
  f.at(i1, i2) = 1.0;
  return f;
}

GridFunction indicator(const Grid& grid, const DyadicRectangle& rect) {
  require(rect.valid_on(grid), "rectangle not on grid");
  GridFunction f(grid);
  const std::size_t a1 = rect.first.first_cell(grid), n1 = rect.first.cell_count(grid);
  const std::size_t a2 = rect.second.first_cell(grid), n2 = rect.second.cell_count(grid);
  for (std::size_t i1 = a1; i1 < a1 + n1; ++i1) {
    for (std::size_t i2 = a2; i2 < a2 + n2; ++i2) f.at(i1, i2) = 1.0;
  }
  return f;
}

GridFunction constant(const Grid& grid, double value) { return GridFunction(grid, value); }

GridFunction abs(const GridFunction& f) {
  return f.map([](double v) { return std::abs(v); });
}

GridFunction real_part(const ComplexGridFunction& f) {
  GridFunction out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].real();
  return out;
}

GridFunction imag_part(const ComplexGridFunction& f) {
  GridFunction out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i].imag();
  return out;
}

ComplexGridFunction to_complex(const GridFunction& f) {
  ComplexGridFunction out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[i];
  return out;
}

}  // namespace dyadic
