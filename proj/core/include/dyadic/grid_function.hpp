// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "dyadic/errors.hpp"
#include "dyadic/grid.hpp"

namespace dyadic {

/// Step function constant on the finest cells of a grid.
template <class T>
class BasicGridFunction {
 public:
  using value_type = T;

  BasicGridFunction() = default;
  explicit BasicGridFunction(const Grid& grid, T fill = T{})
      : grid_(grid), values_(grid.cells(), fill) {}
  BasicGridFunction(const Grid& grid, std::vector<T> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.cells()) throw PreconditionError("value count does not match grid");
  }

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  std::span<const T> values() const { return values_; }
  std::span<T> values() { return values_; }

  T& operator[](std::size_t i) { return values_[i]; }
  const T& operator[](std::size_t i) const { return values_[i]; }
  T& at(std::size_t i1, std::size_t i2) { return values_[grid_.flat(i1, i2)]; }
  const T& at(std::size_t i1, std::size_t i2) const { return values_[grid_.flat(i1, i2)]; }

  template <class F>
  BasicGridFunction map(F&& fn) const {
    BasicGridFunction out(grid_);
    std::transform(values_.begin(), values_.end(), out.values_.begin(), fn);
    return out;
  }

  BasicGridFunction& operator+=(const BasicGridFunction& rhs) {
    combine(rhs, [](T a, T b) { return a + b; });
    return *this;
  }
  BasicGridFunction& operator-=(const BasicGridFunction& rhs) {
    combine(rhs, [](T a, T b) { return a - b; });
    return *this;
  }
  /// Pointwise product.
  BasicGridFunction& operator*=(const BasicGridFunction& rhs) {
    combine(rhs, [](T a, T b) { return a * b; });
    return *this;
  }
  BasicGridFunction& operator*=(T scalar) {
    for (auto& v : values_) v *= scalar;
    return *this;
  }

  friend BasicGridFunction operator+(BasicGridFunction a, const BasicGridFunction& b) { return a += b; }
  friend BasicGridFunction operator-(BasicGridFunction a, const BasicGridFunction& b) { return a -= b; }
  friend BasicGridFunction operator*(BasicGridFunction a, const BasicGridFunction& b) { return a *= b; }
  friend BasicGridFunction operator*(BasicGridFunction a, T s) { return a *= s; }
  friend BasicGridFunction operator*(T s, BasicGridFunction a) { return a *= s; }

  friend bool operator==(const BasicGridFunction&, const BasicGridFunction&) = default;

 private:
  template <class Op>
  void combine(const BasicGridFunction& rhs, Op op) {
    if (!(grid_ == rhs.grid_)) throw GridMismatch();
    for (std::size_t i = 0; i < values_.size(); ++i) values_[i] = op(values_[i], rhs.values_[i]);
  }

  Grid grid_;
  std::vector<T> values_;
};

using GridFunction = BasicGridFunction<double>;
using ComplexGridFunction = BasicGridFunction<std::complex<double>>;

inline void require_same_grid(const Grid& a, const Grid& b) {
  if (!(a == b)) throw GridMismatch();
}

/// Indicator of the finest cell (i1, i2).
GridFunction cell_indicator(const Grid& grid, std::size_t i1, std::size_t i2);
/// Indicator of a dyadic rectangle.
GridFunction indicator(const Grid& grid, const DyadicRectangle& rect);
GridFunction constant(const Grid& grid, double value);
GridFunction abs(const GridFunction& f);
GridFunction real_part(const ComplexGridFunction& f);
GridFunction imag_part(const ComplexGridFunction& f);
ComplexGridFunction to_complex(const GridFunction& f);

}  // namespace dyadic
