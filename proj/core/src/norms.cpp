// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/norms.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "dyadic/errors.hpp"

namespace dyadic {
namespace {

// (mean of |v|^p)^(1/p), or max |v| for p = inf.
double mean_power(std::span<const double> v, Exponent p) {
  if (p.is_infinite()) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  }
  const double pv = p.value();
  std::vector<double> powered(v.size());
  std::transform(v.begin(), v.end(), powered.begin(), [pv](double x) { return std::pow(std::abs(x), pv); });
  return std::pow(pairwise_sum(powered) / static_cast<double>(v.size()), p.reciprocal());
}

}  // namespace

double integral(const GridFunction& f) { return pairwise_sum(f.values()) * f.grid().cell_measure(); }

double inner_product(const GridFunction& f, const GridFunction& g) {
  require_same_grid(f.grid(), g.grid());
  std::vector<double> prod(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) prod[i] = f[i] * g[i];
  return pairwise_sum(prod) * f.grid().cell_measure();
}

std::complex<double> inner_product(const ComplexGridFunction& f, const ComplexGridFunction& g) {
  require_same_grid(f.grid(), g.grid());
  std::vector<double> re(f.size()), im(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto p = f[i] * g[i];
    re[i] = p.real();
    im[i] = p.imag();
  }
  const double h = f.grid().cell_measure();
  return {pairwise_sum(re) * h, pairwise_sum(im) * h};
}

double lp_norm(const GridFunction& f, Exponent p, const GridFunction* weight) {
  if (weight == nullptr) return mean_power(f.values(), p);
  require_same_grid(f.grid(), weight->grid());
  std::vector<double> fw(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    require((*weight)[i] > 0.0, "weight must be positive");
    fw[i] = f[i] * (*weight)[i];
  }
  return mean_power(fw, p);
}

double lp_norm(const GridFunction& f, Exponent p, const GridFunction& weight) { return lp_norm(f, p, &weight); }

double mixed_norm(const GridFunction& f, Exponent p1, Exponent p2) {
  const Grid& grid = f.grid();
  std::vector<double> inner(grid.side(Param::One));
  for (std::size_t i1 = 0; i1 < inner.size(); ++i1) {
    inner[i1] = mean_power(f.values().subspan(grid.flat(i1, 0), grid.side(Param::Two)), p2);
  }
  return mean_power(inner, p1);
}

}  // namespace dyadic
