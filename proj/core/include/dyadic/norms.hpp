// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <optional>

#include "dyadic/grid_function.hpp"
#include "dyadic/numeric.hpp"

namespace dyadic {

/// Integral over [0,1)^2 with cell-measure weighting.
double integral(const GridFunction& f);

/// <f, g> = integral of f g.
double inner_product(const GridFunction& f, const GridFunction& g);
std::complex<double> inner_product(const ComplexGridFunction& f, const ComplexGridFunction& g);

/// ||f w||_{L^p}; p = inf gives the max over cells. Quasi-norms (p < 1) are allowed.
double lp_norm(const GridFunction& f, Exponent p, const GridFunction* weight = nullptr);
double lp_norm(const GridFunction& f, Exponent p, const GridFunction& weight);

/// Iterated norm L^{p1}_{x1}(L^{p2}_{x2}): inner norm along x2 per x1 slice.
double mixed_norm(const GridFunction& f, Exponent p1, Exponent p2);

}  // namespace dyadic
