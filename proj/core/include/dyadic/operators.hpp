// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "dyadic/bmo.hpp"
#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"
#include "dyadic/haar.hpp"

namespace dyadic {

/// Per-parameter complexity (k^1, k^2) of one slot.
using Complexity = std::array<int, 2>;

/// How default coefficients are drawn.
enum class CoefficientMode {
  /// Independent seeded random signs times the saturating bound.
  RandomSign,
  /// The saturating bound with sign +1.
  Plus,
};

/// a_{K,(R_j)} for a shift; receives K and the n+1 rectangles R_j.
using ShiftCoefficient = std::function<double(const DyadicRectangle&, std::span<const DyadicRectangle>)>;

/// n-linear bi-parameter dyadic shift. Slot n (0-based) is the dual slot.
struct ShiftSpec {
  Grid grid;
  std::size_t n = 1;
  /// n+1 complexities.
  std::vector<Complexity> k;
  /// n+1 Haar patterns; each parameter needs at least two cancellative slots.
  std::vector<HaarPattern> pattern;
  /// Raw provider; values are clamped to the normalization bound on use.
  ShiftCoefficient coefficient;
};

/// prod_j |R_j|^{1/2} / |K|^n.
double shift_bound(const DyadicRectangle& K, std::span<const DyadicRectangle> rs);

/// Cancellative in slots 0 and n in both parameters, h^0 elsewhere.
std::vector<HaarPattern> default_shift_pattern(std::size_t n);

ShiftSpec make_shift(const Grid& grid, std::size_t n, std::vector<Complexity> k, std::vector<HaarPattern> pattern,
                     std::uint64_t seed, CoefficientMode mode = CoefficientMode::RandomSign);
/// Uniform complexity (k1, k2) in every slot with the default pattern.
ShiftSpec make_shift(const Grid& grid, std::size_t n, Complexity k, std::uint64_t seed,
                     CoefficientMode mode = CoefficientMode::RandomSign);

/// Throws PreconditionError if the spec is malformed.
void validate(const ShiftSpec& spec);
/// Whether K takes part: every R_j = descendant of K is a valid Haar support.
bool shift_admissible(const ShiftSpec& spec, const DyadicRectangle& K);

GridFunction apply_shift(const ShiftSpec& spec, std::span<const GridFunction> fs);
/// <S(f_1..f_n), f_{n+1}> evaluated directly from the n+1 pairings.
double shift_form(const ShiftSpec& spec, std::span<const GridFunction> fs);

/// T^{j1*, j2*}_{1,2}: exchanges the parameter-1 data of slot j1 and the
/// parameter-2 data of slot j2 with the dual slot. j = 0 leaves that
/// parameter alone; j in 1..n names slot j (1-based).
ShiftSpec shift_adjoint(const ShiftSpec& spec, std::size_t j1, std::size_t j2);

/// a_{K,(I_j)} as a sequence over the paraproduct parameter, for fixed K in
/// the shift parameter and the n+1 intervals I_j.
using PartialCoefficient =
    std::function<IntervalCoefficients(const DyadicInterval&, std::span<const DyadicInterval>)>;

/// Shift structure in `shift_param`, paraproduct structure in the other.
struct PartialParaproductSpec {
  Grid grid;
  std::size_t n = 1;
  Param shift_param = Param::One;
  /// n+1 complexities in the shift parameter.
  std::vector<int> k;
  /// n+1 Haar exponents in the shift parameter (at least two cancellative).
  std::vector<int> eta;
  /// The slot carrying h_{K} in the paraproduct parameter (0-based).
  std::size_t para_slot = 0;
  /// Raw provider; sequences are rescaled to the BMO bound on use.
  PartialCoefficient coefficient;
};

/// prod_j |I_j|^{1/2} / |K|^n.
double partial_bound(const DyadicInterval& K, std::span<const DyadicInterval> is);

PartialParaproductSpec make_partial_paraproduct(const Grid& grid, std::size_t n, Param shift_param,
                                                std::vector<int> k, std::vector<int> eta, std::size_t para_slot,
                                                std::uint64_t seed);
/// Uniform complexity; cancellative in slots 0 and n; h_K on slot n.
PartialParaproductSpec make_partial_paraproduct(const Grid& grid, std::size_t n, Param shift_param, int k,
                                                std::uint64_t seed);
void validate(const PartialParaproductSpec& spec);
/// Provider output rescaled so its seq_bmo does not exceed the bound.
IntervalCoefficients normalized_coefficients(const PartialParaproductSpec& spec, const DyadicInterval& K,
                                             std::span<const DyadicInterval> is);

GridFunction apply_partial_paraproduct(const PartialParaproductSpec& spec, std::span<const GridFunction> fs);
double partial_paraproduct_form(const PartialParaproductSpec& spec, std::span<const GridFunction> fs);

/// Paraproduct structure in both parameters.
struct FullParaproductSpec {
  Grid grid;
  std::size_t n = 1;
  /// Slots carrying h_{K^1} and h_{K^2} (0-based).
  std::size_t para_slot1 = 0;
  std::size_t para_slot2 = 0;
  RectangleCoefficients a;
  /// Product BMO of `a` after normalization, and whether it is a sampled lower bound.
  BmoResult bmo;
};

/// Random signs on a random sparse support, rescaled to product BMO 1.
FullParaproductSpec make_full_paraproduct(const Grid& grid, std::size_t n, std::size_t para_slot1,
                                          std::size_t para_slot2, std::uint64_t seed, double density = 0.3);
/// Uses the given coefficients, rescaled if their product BMO exceeds 1.
FullParaproductSpec make_full_paraproduct(std::size_t n, std::size_t para_slot1, std::size_t para_slot2,
                                          RectangleCoefficients a, std::uint64_t seed);
void validate(const FullParaproductSpec& spec);

GridFunction apply_full_paraproduct(const FullParaproductSpec& spec, std::span<const GridFunction> fs);
double full_paraproduct_form(const FullParaproductSpec& spec, std::span<const GridFunction> fs);

using OperatorSpec = std::variant<ShiftSpec, PartialParaproductSpec, FullParaproductSpec>;

std::size_t arity(const OperatorSpec& spec);
const Grid& grid_of(const OperatorSpec& spec);
GridFunction apply(const OperatorSpec& spec, std::span<const GridFunction> fs);
double form(const OperatorSpec& spec, std::span<const GridFunction> fs);

/// Any n-linear operator on grid functions.
using Operator = std::function<GridFunction(std::span<const GridFunction>)>;

Operator as_operator(OperatorSpec spec);

/// [b, T]_slot(f) = b T(f) - T(..., b f_slot, ...), slot 0-based.
GridFunction commutator(const Operator& op, const GridFunction& b, std::size_t slot,
                        std::span<const GridFunction> fs);
/// The commutator as an operator, so iterated commutators compose.
Operator commutator_operator(Operator op, GridFunction b, std::size_t slot);

struct ContourOptions {
  double radius = 0.0;  // 0 picks default_contour_radius
  int nodes = 64;
};

/// 0.5 / (max|b| * max(scale, 1)); 1 when b vanishes.
double default_contour_radius(const GridFunction& b, double scale = 1.0);

/// Trapezoidal rule for (1/(2 pi i)) times the contour integral of
/// e^{zb} T(.., e^{-zb} f_slot, ..) / z^2 over |z| = radius.
GridFunction commutator_contour(const Operator& op, const GridFunction& b, std::size_t slot,
                                std::span<const GridFunction> fs, ContourOptions options = {});

}  // namespace dyadic
