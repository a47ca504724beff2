// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>
#include <random>

#include "dyadic/bmo.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/harness.hpp"
#include "dyadic/martingale.hpp"
#include "dyadic/norms.hpp"

namespace dyadic {

namespace {

double sup_norm(const GridFunction& f) { return lp_norm(f, Exponent::infinity()); }

double relative_sup(const GridFunction& a, const GridFunction& b) {
  const double scale = std::max(sup_norm(a), sup_norm(b));
  return scale == 0.0 ? 0.0 : sup_norm(a - b) / scale;
}

// Every basis element per parameter: the top h^0 and each cancellative h_I.
std::vector<std::pair<DyadicInterval, int>> basis(const Grid& grid, Param m) {
  std::vector<std::pair<DyadicInterval, int>> out{{top_interval(m), 0}};
  for (const auto& i : intervals_up_to(m, grid.depth(m) - 1)) out.emplace_back(i, 1);
  return out;
}

GridFunction tensor(const Grid& grid, const std::vector<double>& u, const std::vector<double>& v) {
  GridFunction f(grid);
  for (std::size_t i1 = 0; i1 < u.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < v.size(); ++i2) f.at(i1, i2) = u[i1] * v[i2];
  }
  return f;
}

std::vector<double> random_vector(std::size_t size, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  std::vector<double> v(size);
  for (auto& x : v) x = normal(rng);
  return v;
}

WeightTuple random_tuple(const Grid& grid, std::size_t n, std::uint64_t seed) {
  return sample_tuple(grid, std::vector<WeightSpec>(n, weight_spec::ExpHaar{}), seed);
}

}  // namespace

OracleReport oracle_suite(std::array<int, 2> depths, OracleOptions options) {
  require(depths[0] >= 1 && depths[1] >= 1, "oracle suite needs depths >= 1");
  const Grid grid(depths[0], depths[1]);
  OracleReport report;
  report.depths = depths;
  const auto add = [&report](std::string name, double error, double tolerance) {
    report.checks.push_back({std::move(name), error, tolerance});
  };
  const GridFunction f = random_function(grid, split_seed(options.seed, 1));
  const double scale = options.haar_normalization;

  {  // Haar orthonormality in each parameter.
    double error = 0.0;
    for (Param m : {Param::One, Param::Two}) {
      const auto b = basis(grid, m);
      for (std::size_t a = 0; a < b.size(); ++a) {
        const GridFunction ha = haar(grid, b[a].first, b[a].second) * scale;
        for (std::size_t c = 0; c < b.size(); ++c) {
          const double g = inner_product(ha, haar(grid, b[c].first, b[c].second) * scale);
          error = std::max(error, std::abs(g - (a == c ? 1.0 : 0.0)));
        }
      }
    }
    add("haar_orthonormality", error, 1e-12);
  }

  const HaarCoefficients coeff(f);
  {  // Plancherel in the tensor Haar basis, and synthesis from the same coefficients.
    double energy = 0.0;
    HaarSynthesizer synth(grid);
    for (const auto& [i1, e1] : basis(grid, Param::One)) {
      for (const auto& [i2, e2] : basis(grid, Param::Two)) {
        const DyadicRectangle r(i1, i2);
        const double c = scale * coeff(r, HaarPattern{e1, e2});
        energy += c * c;
        synth.add(r, HaarPattern{e1, e2}, scale * c);
      }
    }
    const double norm2 = inner_product(f, f);
    add("plancherel_haar", relative_difference(energy, norm2), 1e-12);
    add("haar_reconstruction", relative_sup(synth.synthesize(), f), 1e-12);
  }

  {  // Bi-parameter reconstruction from martingale differences.
    const GridFunction e2 = expectation(f, top_interval(Param::Two));
    GridFunction sum = expectation(e2, top_interval(Param::One));
    for (const auto& i : intervals_up_to(Param::One, grid.depth1() - 1)) sum += martingale_difference(e2, i);
    const GridFunction e1 = expectation(f, top_interval(Param::One));
    for (const auto& i : intervals_up_to(Param::Two, grid.depth2() - 1)) sum += martingale_difference(e1, i);
    for (const auto& r : all_rectangles(grid)) {
      if (r.first.level < grid.depth1() && r.second.level < grid.depth2()) sum += martingale_difference(f, r);
    }
    add("martingale_reconstruction", relative_sup(sum, f), 1e-12);
  }

  for (Param m : {Param::One, Param::Two}) {  // one-parameter Plancherel
    const GridFunction top = expectation(f, top_interval(m));
    const GridFunction sq = square_param(f, m);
    add(m == Param::One ? "plancherel_param1" : "plancherel_param2",
        relative_difference(inner_product(f, f), inner_product(top, top) + inner_product(sq, sq)), 1e-12);
  }

  {  // <Delta_I f, h_I> = <f, h_I>
    double error = 0.0, peak = 0.0;
    for (Param m : {Param::One, Param::Two}) {
      for (const auto& i : intervals_up_to(m, grid.depth(m) - 1)) {
        const GridFunction h = haar(grid, i, 1);
        const GridFunction lhs_fn = martingale_difference(f, i) * h;
        const GridFunction rhs_fn = f * h;
        // Pairings in the parameter of I leave a function of the other variable.
        const auto lhs = slice_average(lhs_fn, top_interval(m));
        const auto rhs = slice_average(rhs_fn, top_interval(m));
        for (std::size_t t = 0; t < lhs.size(); ++t) {
          error = std::max(error, std::abs(lhs[t] - rhs[t]));
          peak = std::max(peak, std::abs(rhs[t]));
        }
      }
    }
    add("haar_martingale_pairing", peak == 0.0 ? error : error / peak, 1e-12);
  }

  {  // Block regrouping of the square function.
    const GridFunction full = square_full(f);
    double error = 0.0;
    for (int k1 = 0; k1 < grid.depth1(); ++k1) {
      for (int k2 = 0; k2 < grid.depth2(); ++k2) error = std::max(error, relative_sup(square_block(f, k1, k2), full));
    }
    add("block_regrouping", error, 1e-12);
  }

  {  // Weight identities on a random tuple.
    const WeightTuple w = random_tuple(grid, 2, split_seed(options.seed, 2));
    const ExponentTuple p({Exponent::finite(3.0), Exponent::finite(2.5)});
    const double base = multilinear_constant(w, p);
    double dual_error = 0.0;
    for (std::size_t slot = 0; slot < 2; ++slot) {
      const auto [wd, pd] = dual_tuple(w, p, slot);
      dual_error = std::max(dual_error, relative_difference(multilinear_constant(wd, pd), base));
    }
    add("multilinear_duality", dual_error, 1e-10);
    const auto terms = multilinear_terms(w, p);
    add("multilinear_lower_bound", std::max(0.0, 1.0 - *std::min_element(terms.data().begin(), terms.data().end())),
        1e-12);
    const auto endpoint = ExponentTuple::with_endpoints({Exponent::finite(1.0), Exponent::infinity()});
    add("characterization_margin",
        std::max({0.0, -lemma32_report(w, p).min_margin(), -lemma32_report(w, endpoint).min_margin()}), 1e-9);

    const ExponentTuple inf = ExponentTuple({Exponent::infinity(), Exponent::infinity()});
    const GridFunction g = random_function(grid, split_seed(options.seed, 3));
    const GridFunction fs[] = {f, g};
    const double lhs = lp_norm(maximal(fs), Exponent::infinity(), w.product().values());
    const double rhs = multilinear_constant(w, inf) * lp_norm(f, Exponent::infinity(), w[0].values()) *
                       lp_norm(g, Exponent::infinity(), w[1].values());
    add("maximal_infinity_bound", std::max(0.0, lhs - rhs), 1e-9);
  }

  std::vector<GridFunction> three;
  for (std::size_t j = 0; j < 3; ++j) three.push_back(random_function(grid, split_seed(options.seed, 10 + j)));
  const std::span<const GridFunction> inputs(three.data(), 2);
  const Complexity k{std::min(1, grid.depth1() - 1), std::min(1, grid.depth2() - 1)};
  const ShiftSpec shift = make_shift(grid, 2, k, split_seed(options.seed, 4));
  {  // Form/apply consistency for the three model operators.
    add("shift_form_apply",
        relative_difference(shift_form(shift, three), inner_product(apply_shift(shift, inputs), three[2])), 1e-12);
    const auto partial = make_partial_paraproduct(grid, 2, Param::One, k[0], split_seed(options.seed, 5));
    add("partial_form_apply",
        relative_difference(partial_paraproduct_form(partial, three),
                            inner_product(apply_partial_paraproduct(partial, inputs), three[2])),
        1e-12);
    const auto full = make_full_paraproduct(grid, 2, 0, 2, split_seed(options.seed, 6));
    add("full_form_apply",
        relative_difference(full_paraproduct_form(full, three),
                            inner_product(apply_full_paraproduct(full, inputs), three[2])),
        1e-12);
  }

  {  // Adjoint duality on tensor inputs.
    std::mt19937_64 rng(split_seed(options.seed, 8));
    double error = 0.0;
    std::vector<std::vector<double>> u, v;
    for (std::size_t j = 0; j < 3; ++j) {
      u.push_back(random_vector(grid.side(Param::One), rng));
      v.push_back(random_vector(grid.side(Param::Two), rng));
    }
    std::vector<GridFunction> original;
    for (std::size_t j = 0; j < 3; ++j) original.push_back(tensor(grid, u[j], v[j]));
    const double base = shift_form(shift, original);
    for (std::size_t j1 = 0; j1 <= 2; ++j1) {
      for (std::size_t j2 = 0; j2 <= 2; ++j2) {
        auto uu = u;
        auto vv = v;
        if (j1 > 0) std::swap(uu[j1 - 1], uu[2]);
        if (j2 > 0) std::swap(vv[j2 - 1], vv[2]);
        std::vector<GridFunction> permuted;
        for (std::size_t j = 0; j < 3; ++j) permuted.push_back(tensor(grid, uu[j], vv[j]));
        error = std::max(error, relative_difference(shift_form(shift_adjoint(shift, j1, j2), permuted), base));
      }
    }
    add("shift_adjoint_duality", error, 1e-11);
  }

  {  // Contour representation of the commutator.
    const GridFunction b = random_function(grid, split_seed(options.seed, 9));
    const Operator op = as_operator(shift);
    const GridFunction direct = commutator(op, b, 0, inputs);
    const double delta = default_contour_radius(b);
    const GridFunction contour = commutator_contour(op, b, 0, inputs, {delta, 64});
    const GridFunction halved = commutator_contour(op, b, 0, inputs, {delta / 2.0, 64});
    add("commutator_contour", std::max(relative_sup(contour, direct), relative_sup(halved, contour)), 1e-6);
  }

  {  // Product BMO strategies.
    RectangleCoefficients a(grid);
    std::mt19937_64 rng(split_seed(options.seed, 11));
    std::normal_distribution<double> normal;
    for (auto& x : a.data()) x = normal(rng);
    const double rect = rectangle_bmo(a);
    const BmoResult sampled = product_bmo(a, BmoStrategy::sampled(256, split_seed(options.seed, 12)));
    double error = std::max(0.0, rect - sampled.value);
    if (grid.cells() <= kExhaustiveCellLimit) {
      const BmoResult exact = product_bmo(a, BmoStrategy::exhaustive());
      error = std::max({error, sampled.value - exact.value, rect - exact.value});
    }
    add("product_bmo_order", error, 1e-12);
  }
  return report;
}

}  // namespace dyadic
