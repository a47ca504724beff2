// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/weights.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "dyadic/errors.hpp"
#include "dyadic/sqmax.hpp"

namespace dyadic {

Weight::Weight(GridFunction values) : values_(std::move(values)) {
  for (double v : values_.values()) {
    if (!(v > 0.0) || !std::isfinite(v)) throw PreconditionError("weight must be positive and finite");
  }
}

Weight Weight::pow(double exponent) const {
  return Weight(values_.map([exponent](double v) { return std::pow(v, exponent); }));
}

ExponentTuple::ExponentTuple(std::vector<Exponent> exponents) : exponents_(std::move(exponents)) {
  require(!exponents_.empty(), "exponent tuple must be non-empty");
  for (const auto& e : exponents_) require(e.reciprocal() < 1.0, "tuple exponents must lie in (1, inf]");
}

ExponentTuple ExponentTuple::with_endpoints(std::vector<Exponent> exponents) {
  require(!exponents.empty(), "exponent tuple must be non-empty");
  for (const auto& e : exponents) require(e.reciprocal() <= 1.0, "tuple exponents must lie in [1, inf]");
  return ExponentTuple(std::move(exponents), Unchecked{});
}

double ExponentTuple::target_reciprocal() const {
  double r = 0.0;
  for (const auto& e : exponents_) r += e.reciprocal();
  return r;
}

ExponentTuple ExponentTuple::replaced(std::size_t slot, Exponent value) const {
  auto copy = exponents_;
  copy.at(slot) = value;
  return with_endpoints(std::move(copy));
}

WeightTuple::WeightTuple(std::vector<Weight> weights) : weights_(std::move(weights)) {
  require(!weights_.empty(), "weight tuple must be non-empty");
  for (const auto& w : weights_) require_same_grid(w.grid(), weights_.front().grid());
}

Weight WeightTuple::product() const {
  GridFunction w = weights_.front().values();
  for (std::size_t i = 1; i < weights_.size(); ++i) w *= weights_[i].values();
  return Weight(std::move(w));
}

WeightTuple WeightTuple::replaced(std::size_t slot, Weight value) const {
  auto copy = weights_;
  copy.at(slot) = std::move(value);
  return WeightTuple(std::move(copy));
}

ApClass ApClass::finite(double p) {
  require(p >= 1.0, "A_p needs p >= 1");
  return p == 1.0 ? one() : ApClass{Kind::P, p};
}

double ap_constant(const Weight& w, ApClass cls) {
  const auto mean_w = rectangle_means(w.values());
  RectTable<double> terms(w.grid());
  switch (cls.kind) {
    case ApClass::Kind::One: {
      const auto max_inv = rectangle_maxima(w.inverse().values());
      for (std::size_t i = 0; i < terms.data().size(); ++i) terms.data()[i] = mean_w.data()[i] * max_inv.data()[i];
      break;
    }
    case ApClass::Kind::P: {
      require(cls.p > 1.0, "A_p needs p > 1");
      const auto mean_dual = rectangle_means(w.pow(-1.0 / (cls.p - 1.0)).values());
      for (std::size_t i = 0; i < terms.data().size(); ++i) {
        terms.data()[i] = mean_w.data()[i] * std::pow(mean_dual.data()[i], cls.p - 1.0);
      }
      break;
    }
    case ApClass::Kind::Infinity: {
      const auto mean_log = rectangle_means(w.values().map([](double v) { return -std::log(v); }));
      for (std::size_t i = 0; i < terms.data().size(); ++i) {
        terms.data()[i] = mean_w.data()[i] * std::exp(mean_log.data()[i]);
      }
      break;
    }
  }
  return table_max(terms);
}

RectTable<double> multilinear_terms(const WeightTuple& weights, const ExponentTuple& exponents) {
  require(weights.size() == exponents.size(), "weight and exponent tuples differ in length");
  const double r = exponents.target_reciprocal();
  const Weight w = weights.product();

  RectTable<double> terms = r == 0.0 ? rectangle_maxima(w.values()) : rectangle_means(w.pow(1.0 / r).values());
  if (r != 0.0) {
    for (auto& t : terms.data()) t = std::pow(t, r);
  }
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double ri = exponents[i].reciprocal();
    if (ri == 1.0) {
      const auto m = rectangle_maxima(weights[i].inverse().values());
      for (std::size_t k = 0; k < terms.data().size(); ++k) terms.data()[k] *= m.data()[k];
    } else {
      const double dual = 1.0 / (1.0 - ri);  // p_i'
      const auto m = rectangle_means(weights[i].pow(-dual).values());
      for (std::size_t k = 0; k < terms.data().size(); ++k) terms.data()[k] *= std::pow(m.data()[k], 1.0 - ri);
    }
  }
  return terms;
}

double multilinear_constant(const WeightTuple& weights, const ExponentTuple& exponents) {
  return table_max(multilinear_terms(weights, exponents));
}

std::pair<WeightTuple, ExponentTuple> dual_tuple(const WeightTuple& weights, const ExponentTuple& exponents,
                                                 std::size_t slot) {
  require(slot < weights.size() && weights.size() == exponents.size(), "slot out of range");
  for (const auto& e : exponents.exponents()) {
    require(e.reciprocal() > 0.0 && e.reciprocal() < 1.0, "duality needs every p_i in (1, inf)");
  }
  const double r = exponents.target_reciprocal();
  require(r > 0.0 && r < 1.0, "duality needs 1/p in (0,1)");
  return {weights.replaced(slot, weights.product().inverse()),
          exponents.replaced(slot, Exponent::from_reciprocal(r).conjugate())};
}

double CharacterizationReport::min_margin() const {
  double m = std::min(target.margin(), converse.margin());
  for (const auto& s : slots) m = std::min(m, s.margin());
  return m;
}

CharacterizationReport lemma32_report(const WeightTuple& weights, const ExponentTuple& exponents) {
  require(weights.size() == exponents.size(), "weight and exponent tuples differ in length");
  const double n = static_cast<double>(weights.size());
  const double r = exponents.target_reciprocal();
  CharacterizationReport report;
  report.multilinear = multilinear_constant(weights, exponents);
  const double big = report.multilinear;

  double converse_rhs = 1.0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    const double ri = exponents[i].reciprocal();
    Inequality s;
    if (ri == 1.0) {
      s.lhs = ap_constant(weights[i].pow(1.0 / n), ApClass::one());
      s.rhs = std::pow(big, 1.0 / n);
      converse_rhs *= std::pow(s.lhs, n);
    } else {
      const double dual = 1.0 / (1.0 - ri);
      s.lhs = ap_constant(weights[i].pow(-dual), ApClass::finite(n * dual));
      s.rhs = std::pow(big, dual);
      converse_rhs *= std::pow(s.lhs, 1.0 - ri);
    }
    report.slots.push_back(s);
  }

  const Weight w = weights.product();
  if (r == 0.0) {
    report.target.lhs = ap_constant(w.pow(-1.0 / n), ApClass::one());
    report.target.rhs = std::pow(big, 1.0 / n);
    converse_rhs *= std::pow(report.target.lhs, n);
  } else {
    const double p = 1.0 / r;
    report.target.lhs = ap_constant(w.pow(p), ApClass::finite(n * p));
    report.target.rhs = std::pow(big, p);
    converse_rhs *= std::pow(report.target.lhs, r);
  }
  report.converse = {big, converse_rhs};
  return report;
}

double ap_mu_constant(const Weight& w, double p, const Weight& mu) {
  require_same_grid(w.grid(), mu.grid());
  require(p >= 1.0, "A_p(mu) needs p >= 1");
  const auto mean_mu = rectangle_means(mu.values());
  const auto mean_wmu = rectangle_means(w.values() * mu.values());
  RectTable<double> terms(w.grid());
  if (p == 1.0) {
    const auto max_inv = rectangle_maxima(w.inverse().values());
    for (std::size_t i = 0; i < terms.data().size(); ++i) {
      terms.data()[i] = mean_wmu.data()[i] / mean_mu.data()[i] * max_inv.data()[i];
    }
  } else {
    const auto mean_dual = rectangle_means(w.pow(-1.0 / (p - 1.0)).values() * mu.values());
    for (std::size_t i = 0; i < terms.data().size(); ++i) {
      terms.data()[i] =
          mean_wmu.data()[i] / mean_mu.data()[i] * std::pow(mean_dual.data()[i] / mean_mu.data()[i], p - 1.0);
    }
  }
  return table_max(terms);
}

GridFunction rubio_francia(const GridFunction& f, const Weight& mu, double lambda, int max_iterations) {
  require(lambda > 0.0, "Rubio de Francia scale must be positive");
  require(max_iterations >= 0, "iteration count must be non-negative");
  for (double v : f.values()) require(v >= 0.0, "Rubio de Francia input must be non-negative");
  GridFunction result = f;
  GridFunction iterate = f;
  double scale = 1.0;
  for (int k = 1; k <= max_iterations; ++k) {
    iterate = weighted_maximal(iterate, mu);
    scale /= 2.0 * lambda;
    result += iterate * scale;
  }
  return result;
}

namespace {

double midpoint(std::size_t i, int depth) { return (static_cast<double>(i) + 0.5) * std::ldexp(1.0, -depth); }

double sign_draw(std::mt19937_64& rng) { return (rng() >> 63) != 0 ? 1.0 : -1.0; }

// Random-sign L^inf-normalized Haar series in one parameter, as cell values.
std::vector<double> one_parameter_log(int depth, const weight_spec::ExpHaar& spec, std::mt19937_64& rng) {
  std::vector<double> out(std::size_t{1} << depth, 0.0);
  for (int level = 0; level < depth; ++level) {
    const double amp = spec.amplitude * std::pow(spec.decay, level);
    const std::size_t width = std::size_t{1} << (depth - level);
    for (std::size_t q = 0; q < (std::size_t{1} << level); ++q) {
      const double c = amp * sign_draw(rng);
      for (std::size_t i = 0; i < width; ++i) out[q * width + i] += i < width / 2 ? c : -c;
    }
  }
  return out;
}

void check_exp_haar(const weight_spec::ExpHaar& spec) {
  if (!(spec.amplitude >= 0.0) || !(spec.decay > 0.0) || !std::isfinite(spec.amplitude) || !std::isfinite(spec.decay)) {
    throw PreconditionError("exp-Haar spec needs amplitude >= 0 and decay > 0");
  }
}

}  // namespace

Weight sample_weight(const Grid& grid, const WeightSpec& spec, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GridFunction values(grid);
  const std::size_t s1 = grid.side(Param::One), s2 = grid.side(Param::Two);

  if (const auto* c = std::get_if<weight_spec::Constant>(&spec)) {
    if (!(c->value > 0.0)) throw PreconditionError("constant weight must be positive");
    return Weight(constant(grid, c->value));
  }
  if (const auto* t = std::get_if<weight_spec::TensorPower>(&spec)) {
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
      for (std::size_t i2 = 0; i2 < s2; ++i2) {
        values.at(i1, i2) =
            std::pow(midpoint(i1, grid.depth1()), t->a) * std::pow(midpoint(i2, grid.depth2()), t->b);
      }
    }
    return Weight(std::move(values));
  }
  if (const auto* e = std::get_if<weight_spec::ExpHaar>(&spec)) {
    check_exp_haar(*e);
    // Parameter-1 series (constant in x2), parameter-2 series, then the
    // bi-parameter products at half amplitude with decay^(l1 + l2).
    const auto u = one_parameter_log(grid.depth1(), *e, rng);
    const auto v = one_parameter_log(grid.depth2(), *e, rng);
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
      for (std::size_t i2 = 0; i2 < s2; ++i2) values.at(i1, i2) = u[i1] + v[i2];
    }
    for (int l1 = 0; l1 < grid.depth1(); ++l1) {
      for (int l2 = 0; l2 < grid.depth2(); ++l2) {
        const double amp = 0.5 * e->amplitude * std::pow(e->decay, l1 + l2);
        const std::size_t w1 = s1 >> l1, w2 = s2 >> l2;
        for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
          for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
            const double c = amp * sign_draw(rng);
            for (std::size_t a = 0; a < w1; ++a) {
              for (std::size_t b = 0; b < w2; ++b) {
                values.at(q1 * w1 + a, q2 * w2 + b) += ((a < w1 / 2) == (b < w2 / 2)) ? c : -c;
              }
            }
          }
        }
      }
    }
    return Weight(values.map([](double v) { return std::exp(v); }));
  }
  if (const auto* te = std::get_if<weight_spec::TensorExpHaar>(&spec)) {
    check_exp_haar(te->first);
    check_exp_haar(te->second);
    const auto u = one_parameter_log(grid.depth1(), te->first, rng);
    const auto v = one_parameter_log(grid.depth2(), te->second, rng);
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
      for (std::size_t i2 = 0; i2 < s2; ++i2) values.at(i1, i2) = std::exp(u[i1] + v[i2]);
    }
    return Weight(std::move(values));
  }
  const auto& literal = std::get<weight_spec::Values>(spec);
  if (literal.values.size() != grid.cells()) throw PreconditionError("literal weight has the wrong number of cells");
  return Weight(GridFunction(grid, literal.values));
}

WeightTuple sample_tuple(const Grid& grid, std::span<const WeightSpec> specs, std::uint64_t seed) {
  require(!specs.empty(), "need at least one weight spec");
  std::vector<Weight> weights;
  weights.reserve(specs.size());
  for (std::size_t i = 0; i < specs.size(); ++i) weights.push_back(sample_weight(grid, specs[i], split_seed(seed, i)));
  return WeightTuple(std::move(weights));
}

}  // namespace dyadic
