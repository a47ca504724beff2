// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "dyadic/grid_function.hpp"
#include "dyadic/numeric.hpp"
#include "dyadic/rect_table.hpp"

namespace dyadic {

/// Strictly positive grid function.
class Weight {
 public:
  explicit Weight(GridFunction values);

  const GridFunction& values() const { return values_; }
  const Grid& grid() const { return values_.grid(); }
  Weight pow(double exponent) const;
  Weight inverse() const { return pow(-1.0); }

 private:
  GridFunction values_;
};

/// p = (p_1, ..., p_n) with the target exponent 1/p = sum 1/p_i.
/// Entries are kept as reciprocals so p_i = inf is exact.
class ExponentTuple {
 public:
  /// Each p_i in (1, inf].
  explicit ExponentTuple(std::vector<Exponent> exponents);
  /// Allows the endpoint p_i = 1 as well.
  static ExponentTuple with_endpoints(std::vector<Exponent> exponents);

  std::size_t size() const { return exponents_.size(); }
  const Exponent& operator[](std::size_t i) const { return exponents_[i]; }
  std::span<const Exponent> exponents() const { return exponents_; }
  /// 1/p = sum of reciprocals; 0 means p = inf.
  double target_reciprocal() const;
  bool target_infinite() const { return target_reciprocal() == 0.0; }
  ExponentTuple replaced(std::size_t slot, Exponent value) const;

 private:
  struct Unchecked {};
  ExponentTuple(std::vector<Exponent> exponents, Unchecked) : exponents_(std::move(exponents)) {}
  std::vector<Exponent> exponents_;
};

/// (w_1, ..., w_n) on a common grid.
class WeightTuple {
 public:
  explicit WeightTuple(std::vector<Weight> weights);

  std::size_t size() const { return weights_.size(); }
  const Weight& operator[](std::size_t i) const { return weights_[i]; }
  const Grid& grid() const { return weights_.front().grid(); }
  /// w = prod w_i.
  Weight product() const;
  WeightTuple replaced(std::size_t slot, Weight value) const;

 private:
  std::vector<Weight> weights_;
};

/// Which Muckenhoupt characteristic to compute.
struct ApClass {
  enum class Kind { One, P, Infinity };
  Kind kind = Kind::P;
  double p = 2.0;

  static ApClass one() { return {Kind::One, 1.0}; }
  static ApClass infinity() { return {Kind::Infinity, 0.0}; }
  /// p >= 1; p == 1 maps to A_1.
  static ApClass finite(double p);
};

/// Bi-parameter [w]_{A_p}, [w]_{A_inf} (exp-log form) or [w]_{A_1}, as an
/// exact supremum over the dyadic rectangles of the grid.
double ap_constant(const Weight& w, ApClass cls);

/// Per-rectangle multilinear terms <w^p>_R^{1/p} prod_i <w_i^{-p_i'}>_R^{1/p_i'}
/// with the endpoint conventions (p_i = 1: max_R w_i^{-1}; p = inf: max_R w).
RectTable<double> multilinear_terms(const WeightTuple& weights, const ExponentTuple& exponents);

/// [w]_{A_p} for a tuple: sup of multilinear_terms.
double multilinear_constant(const WeightTuple& weights, const ExponentTuple& exponents);

/// Replaces slot i by w^{-1} and p_i by p'. Requires every p_i in (1, inf) and 1/p in (0,1).
std::pair<WeightTuple, ExponentTuple> dual_tuple(const WeightTuple& weights, const ExponentTuple& exponents,
                                                 std::size_t slot);

/// One inequality lhs <= rhs with its relative margin (rhs - lhs) / rhs.
struct Inequality {
  double lhs = 0.0;
  double rhs = 0.0;
  double margin() const { return rhs == 0.0 ? (lhs <= 0.0 ? 0.0 : -1.0) : (rhs - lhs) / rhs; }
};

/// The three families of inequalities characterizing the multilinear class:
/// slot classes, target class, and the converse product bound.
struct CharacterizationReport {
  double multilinear = 0.0;
  std::vector<Inequality> slots;
  Inequality target;
  Inequality converse;

  double min_margin() const;
};

CharacterizationReport lemma32_report(const WeightTuple& weights, const ExponentTuple& exponents);

/// sup_R <w>^mu_R (<w^{-1/(p-1)}>^mu_R)^{p-1}; p = 1 gives <w>^mu_R max_R w^{-1}.
double ap_mu_constant(const Weight& w, double p, const Weight& mu);

/// Truncated Rubio de Francia series sum_{k=0}^{K} (M^mu)^k f / (2 lambda)^k.
GridFunction rubio_francia(const GridFunction& f, const Weight& mu, double lambda, int max_iterations);

/// Weight sampler specifications.
namespace weight_spec {
struct Constant {
  double value = 1.0;
};
/// x1^a x2^b at cell midpoints.
struct TensorPower {
  double a = 0.0;
  double b = 0.0;
};
/// exp(amplitude * sum of random-sign L^inf-normalized Haar functions, damped by decay^level).
struct ExpHaar {
  double amplitude = 0.4;
  double decay = 0.8;
};
/// u(x1) v(x2) with u, v one-parameter exp-Haar samples.
struct TensorExpHaar {
  ExpHaar first;
  ExpHaar second;
};
/// Literal cell values, row-major.
struct Values {
  std::vector<double> values;
};
}  // namespace weight_spec

using WeightSpec = std::variant<weight_spec::Constant, weight_spec::TensorPower, weight_spec::ExpHaar,
                                weight_spec::TensorExpHaar, weight_spec::Values>;

Weight sample_weight(const Grid& grid, const WeightSpec& spec, std::uint64_t seed);
/// One weight per spec; slot i uses split_seed(seed, i).
WeightTuple sample_tuple(const Grid& grid, std::span<const WeightSpec> specs, std::uint64_t seed);

}  // namespace dyadic
