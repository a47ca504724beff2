// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace dyadic {

/// Sum with a fixed binary reduction tree. The result depends only on the
/// input order, never on how the caller partitions work.
double pairwise_sum(std::span<const double> values);

/// splitmix64 finalizer; used for seed splitting and coefficient hashing.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Folds `value` into a running hash.
constexpr std::uint64_t hash_combine(std::uint64_t seed, std::uint64_t value) {
  return mix64(seed ^ mix64(value));
}

/// Derives the seed of sub-task `index` from a master seed.
constexpr std::uint64_t split_seed(std::uint64_t master, std::uint64_t index) {
  return hash_combine(hash_combine(master, 0x5eedULL), index);
}

/// An exponent p in (0, inf], stored as its reciprocal so that p = inf is
/// exact (reciprocal 0).
class Exponent {
 public:
  constexpr Exponent() = default;

  static Exponent finite(double p);
  static Exponent infinity() { return Exponent(0.0); }
  static Exponent from_reciprocal(double r);
  /// Accepts "inf", "infinity" or a positive decimal.
  static Exponent parse(std::string_view text);

  double reciprocal() const { return reciprocal_; }
  bool is_infinite() const { return reciprocal_ == 0.0; }
  double value() const {
    return is_infinite() ? std::numeric_limits<double>::infinity() : 1.0 / reciprocal_;
  }
  /// Hoelder conjugate p'. Requires p >= 1.
  Exponent conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Exponent&, const Exponent&) = default;

 private:
  constexpr explicit Exponent(double r) : reciprocal_(r) {}
  double reciprocal_ = 0.5;
};

/// Median of a copy of `values` (mean of the middle pair for even sizes).
double median(std::vector<double> values);

/// Ordinary least-squares slope of y against x; 0 when x is constant.
double ols_slope(std::span<const double> x, std::span<const double> y);

/// Relative difference |a - b| / max(|a|, |b|), 0 when both vanish.
double relative_difference(double a, double b);

}  // namespace dyadic
