// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dyadic/grid.hpp"
#include "dyadic/grid_function.hpp"
#include "dyadic/numeric.hpp"
#include "dyadic/operators.hpp"
#include "dyadic/sqmax.hpp"
#include "dyadic/weights.hpp"

namespace dyadic {

inline constexpr int kConfigSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

enum class ExperimentKind {
  Shift,
  PartialParaproduct,
  FullParaproduct,
  Maximal,
  SquareA1,
  SquareA2,
  SquareA3,
  LowerSquare,
  Prop56,
  WeightedMaximal,
  Commutator,
};

std::string_view to_string(ExperimentKind kind);
/// Throws ConfigError for unknown names.
ExperimentKind parse_experiment_kind(std::string_view name);

enum class SweepVariable { None, K, Depth, Exponent, Assignment };

std::string_view to_string(SweepVariable v);
SweepVariable parse_sweep_variable(std::string_view name);

/// Operator parameters for the operator-backed experiments.
struct OperatorConfig {
  /// Shift: uniform (k1, k2) per slot. Partial paraproduct: complexity[0].
  Complexity complexity{0, 0};
  /// Shift slot patterns; empty selects default_shift_pattern.
  std::vector<HaarPattern> pattern;
  CoefficientMode mode = CoefficientMode::RandomSign;
  Param shift_param = Param::One;
  /// Partial paraproduct slot carrying h_K; defaults to n.
  std::optional<std::size_t> para_slot;
  /// Full paraproduct slots carrying h_{K^1}, h_{K^2}; default to n.
  std::optional<std::array<std::size_t, 2>> para_slots;
  double density = 0.3;
};

struct Thresholds {
  /// Max over sweep values of the median, relative to the first median.
  double median_factor = 4.0;
  /// OLS slope of log(median) per unit of the sweep variable.
  double max_slope = 0.1;
};

struct SweepConfig {
  SweepVariable variable = SweepVariable::None;
  /// One integer vector per sweep point; its meaning depends on the variable.
  std::vector<std::vector<int>> values;
};

struct ExperimentConfig {
  int schema_version = kConfigSchemaVersion;
  ExperimentKind kind = ExperimentKind::Maximal;
  std::array<int, 2> depths{3, 3};
  std::size_t n = 2;
  /// Exponent tuples; experiments use the first unless sweeping exponents.
  std::vector<std::vector<Exponent>> exponents;
  /// One spec per slot, or a single spec reused by every slot.
  std::vector<WeightSpec> weights;
  OperatorConfig op;
  /// Martingale block depths of the square-function family.
  std::vector<int> blocks;
  /// Slot assignment of the square-function family.
  std::vector<int> assignment;
  SweepConfig sweep;
  std::size_t samples = 20;
  std::uint64_t seed = 1;
  double beta = 0.25;
  double budget = 1e8;
  Thresholds thresholds;
  /// Inner exponent s of the vector-valued square-function experiment.
  double s = 2.0;
  /// Number of functions in the vector-valued family.
  std::size_t family = 3;
  std::string output;
};

/// Parses the JSON config text. Throws ConfigError naming the offending key.
ExperimentConfig parse_config(std::string_view text);
/// Reads and parses a config file. Throws ConfigError naming the path.
ExperimentConfig load_config(const std::string& path);
/// Canonical JSON text of the config (sorted keys, no whitespace).
std::string canonical_config(const ExperimentConfig& config);
/// FNV-1a 64 of the canonical text, as 16 hex digits.
std::string config_hash(const ExperimentConfig& config);

struct SampleRecord {
  double sweep_value = 0.0;
  double ratio = 0.0;
  /// ratio / 2^{beta max k} for partial paraproducts, else the ratio.
  double normalized = 0.0;
  /// Characteristic of the sampled weights for this experiment.
  double ap_char = 0.0;
  std::uint64_t seed = 0;
  bool degenerate = false;
  bool bmo_lower_bound = false;
};

struct GroupSummary {
  double sweep_value = 0.0;
  std::size_t samples = 0;
  double median = 0.0;
  double max = 0.0;
  double normalized_median = 0.0;
};

struct ExperimentReport {
  ExperimentKind kind = ExperimentKind::Maximal;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string config_text;
  SweepVariable sweep_variable = SweepVariable::None;
  std::vector<SampleRecord> records;
  std::vector<GroupSummary> groups;
  /// Max median over the first median (normalized ratios).
  double growth_factor = 0.0;
  /// OLS slope of log(normalized median) against the sweep value.
  double trend_slope = 0.0;
  std::size_t degenerate = 0;
  bool bmo_lower_bound = false;
  bool pass = true;
  /// False below 10 samples per sweep value: pass is then not a boundedness claim.
  bool asserted = false;
  std::vector<std::string> notes;
};

struct RunOptions {
  unsigned threads = 1;
};

/// ||T(f) w||_p / prod ||f_i w_i||_{p_i}.
Ratio norm_ratio(const Operator& op, std::span<const GridFunction> fs, const WeightTuple& weights,
                 const ExponentTuple& exponents);

/// Weights of the config on its base depths: one per slot, reusing a single spec.
WeightTuple config_weights(const ExperimentConfig& config, std::size_t slots, std::uint64_t seed);

/// Elementary-term estimate used by the budget guard.
double estimate_terms(const ExperimentConfig& config);

/// Runs the sweep. Throws ConfigError or BudgetExceeded.
ExperimentReport run_sweep(const ExperimentConfig& config, RunOptions options = {});

/// One ratio population per exponent tuple (sweep value = tuple index).
/// Passes when every ratio is finite, the all-infinity maximal bound holds
/// exactly, and the medians stay within median_factor of each other.
ExperimentReport extrapolation_consistency(const ExperimentConfig& config, RunOptions options = {});

/// Truncated tensor Haar series with N(0,1) 2^{-(l1+l2)/2} coefficients plus occasional cell spikes.
GridFunction random_function(const Grid& grid, std::uint64_t seed);
/// Same series restricted to the cancellative tensor Haar functions (mean zero in each variable).
GridFunction random_bicancellative_function(const Grid& grid, std::uint64_t seed);

struct OracleCheck {
  std::string name;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass() const { return error <= tolerance; }
};

struct OracleReport {
  std::array<int, 2> depths{0, 0};
  std::vector<OracleCheck> checks;
  bool pass() const;
};

struct OracleOptions {
  std::uint64_t seed = 1;
  /// Scales the Haar coefficients in the Haar-basis checks; anything but 1 must fail.
  double haar_normalization = 1.0;
};

OracleReport oracle_suite(std::array<int, 2> depths, OracleOptions options = {});

void write_csv(const ExperimentReport& report, std::ostream& out);
void write_json(const ExperimentReport& report, std::ostream& out);
void write_json(const OracleReport& report, std::ostream& out);

/// Runs fn(i) for i in [0, count) on up to `threads` workers.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace dyadic
