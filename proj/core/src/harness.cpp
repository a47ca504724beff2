// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <random>
#include <thread>

#include "dyadic/bmo.hpp"
#include "dyadic/errors.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/norms.hpp"

namespace dyadic {

void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
  const std::size_t workers = std::min<std::size_t>(std::max(1U, threads), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          const std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

GridFunction haar_series(const Grid& grid, std::uint64_t seed, bool cancellative_only) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal;
  HaarSynthesizer synth(grid);
  // Basis per parameter: the top h^0 and every cancellative h_I.
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      for (int e1 = 0; e1 <= 1; ++e1) {
        for (int e2 = 0; e2 <= 1; ++e2) {
          if (cancellative_only && (e1 == 0 || e2 == 0)) continue;
          if ((e1 == 0 && l1 != 0) || (e2 == 0 && l2 != 0)) continue;
          if ((e1 == 1 && l1 == grid.depth1()) || (e2 == 1 && l2 == grid.depth2())) continue;
          const double scale = std::sqrt(std::ldexp(1.0, -(l1 + l2)));
          for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
            for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
              synth.add(l1, q1, l2, q2, HaarPattern{e1, e2}, normal(rng) * scale);
            }
          }
        }
      }
    }
  }
  GridFunction f = synth.synthesize();
  if (!cancellative_only) {
    std::bernoulli_distribution spike(0.25);
    std::uniform_int_distribution<std::size_t> cell(0, grid.cells() - 1);
    for (int t = 0; t < 3; ++t) {
      if (spike(rng)) f[cell(rng)] += 2.0 * normal(rng);
    }
  }
  return f;
}

}  // namespace

GridFunction random_function(const Grid& grid, std::uint64_t seed) { return haar_series(grid, seed, false); }

GridFunction random_bicancellative_function(const Grid& grid, std::uint64_t seed) {
  return haar_series(grid, seed, true);
}

Ratio norm_ratio(const Operator& op, std::span<const GridFunction> fs, const WeightTuple& weights,
                 const ExponentTuple& exponents) {
  require(fs.size() == weights.size() && fs.size() == exponents.size(), "inputs, weights and exponents differ in length");
  const GridFunction out = op(fs);
  const double numerator =
      lp_norm(out, Exponent::from_reciprocal(exponents.target_reciprocal()), weights.product().values());
  double denominator = 1.0;
  for (std::size_t i = 0; i < fs.size(); ++i) denominator *= lp_norm(fs[i], exponents[i], weights[i].values());
  return make_ratio(numerator, denominator);
}

namespace {

// One resolved sweep point.
struct Point {
  double value = 0.0;
  std::array<int, 2> depths{0, 0};
  Complexity complexity{0, 0};
  std::vector<int> blocks;
  std::vector<int> assignment;
  std::size_t exponent_index = 0;
  int max_k = 0;
};

// Linear experiments use a single exponent and a single weight.
bool linear_kind(ExperimentKind k) {
  return k == ExperimentKind::LowerSquare || k == ExperimentKind::Prop56 || k == ExperimentKind::WeightedMaximal;
}

std::size_t block_count(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::SquareA1:
    case ExperimentKind::Prop56:
      return 2;
    case ExperimentKind::SquareA2:
      return 3;
    case ExperimentKind::SquareA3:
      return 4;
    default:
      return 0;
  }
}

std::size_t assignment_size(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::SquareA1:
      return 2;
    case ExperimentKind::SquareA2:
    case ExperimentKind::SquareA3:
      return 4;
    default:
      return 0;
  }
}

std::vector<int> default_assignment(ExperimentKind k, std::size_t n) {
  switch (k) {
    case ExperimentKind::SquareA1:
      return {0, 0};
    case ExperimentKind::SquareA2:
      return n >= 3 ? std::vector<int>{0, 0, 1, 2} : std::vector<int>{0, 0, 0, 1};
    case ExperimentKind::SquareA3:
      return {0, 0, 1, 1};
    default:
      return {};
  }
}

std::size_t slots(const ExperimentConfig& c) { return linear_kind(c.kind) ? 1 : c.n; }

std::vector<Exponent> exponent_tuple(const ExperimentConfig& c, std::size_t index) {
  if (c.exponents.empty()) return std::vector<Exponent>(slots(c), Exponent::finite(2.0));
  return c.exponents.at(index);
}

void check_config(const ExperimentConfig& c) {
  if (c.n < 1) throw ConfigError("config key 'n': must be at least 1");
  if (c.depths[0] < 0 || c.depths[1] < 0) throw ConfigError("config key 'depths': must be non-negative");
  if (!(c.budget > 0.0)) throw ConfigError("config key 'budget': must be positive");
  if (c.kind == ExperimentKind::SquareA2 || c.kind == ExperimentKind::SquareA3) {
    if (c.n < 2) throw ConfigError("config key 'n': this square function needs n >= 2");
  }
  if (!c.weights.empty() && c.weights.size() != 1 && c.weights.size() != slots(c) &&
      !(c.kind == ExperimentKind::WeightedMaximal && c.weights.size() == 2)) {
    throw ConfigError("config key 'weights': expected one spec or one per slot");
  }
  for (std::size_t t = 0; t < std::max<std::size_t>(c.exponents.size(), 1); ++t) {
    const auto tuple = exponent_tuple(c, t);
    const std::string key = "config key 'exponents[" + std::to_string(t) + "]'";
    if (tuple.size() != slots(c)) throw ConfigError(key + ": expected " + std::to_string(slots(c)) + " entries");
    double r = 0.0;
    for (const auto& e : tuple) {
      r += e.reciprocal();
      const bool endpoint_ok = c.kind == ExperimentKind::Maximal;
      if (e.reciprocal() > 1.0 || (!endpoint_ok && e.reciprocal() == 1.0)) {
        throw ConfigError(key + ": exponents must lie in (1, inf]");
      }
      if (linear_kind(c.kind) && e.is_infinite()) throw ConfigError(key + ": this experiment needs a finite exponent");
    }
    if (r == 0.0 && c.kind != ExperimentKind::Maximal) {
      throw ConfigError(key + ": the all-infinity tuple is only allowed for the maximal function");
    }
  }
}

std::vector<Point> resolve_points(const ExperimentConfig& c) {
  Point base;
  base.depths = c.depths;
  base.complexity = c.op.complexity;
  base.blocks = c.blocks.empty() ? std::vector<int>(block_count(c.kind), 0) : c.blocks;
  base.assignment = c.assignment.empty() ? default_assignment(c.kind, c.n) : c.assignment;
  if (base.blocks.size() != block_count(c.kind)) {
    throw ConfigError("config key 'blocks': expected " + std::to_string(block_count(c.kind)) + " entries");
  }
  if (base.assignment.size() != assignment_size(c.kind)) {
    throw ConfigError("config key 'assignment': expected " + std::to_string(assignment_size(c.kind)) + " entries");
  }
  const auto finish = [&c](Point p) {
    p.max_k = c.kind == ExperimentKind::PartialParaproduct ? p.complexity[0]
                                                           : std::max(p.complexity[0], p.complexity[1]);
    return p;
  };
  if (c.sweep.variable == SweepVariable::None) return {finish(base)};

  std::vector<Point> points;
  for (std::size_t idx = 0; idx < c.sweep.values.size(); ++idx) {
    const auto& v = c.sweep.values[idx];
    if (v.empty()) throw ConfigError("config key 'sweep.values': empty entry");
    Point p = base;
    switch (c.sweep.variable) {
      case SweepVariable::K:
        if (c.kind == ExperimentKind::Shift || c.kind == ExperimentKind::Commutator) {
          if (v.size() > 2) throw ConfigError("config key 'sweep.values': shift complexity needs 1 or 2 entries");
          p.complexity = {v[0], v.size() > 1 ? v[1] : v[0]};
          p.value = p.complexity[0] + p.complexity[1];
        } else if (c.kind == ExperimentKind::PartialParaproduct) {
          if (v.size() != 1) throw ConfigError("config key 'sweep.values': partial paraproduct complexity is one integer");
          p.complexity = {v[0], v[0]};
          p.value = v[0];
        } else if (block_count(c.kind) > 0) {
          if (v.size() != block_count(c.kind)) throw ConfigError("config key 'sweep.values': wrong number of block depths");
          p.blocks = v;
          p.value = 0.0;
          for (int k : v) p.value += k;
        } else {
          throw ConfigError("config key 'sweep.variable': this experiment has no complexity");
        }
        break;
      case SweepVariable::Depth:
        if (v.size() > 2) throw ConfigError("config key 'sweep.values': depth needs 1 or 2 entries");
        p.depths = {v[0], v.size() > 1 ? v[1] : v[0]};
        p.value = v[0];
        break;
      case SweepVariable::Exponent:
        if (v.size() != 1 || v[0] < 0 || static_cast<std::size_t>(v[0]) >= std::max<std::size_t>(c.exponents.size(), 1)) {
          throw ConfigError("config key 'sweep.values': exponent sweep entries index 'exponents'");
        }
        p.exponent_index = static_cast<std::size_t>(v[0]);
        p.value = v[0];
        break;
      case SweepVariable::Assignment:
        if (v.size() != assignment_size(c.kind) || v.empty()) {
          throw ConfigError("config key 'sweep.values': wrong assignment size for this experiment");
        }
        p.assignment = v;
        p.value = static_cast<double>(idx);
        break;
      case SweepVariable::None:
        break;
    }
    points.push_back(finish(p));
  }
  return points;
}

std::vector<WeightSpec> weight_specs(const ExperimentConfig& c, std::size_t count) {
  if (c.weights.empty()) return std::vector<WeightSpec>(count, weight_spec::ExpHaar{});
  if (c.weights.size() == 1) return std::vector<WeightSpec>(count, c.weights.front());
  return std::vector<WeightSpec>(c.weights.begin(), c.weights.begin() + static_cast<std::ptrdiff_t>(count));
}

std::size_t slot_of(int v, std::size_t n) {
  if (v < 0 || static_cast<std::size_t>(v) >= n) throw ConfigError("config key 'assignment': slot out of range");
  return static_cast<std::size_t>(v);
}

// Builds the n-linear operator of a sweep point; sets lower_bound for sampled product BMO.
Operator build_operator(const ExperimentConfig& c, const Point& p, const Grid& grid, std::uint64_t seed,
                        bool& lower_bound) {
  const std::size_t n = c.n;
  switch (c.kind) {
    case ExperimentKind::Shift:
    case ExperimentKind::Commutator: {
      ShiftSpec spec = c.op.pattern.empty()
                           ? make_shift(grid, n, p.complexity, seed, c.op.mode)
                           : make_shift(grid, n, std::vector<Complexity>(n + 1, p.complexity), c.op.pattern, seed,
                                        c.op.mode);
      Operator op = as_operator(std::move(spec));
      if (c.kind == ExperimentKind::Shift) return op;
      GridFunction b = random_function(grid, split_seed(seed, 7));
      const double osc = little_bmo(b);
      if (osc > 0.0) b *= 1.0 / osc;
      return commutator_operator(std::move(op), std::move(b), 0);
    }
    case ExperimentKind::PartialParaproduct: {
      std::vector<int> eta(n + 1, 0);
      eta.front() = 1;
      eta.back() = 1;
      return as_operator(make_partial_paraproduct(grid, n, c.op.shift_param, std::vector<int>(n + 1, p.complexity[0]),
                                                  std::move(eta), c.op.para_slot.value_or(n), seed));
    }
    case ExperimentKind::FullParaproduct: {
      const auto slots = c.op.para_slots.value_or(std::array<std::size_t, 2>{n, n});
      FullParaproductSpec spec = make_full_paraproduct(grid, n, slots[0], slots[1], seed, c.op.density);
      lower_bound = spec.bmo.lower_bound;
      return as_operator(std::move(spec));
    }
    case ExperimentKind::Maximal:
      return [](std::span<const GridFunction> fs) { return maximal(fs); };
    case ExperimentKind::SquareA1: {
      const A1Assignment a{slot_of(p.assignment[0], n), slot_of(p.assignment[1], n)};
      const std::array<int, 2> k{p.blocks[0], p.blocks[1]};
      return [a, k](std::span<const GridFunction> fs) { return a1k(fs, k, a); };
    }
    case ExperimentKind::SquareA2: {
      if (p.assignment[0] != 0 && p.assignment[0] != 1) throw ConfigError("config key 'assignment': orientation must be 0 or 1");
      const A2Assignment a{p.assignment[0] == 0 ? A2Orientation::OuterSecond : A2Orientation::OuterFirst,
                           slot_of(p.assignment[1], n), slot_of(p.assignment[2], n), slot_of(p.assignment[3], n)};
      const std::array<int, 3> k{p.blocks[0], p.blocks[1], p.blocks[2]};
      return [a, k](std::span<const GridFunction> fs) { return a2k(fs, k, a); };
    }
    case ExperimentKind::SquareA3: {
      const A3Assignment a{slot_of(p.assignment[0], n), slot_of(p.assignment[1], n), slot_of(p.assignment[2], n),
                           slot_of(p.assignment[3], n)};
      const std::array<int, 4> k{p.blocks[0], p.blocks[1], p.blocks[2], p.blocks[3]};
      return [a, k](std::span<const GridFunction> fs) { return a3k(fs, k, a); };
    }
    default:
      throw InternalError("not an operator experiment");
  }
}

SampleRecord evaluate(const ExperimentConfig& c, const Point& p, std::uint64_t sub) {
  SampleRecord rec;
  rec.sweep_value = p.value;
  rec.seed = sub;
  const Grid grid(p.depths[0], p.depths[1]);
  const auto exps = exponent_tuple(c, p.exponent_index);
  const std::uint64_t weight_seed = split_seed(sub, 2);
  Ratio ratio;

  if (linear_kind(c.kind)) {
    const auto specs = weight_specs(c, c.kind == ExperimentKind::WeightedMaximal && c.weights.size() == 2 ? 2 : 1);
    const Weight w = sample_weight(grid, specs[0], weight_seed);
    const double pv = exps[0].value();
    const Exponent pe = exps[0];
    if (c.kind == ExperimentKind::LowerSquare) {
      const GridFunction f = random_bicancellative_function(grid, split_seed(sub, 10));
      const GridFunction wp = w.pow(1.0 / pv).values();
      ratio = make_ratio(lp_norm(f, pe, wp), lp_norm(square_full(f), pe, wp));
      rec.ap_char = ap_constant(w, ApClass::infinity());
    } else if (c.kind == ExperimentKind::Prop56) {
      std::vector<GridFunction> family;
      for (std::size_t m = 0; m < c.family; ++m) family.push_back(random_function(grid, split_seed(sub, 10 + m)));
      ratio = prop56_ratio(family, w, pv, c.s, {p.blocks[0], p.blocks[1]});
      rec.ap_char = ap_constant(w, ApClass::infinity());
    } else {
      const Weight mu = specs.size() > 1 ? sample_weight(grid, specs[1], split_seed(sub, 4)) : Weight(constant(grid, 1.0));
      const GridFunction f = random_function(grid, split_seed(sub, 10));
      const GridFunction wmu = (w.values() * mu.values()).map([pv](double v) { return std::pow(v, 1.0 / pv); });
      ratio = make_ratio(lp_norm(weighted_maximal(f, mu), pe, wmu), lp_norm(f, pe, wmu));
      rec.ap_char = ap_mu_constant(w, pv, mu);
    }
  } else {
    const auto specs = weight_specs(c, c.n);
    const WeightTuple weights = sample_tuple(grid, specs, weight_seed);
    const ExponentTuple tuple = c.kind == ExperimentKind::Maximal ? ExponentTuple::with_endpoints(exps) : ExponentTuple(exps);
    std::vector<GridFunction> fs;
    for (std::size_t j = 0; j < c.n; ++j) fs.push_back(random_function(grid, split_seed(sub, 10 + j)));
    const Operator op = build_operator(c, p, grid, split_seed(sub, 1), rec.bmo_lower_bound);
    ratio = norm_ratio(op, fs, weights, tuple);
    rec.ap_char = multilinear_constant(weights, tuple);
  }
  rec.ratio = ratio.value;
  rec.degenerate = ratio.degenerate;
  rec.normalized = c.kind == ExperimentKind::PartialParaproduct ? rec.ratio / std::exp2(c.beta * p.max_k) : rec.ratio;
  return rec;
}

double level_pairs(const std::array<int, 2>& d) { return static_cast<double>((d[0] + 1) * (d[1] + 1)); }

double estimate_point(const ExperimentConfig& c, const Point& p) {
  const double cells = std::ldexp(1.0, p.depths[0] + p.depths[1]);
  const double base = cells * level_pairs(p.depths) * static_cast<double>(c.n + 1);
  switch (c.kind) {
    case ExperimentKind::Shift:
    case ExperimentKind::Commutator: {
      double admissible = 0.0;
      for (int l1 = 0; l1 + p.complexity[0] + 1 <= p.depths[0]; ++l1) {
        for (int l2 = 0; l2 + p.complexity[1] + 1 <= p.depths[1]; ++l2) admissible += std::ldexp(1.0, l1 + l2);
      }
      const double tuples = std::ldexp(1.0, (p.complexity[0] + p.complexity[1]) * static_cast<int>(c.n + 1));
      const double terms = admissible * tuples * static_cast<double>(c.n + 1) + base;
      return c.kind == ExperimentKind::Commutator ? 2.0 * terms : terms;
    }
    case ExperimentKind::PartialParaproduct: {
      const int ns = p.depths[index_of(c.op.shift_param)], np = p.depths[index_of(other(c.op.shift_param))];
      double ks = 0.0;
      for (int l = 0; l + p.complexity[0] + 1 <= ns; ++l) ks += std::ldexp(1.0, l);
      const double tuples = std::ldexp(1.0, p.complexity[0] * static_cast<int>(c.n + 1));
      return ks * tuples * std::ldexp(1.0, np) * static_cast<double>(c.n + 1) + base;
    }
    case ExperimentKind::FullParaproduct:
      return base + (cells <= kExhaustiveCellLimit ? std::ldexp(1.0, static_cast<int>(cells)) * cells * 4.0
                                                   : 256.0 * cells * level_pairs(p.depths));
    case ExperimentKind::SquareA2:
    case ExperimentKind::SquareA3:
      return base * (p.depths[0] + p.depths[1] + 1);
    case ExperimentKind::Prop56:
      return base * static_cast<double>(c.family) * (p.depths[0] + 1);
    default:
      return base;
  }
}

ExperimentReport summarize(const ExperimentConfig& c, const std::vector<Point>& points,
                           std::vector<SampleRecord> records) {
  ExperimentReport report;
  report.kind = c.kind;
  report.seed = c.seed;
  report.config_hash = config_hash(c);
  report.config_text = canonical_config(c);
  report.sweep_variable = c.sweep.variable;
  report.records = std::move(records);
  bool finite = true;
  for (std::size_t g = 0; g < points.size() && c.samples > 0; ++g) {
    GroupSummary s;
    s.sweep_value = points[g].value;
    std::vector<double> ratios, normalized;
    for (std::size_t i = 0; i < c.samples; ++i) {
      const auto& r = report.records[g * c.samples + i];
      report.degenerate += r.degenerate ? 1 : 0;
      report.bmo_lower_bound = report.bmo_lower_bound || r.bmo_lower_bound;
      finite = finite && std::isfinite(r.ratio);
      if (r.degenerate) continue;
      ratios.push_back(r.ratio);
      normalized.push_back(r.normalized);
      s.max = std::max(s.max, r.ratio);
    }
    s.samples = ratios.size();
    s.median = median(ratios);
    s.normalized_median = median(normalized);
    report.groups.push_back(s);
  }

  std::vector<double> xs, ys;
  double peak = 0.0;
  for (const auto& g : report.groups) {
    peak = std::max(peak, g.normalized_median);
    if (g.normalized_median > 0.0) {
      xs.push_back(g.sweep_value);
      ys.push_back(std::log(g.normalized_median));
    }
  }
  if (!report.groups.empty()) {
    const double first = report.groups.front().normalized_median;
    report.growth_factor = first > 0.0 ? peak / first : (peak > 0.0 ? INFINITY : 1.0);
  }
  report.trend_slope = ols_slope(xs, ys);
  report.pass = finite && report.growth_factor <= c.thresholds.median_factor &&
                report.trend_slope <= c.thresholds.max_slope;
  if (!finite) report.notes.emplace_back("non-finite ratio observed");
  report.asserted = c.samples >= 10;
  if (c.samples > 0 && c.samples < 10) {
    report.notes.emplace_back("fewer than 10 samples per sweep value; boundedness is not asserted");
  }
  if (report.bmo_lower_bound) {
    report.notes.emplace_back("product BMO normalization used a sampled lower bound");
  }
  return report;
}

std::vector<SampleRecord> evaluate_all(const ExperimentConfig& c, const std::vector<Point>& points,
                                       RunOptions options) {
  std::vector<SampleRecord> records(points.size() * c.samples);
  parallel_for(records.size(), options.threads, [&](std::size_t idx) {
    const std::size_t g = idx / c.samples, i = idx % c.samples;
    records[idx] = evaluate(c, points[g], split_seed(c.seed, i));
  });
  return records;
}

}  // namespace

double estimate_terms(const ExperimentConfig& config) {
  double total = 0.0;
  for (const auto& p : resolve_points(config)) total += estimate_point(config, p);
  return total * static_cast<double>(config.samples);
}

ExperimentReport run_sweep(const ExperimentConfig& config, RunOptions options) {
  check_config(config);
  const auto points = resolve_points(config);
  for (const auto& p : points) {
    if (p.depths[0] < 0 || p.depths[1] < 0 || p.depths[0] > Grid::kMaxDepth || p.depths[1] > Grid::kMaxDepth) {
      throw ConfigError("config key 'depths': out of range");
    }
  }
  const double terms = estimate_terms(config);
  if (terms > config.budget) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "experiment needs about %.3g elementary terms; budget is %.3g", terms, config.budget);
    throw BudgetExceeded(buf);
  }
  try {
    return summarize(config, points, evaluate_all(config, points, options));
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("invalid experiment: ") + e.what());
  }
}

ExperimentReport extrapolation_consistency(const ExperimentConfig& config, RunOptions options) {
  ExperimentConfig c = config;
  if (c.exponents.empty()) throw ConfigError("config key 'exponents': extrapolation needs at least one tuple");
  c.sweep.variable = SweepVariable::Exponent;
  c.sweep.values.clear();
  for (std::size_t t = 0; t < c.exponents.size(); ++t) c.sweep.values.push_back({static_cast<int>(t)});
  ExperimentReport report = run_sweep(c, options);

  bool pass = true;
  for (const auto& r : report.records) pass = pass && std::isfinite(r.ratio);
  if (c.kind == ExperimentKind::Maximal) {
    for (std::size_t t = 0; t < c.exponents.size(); ++t) {
      bool all_infinite = true;
      for (const auto& e : c.exponents[t]) all_infinite = all_infinite && e.is_infinite();
      if (!all_infinite) continue;
      for (std::size_t i = 0; i < c.samples; ++i) {
        const auto& r = report.records[t * c.samples + i];
        if (r.ratio > r.ap_char + 1e-9) {
          pass = false;
          report.notes.emplace_back("all-infinity maximal bound violated");
        }
      }
    }
  }
  double lo = INFINITY, hi = 0.0;
  for (const auto& g : report.groups) {
    if (g.samples == 0) continue;
    lo = std::min(lo, g.median);
    hi = std::max(hi, g.median);
  }
  if (hi > 0.0 && hi > c.thresholds.median_factor * lo) {
    pass = false;
    report.notes.emplace_back("cross-tuple medians differ by more than the median factor");
  }
  report.growth_factor = lo > 0.0 && std::isfinite(lo) ? hi / lo : 1.0;
  report.pass = pass;
  return report;
}

WeightTuple config_weights(const ExperimentConfig& config, std::size_t slots, std::uint64_t seed) {
  if (slots == 0) throw ConfigError("config key 'exponents': need at least one slot");
  if (config.weights.size() > 1 && config.weights.size() < slots) {
    throw ConfigError("config key 'weights': fewer specs than slots");
  }
  const auto specs = weight_specs(config, slots);
  return sample_tuple(Grid(config.depths[0], config.depths[1]), specs, seed);
}

}  // namespace dyadic
