// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "dyadic/errors.hpp"
#include "dyadic/norms.hpp"

namespace dyadic {

namespace {

std::uint64_t hash_interval(std::uint64_t h, const DyadicInterval& i) {
  h = hash_combine(h, static_cast<std::uint64_t>(i.level));
  return hash_combine(h, static_cast<std::uint64_t>(i.pos));
}

std::uint64_t hash_rect(std::uint64_t h, const DyadicRectangle& r) {
  return hash_interval(hash_interval(h, r.first), r.second);
}

double sign_of(std::uint64_t h) { return (h >> 63) != 0 ? -1.0 : 1.0; }

void check_inputs(const Grid& grid, std::size_t expected, std::span<const GridFunction> fs) {
  require(fs.size() == expected, "wrong number of input functions");
  for (const auto& f : fs) require_same_grid(f.grid(), grid);
}

// Mixed-radix counter over the choices of each slot.
class TupleCounter {
 public:
  explicit TupleCounter(std::vector<std::size_t> radix) : radix_(std::move(radix)), index_(radix_.size(), 0) {}
  const std::vector<std::size_t>& index() const { return index_; }
  bool next() {
    for (std::size_t j = radix_.size(); j-- > 0;) {
      if (++index_[j] < radix_[j]) return true;
      index_[j] = 0;
    }
    return false;
  }

 private:
  std::vector<std::size_t> radix_;
  std::vector<std::size_t> index_;
};

std::vector<DyadicRectangle> rect_descendants(const DyadicRectangle& K, const Complexity& k) {
  std::vector<DyadicRectangle> out;
  for (const auto& i1 : K.first.descendants(k[0])) {
    for (const auto& i2 : K.second.descendants(k[1])) out.emplace_back(i1, i2);
  }
  return out;
}

double inv_sqrt_length(int level) { return std::sqrt(std::ldexp(1.0, level)); }

}  // namespace

// ---------------------------------------------------------------- shifts

double shift_bound(const DyadicRectangle& K, std::span<const DyadicRectangle> rs) {
  require(!rs.empty(), "need at least one rectangle");
  double value = 1.0;
  for (const auto& r : rs) value *= std::sqrt(r.measure());
  return value / std::pow(K.measure(), static_cast<double>(rs.size() - 1));
}

std::vector<HaarPattern> default_shift_pattern(std::size_t n) {
  std::vector<HaarPattern> pattern(n + 1, HaarPattern{0, 0});
  pattern.front() = HaarPattern{1, 1};
  pattern.back() = HaarPattern{1, 1};
  return pattern;
}

void validate(const ShiftSpec& spec) {
  require(spec.n >= 1, "shift needs n >= 1");
  require(spec.k.size() == spec.n + 1 && spec.pattern.size() == spec.n + 1, "shift needs n+1 complexities and patterns");
  require(static_cast<bool>(spec.coefficient), "shift needs a coefficient provider");
  for (Param m : {Param::One, Param::Two}) {
    int cancellative = 0;
    for (std::size_t j = 0; j <= spec.n; ++j) {
      const int kj = spec.k[j][static_cast<std::size_t>(index_of(m))];
      const int eta = spec.pattern[j][m];
      require(kj >= 0, "complexity must be non-negative");
      require(eta == 0 || eta == 1, "Haar exponent must be 0 or 1");
      require(kj + eta <= spec.grid.depth(m), "complexity exceeds grid depth");
      cancellative += eta;
    }
    require(cancellative >= 2, "each parameter needs at least two cancellative slots");
  }
}

bool shift_admissible(const ShiftSpec& spec, const DyadicRectangle& K) {
  for (std::size_t j = 0; j <= spec.n; ++j) {
    if (K.first.level + spec.k[j][0] + spec.pattern[j].eta1 > spec.grid.depth1()) return false;
    if (K.second.level + spec.k[j][1] + spec.pattern[j].eta2 > spec.grid.depth2()) return false;
  }
  return true;
}

ShiftSpec make_shift(const Grid& grid, std::size_t n, std::vector<Complexity> k, std::vector<HaarPattern> pattern,
                     std::uint64_t seed, CoefficientMode mode) {
  ShiftSpec spec{grid, n, std::move(k), std::move(pattern), {}};
  spec.coefficient = [seed, mode](const DyadicRectangle& K, std::span<const DyadicRectangle> rs) {
    const double bound = shift_bound(K, rs);
    if (mode == CoefficientMode::Plus) return bound;
    std::uint64_t h = hash_rect(seed, K);
    for (const auto& r : rs) h = hash_rect(h, r);
    return sign_of(mix64(h)) * bound;
  };
  validate(spec);
  return spec;
}

ShiftSpec make_shift(const Grid& grid, std::size_t n, Complexity k, std::uint64_t seed, CoefficientMode mode) {
  return make_shift(grid, n, std::vector<Complexity>(n + 1, k), default_shift_pattern(n), seed, mode);
}

namespace {

// Calls visit(K, rs, pairing_product_over_first_slots, coefficient) for every
// admissible K and tuple; `pairings` covers the slots whose pairings are used.
template <class Visit>
void for_each_shift_term(const ShiftSpec& spec, std::span<const HaarCoefficients> pairings, Visit visit) {
  const Grid& grid = spec.grid;
  const std::size_t slots = spec.n + 1;
  std::vector<DyadicRectangle> rs(slots);
  std::vector<std::vector<DyadicRectangle>> desc(slots);
  std::vector<std::vector<double>> values(pairings.size());
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      const DyadicRectangle probe(l1, 0, l2, 0);
      if (!shift_admissible(spec, probe)) continue;
      for (std::int64_t q1 = 0; q1 < (std::int64_t{1} << l1); ++q1) {
        for (std::int64_t q2 = 0; q2 < (std::int64_t{1} << l2); ++q2) {
          const DyadicRectangle K(l1, q1, l2, q2);
          std::vector<std::size_t> radix(slots);
          for (std::size_t j = 0; j < slots; ++j) {
            desc[j] = rect_descendants(K, spec.k[j]);
            radix[j] = desc[j].size();
          }
          for (std::size_t j = 0; j < pairings.size(); ++j) {
            values[j].resize(desc[j].size());
            for (std::size_t t = 0; t < desc[j].size(); ++t) values[j][t] = pairings[j](desc[j][t], spec.pattern[j]);
          }
          TupleCounter counter(std::move(radix));
          do {
            const auto& idx = counter.index();
            double product = 1.0;
            for (std::size_t j = 0; j < pairings.size(); ++j) product *= values[j][idx[j]];
            if (product == 0.0) continue;
            for (std::size_t j = 0; j < slots; ++j) rs[j] = desc[j][idx[j]];
            const double bound = shift_bound(K, rs);
            const double a = std::clamp(spec.coefficient(K, rs), -bound, bound);
            visit(rs, product, a);
          } while (counter.next());
        }
      }
    }
  }
}

std::vector<HaarCoefficients> coefficient_tables(std::span<const GridFunction> fs) {
  std::vector<HaarCoefficients> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.emplace_back(f);
  return out;
}

}  // namespace

GridFunction apply_shift(const ShiftSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n, fs);
  const auto tables = coefficient_tables(fs);
  HaarSynthesizer out(spec.grid);
  const HaarPattern dual = spec.pattern[spec.n];
  for_each_shift_term(spec, tables, [&](std::span<const DyadicRectangle> rs, double product, double a) {
    out.add(rs.back(), dual, a * product);
  });
  return out.synthesize();
}

double shift_form(const ShiftSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n + 1, fs);
  const auto tables = coefficient_tables(fs);
  std::vector<double> terms;
  for_each_shift_term(spec, tables, [&](std::span<const DyadicRectangle>, double product, double a) {
    terms.push_back(a * product);
  });
  return pairwise_sum(terms);
}

ShiftSpec shift_adjoint(const ShiftSpec& spec, std::size_t j1, std::size_t j2) {
  validate(spec);
  require(j1 <= spec.n && j2 <= spec.n, "adjoint slot out of range");
  ShiftSpec out = spec;
  const std::size_t d = spec.n;
  if (j1 > 0) {
    std::swap(out.k[j1 - 1][0], out.k[d][0]);
    std::swap(out.pattern[j1 - 1].eta1, out.pattern[d].eta1);
  }
  if (j2 > 0) {
    std::swap(out.k[j2 - 1][1], out.k[d][1]);
    std::swap(out.pattern[j2 - 1].eta2, out.pattern[d].eta2);
  }
  out.coefficient = [inner = spec.coefficient, j1, j2, d](const DyadicRectangle& K,
                                                          std::span<const DyadicRectangle> rs) {
    std::vector<DyadicRectangle> original(rs.begin(), rs.end());
    if (j1 > 0) std::swap(original[j1 - 1].first, original[d].first);
    if (j2 > 0) std::swap(original[j2 - 1].second, original[d].second);
    return inner(K, original);
  };
  return out;
}

// ---------------------------------------------------- partial paraproducts

double partial_bound(const DyadicInterval& K, std::span<const DyadicInterval> is) {
  require(!is.empty(), "need at least one interval");
  double value = 1.0;
  for (const auto& i : is) value *= std::sqrt(i.length());
  return value / std::pow(K.length(), static_cast<double>(is.size() - 1));
}

void validate(const PartialParaproductSpec& spec) {
  require(spec.n >= 1, "partial paraproduct needs n >= 1");
  require(spec.k.size() == spec.n + 1 && spec.eta.size() == spec.n + 1, "need n+1 complexities and exponents");
  require(spec.para_slot <= spec.n, "paraproduct slot out of range");
  require(static_cast<bool>(spec.coefficient), "partial paraproduct needs a coefficient provider");
  require(spec.grid.depth(other(spec.shift_param)) >= 1, "paraproduct parameter needs depth >= 1");
  int cancellative = 0;
  for (std::size_t j = 0; j <= spec.n; ++j) {
    require(spec.k[j] >= 0, "complexity must be non-negative");
    require(spec.eta[j] == 0 || spec.eta[j] == 1, "Haar exponent must be 0 or 1");
    require(spec.k[j] + spec.eta[j] <= spec.grid.depth(spec.shift_param), "complexity exceeds grid depth");
    cancellative += spec.eta[j];
  }
  require(cancellative >= 2, "shift parameter needs at least two cancellative slots");
}

PartialParaproductSpec make_partial_paraproduct(const Grid& grid, std::size_t n, Param shift_param,
                                                std::vector<int> k, std::vector<int> eta, std::size_t para_slot,
                                                std::uint64_t seed) {
  PartialParaproductSpec spec{grid, n, shift_param, std::move(k), std::move(eta), para_slot, {}};
  const int top = grid.depth(other(shift_param)) - 1;
  spec.coefficient = [seed, top](const DyadicInterval& K, std::span<const DyadicInterval> is) {
    std::uint64_t h = hash_interval(seed, K);
    for (const auto& i : is) h = hash_interval(h, i);
    std::mt19937_64 rng(mix64(h));
    std::normal_distribution<double> normal;
    IntervalCoefficients a(top);
    for (int level = 0; level <= top; ++level) {
      const double scale = std::sqrt(std::ldexp(1.0, -level));
      for (std::int64_t pos = 0; pos < (std::int64_t{1} << level); ++pos) a.at(level, pos) = normal(rng) * scale;
    }
    const double bmo = seq_bmo(a);
    if (bmo > 0.0) a *= partial_bound(K, is) / bmo;
    return a;
  };
  validate(spec);
  return spec;
}

PartialParaproductSpec make_partial_paraproduct(const Grid& grid, std::size_t n, Param shift_param, int k,
                                                std::uint64_t seed) {
  std::vector<int> eta(n + 1, 0);
  eta.front() = 1;
  eta.back() = 1;
  return make_partial_paraproduct(grid, n, shift_param, std::vector<int>(n + 1, k), std::move(eta), n, seed);
}

IntervalCoefficients normalized_coefficients(const PartialParaproductSpec& spec, const DyadicInterval& K,
                                             std::span<const DyadicInterval> is) {
  IntervalCoefficients a = spec.coefficient(K, is);
  require(a.max_level() == spec.grid.depth(other(spec.shift_param)) - 1,
          "coefficient sequence must cover the paraproduct levels with children");
  const double bound = partial_bound(K, is);
  const double bmo = seq_bmo(a);
  if (bmo > bound) a *= bound / bmo;
  return a;
}

namespace {

DyadicRectangle arrange(Param shift_param, const DyadicInterval& s, const DyadicInterval& p) {
  return shift_param == Param::One ? DyadicRectangle(s, p) : DyadicRectangle(p, s);
}

HaarPattern arrange(Param shift_param, int eta_s, int eta_p) {
  return shift_param == Param::One ? HaarPattern{eta_s, eta_p} : HaarPattern{eta_p, eta_s};
}

template <class Visit>
void for_each_partial_term(const PartialParaproductSpec& spec, std::span<const HaarCoefficients> pairings,
                           Visit visit) {
  const Param s = spec.shift_param, p = other(s);
  const int ns = spec.grid.depth(s), np = spec.grid.depth(p);
  const std::size_t slots = spec.n + 1;
  int reach = 0;
  for (std::size_t j = 0; j < slots; ++j) reach = std::max(reach, spec.k[j] + spec.eta[j]);
  std::vector<DyadicInterval> is(slots);
  std::vector<std::vector<DyadicInterval>> desc(slots);
  std::vector<double> factors(pairings.size());
  for (int level = 0; level + reach <= ns; ++level) {
    for (std::int64_t pos = 0; pos < (std::int64_t{1} << level); ++pos) {
      const DyadicInterval K{s, level, pos};
      std::vector<std::size_t> radix(slots);
      for (std::size_t j = 0; j < slots; ++j) {
        desc[j] = K.descendants(spec.k[j]);
        radix[j] = desc[j].size();
      }
      TupleCounter counter(std::move(radix));
      do {
        const auto& idx = counter.index();
        for (std::size_t j = 0; j < slots; ++j) is[j] = desc[j][idx[j]];
        const IntervalCoefficients a = normalized_coefficients(spec, K, is);
        for (int lp = 0; lp < np; ++lp) {
          for (std::int64_t qp = 0; qp < (std::int64_t{1} << lp); ++qp) {
            const double coefficient = a.at(lp, qp);
            if (coefficient == 0.0) continue;
            const DyadicInterval Kp{p, lp, qp};
            double product = 1.0;
            for (std::size_t j = 0; j < pairings.size() && product != 0.0; ++j) {
              const bool para = j == spec.para_slot;
              product *= pairings[j](arrange(s, is[j], Kp), arrange(s, spec.eta[j], para ? 1 : 0)) *
                         (para ? 1.0 : inv_sqrt_length(lp));
            }
            if (product != 0.0) visit(is, Kp, product, coefficient);
          }
        }
      } while (counter.next());
    }
  }
}

}  // namespace

GridFunction apply_partial_paraproduct(const PartialParaproductSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n, fs);
  const auto tables = coefficient_tables(fs);
  HaarSynthesizer out(spec.grid);
  const Param s = spec.shift_param;
  const bool para = spec.para_slot == spec.n;
  for_each_partial_term(spec, tables,
                        [&](std::span<const DyadicInterval> is, const DyadicInterval& Kp, double product, double a) {
                          const double factor = para ? 1.0 : inv_sqrt_length(Kp.level);
                          out.add(arrange(s, is.back(), Kp), arrange(s, spec.eta[spec.n], para ? 1 : 0),
                                  a * product * factor);
                        });
  return out.synthesize();
}

double partial_paraproduct_form(const PartialParaproductSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n + 1, fs);
  const auto tables = coefficient_tables(fs);
  std::vector<double> terms;
  for_each_partial_term(spec, tables, [&](std::span<const DyadicInterval>, const DyadicInterval&, double product,
                                          double a) { terms.push_back(a * product); });
  return pairwise_sum(terms);
}

// ------------------------------------------------------- full paraproducts

void validate(const FullParaproductSpec& spec) {
  require(spec.n >= 1, "full paraproduct needs n >= 1");
  require(spec.para_slot1 <= spec.n && spec.para_slot2 <= spec.n, "paraproduct slot out of range");
  require(spec.grid.depth1() >= 1 && spec.grid.depth2() >= 1, "full paraproduct needs depths >= 1");
  require(spec.a.grid() == spec.grid, "coefficients live on another grid");
}

namespace {

void check_finest_levels_empty(const RectangleCoefficients& a) {
  const Grid& grid = a.grid();
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      if (l1 < grid.depth1() && l2 < grid.depth2()) continue;
      for (double v : a.level(l1, l2)) require(v == 0.0, "coefficients on finest-level rectangles are not allowed");
    }
  }
}

FullParaproductSpec normalize(std::size_t n, std::size_t p1, std::size_t p2, RectangleCoefficients a,
                              std::uint64_t seed, bool saturate) {
  const Grid grid = a.grid();
  check_finest_levels_empty(a);
  BmoResult bmo = product_bmo(a, BmoStrategy::automatic(grid, split_seed(seed, 1)));
  if (bmo.value > 0.0 && (saturate || bmo.value > 1.0)) {
    const double scale = 1.0 / bmo.value;
    for (auto& v : a.data()) v *= scale;
    bmo.value = 1.0;
  }
  FullParaproductSpec spec{grid, n, p1, p2, std::move(a), bmo};
  validate(spec);
  return spec;
}

}  // namespace

FullParaproductSpec make_full_paraproduct(const Grid& grid, std::size_t n, std::size_t para_slot1,
                                          std::size_t para_slot2, std::uint64_t seed, double density) {
  require(density > 0.0 && density <= 1.0, "support density must lie in (0, 1]");
  require(grid.depth1() >= 1 && grid.depth2() >= 1, "full paraproduct needs depths >= 1");
  std::mt19937_64 rng(split_seed(seed, 0));
  std::bernoulli_distribution keep(density);
  RectangleCoefficients a(grid);
  bool any = false;
  for (int l1 = 0; l1 < grid.depth1(); ++l1) {
    for (int l2 = 0; l2 < grid.depth2(); ++l2) {
      for (auto& v : a.level(l1, l2)) {
        const bool on = keep(rng);
        const double sign = (rng() >> 63) != 0 ? -1.0 : 1.0;
        if (on) {
          v = sign;
          any = true;
        }
      }
    }
  }
  if (!any) a.at(0, 0, 0, 0) = 1.0;
  return normalize(n, para_slot1, para_slot2, std::move(a), seed, true);
}

FullParaproductSpec make_full_paraproduct(std::size_t n, std::size_t para_slot1, std::size_t para_slot2,
                                          RectangleCoefficients a, std::uint64_t seed) {
  return normalize(n, para_slot1, para_slot2, std::move(a), seed, false);
}

namespace {

template <class Visit>
void for_each_full_term(const FullParaproductSpec& spec, std::span<const HaarCoefficients> pairings, Visit visit) {
  const Grid& grid = spec.grid;
  for (int l1 = 0; l1 < grid.depth1(); ++l1) {
    for (int l2 = 0; l2 < grid.depth2(); ++l2) {
      for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
        for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
          const double a = spec.a.at(l1, l2, q1, q2);
          if (a == 0.0) continue;
          double product = 1.0;
          for (std::size_t j = 0; j < pairings.size() && product != 0.0; ++j) {
            const HaarPattern pattern{j == spec.para_slot1 ? 1 : 0, j == spec.para_slot2 ? 1 : 0};
            product *= pairings[j](l1, q1, l2, q2, pattern) * (pattern.eta1 ? 1.0 : inv_sqrt_length(l1)) *
                       (pattern.eta2 ? 1.0 : inv_sqrt_length(l2));
          }
          if (product != 0.0) visit(DyadicRectangle(l1, static_cast<std::int64_t>(q1), l2, static_cast<std::int64_t>(q2)), product, a);
        }
      }
    }
  }
}

}  // namespace

GridFunction apply_full_paraproduct(const FullParaproductSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n, fs);
  const auto tables = coefficient_tables(fs);
  HaarSynthesizer out(spec.grid);
  const HaarPattern dual{spec.para_slot1 == spec.n ? 1 : 0, spec.para_slot2 == spec.n ? 1 : 0};
  for_each_full_term(spec, tables, [&](const DyadicRectangle& K, double product, double a) {
    const double factor = (dual.eta1 ? 1.0 : inv_sqrt_length(K.first.level)) *
                          (dual.eta2 ? 1.0 : inv_sqrt_length(K.second.level));
    out.add(K, dual, a * product * factor);
  });
  return out.synthesize();
}

double full_paraproduct_form(const FullParaproductSpec& spec, std::span<const GridFunction> fs) {
  validate(spec);
  check_inputs(spec.grid, spec.n + 1, fs);
  const auto tables = coefficient_tables(fs);
  std::vector<double> terms;
  for_each_full_term(spec, tables, [&](const DyadicRectangle&, double product, double a) {
    terms.push_back(a * product);
  });
  return pairwise_sum(terms);
}

// ---------------------------------------------------------------- dispatch

std::size_t arity(const OperatorSpec& spec) {
  return std::visit([](const auto& s) { return s.n; }, spec);
}

const Grid& grid_of(const OperatorSpec& spec) {
  return std::visit([](const auto& s) -> const Grid& { return s.grid; }, spec);
}

GridFunction apply(const OperatorSpec& spec, std::span<const GridFunction> fs) {
  if (const auto* s = std::get_if<ShiftSpec>(&spec)) return apply_shift(*s, fs);
  if (const auto* p = std::get_if<PartialParaproductSpec>(&spec)) return apply_partial_paraproduct(*p, fs);
  return apply_full_paraproduct(std::get<FullParaproductSpec>(spec), fs);
}

double form(const OperatorSpec& spec, std::span<const GridFunction> fs) {
  if (const auto* s = std::get_if<ShiftSpec>(&spec)) return shift_form(*s, fs);
  if (const auto* p = std::get_if<PartialParaproductSpec>(&spec)) return partial_paraproduct_form(*p, fs);
  return full_paraproduct_form(std::get<FullParaproductSpec>(spec), fs);
}

Operator as_operator(OperatorSpec spec) {
  return [spec = std::move(spec)](std::span<const GridFunction> fs) { return apply(spec, fs); };
}

// ------------------------------------------------------------- commutators

GridFunction commutator(const Operator& op, const GridFunction& b, std::size_t slot,
                        std::span<const GridFunction> fs) {
  require(slot < fs.size(), "commutator slot out of range");
  for (const auto& f : fs) require_same_grid(f.grid(), b.grid());
  std::vector<GridFunction> moved(fs.begin(), fs.end());
  moved[slot] *= b;
  return b * op(fs) - op(moved);
}

Operator commutator_operator(Operator op, GridFunction b, std::size_t slot) {
  return [op = std::move(op), b = std::move(b), slot](std::span<const GridFunction> fs) {
    return commutator(op, b, slot, fs);
  };
}

double default_contour_radius(const GridFunction& b, double scale) {
  double peak = 0.0;
  for (double v : b.values()) peak = std::max(peak, std::abs(v));
  if (peak == 0.0) return 1.0;
  return 0.5 / (peak * std::max(scale, 1.0));
}

GridFunction commutator_contour(const Operator& op, const GridFunction& b, std::size_t slot,
                                std::span<const GridFunction> fs, ContourOptions options) {
  require(slot < fs.size(), "commutator slot out of range");
  require(options.nodes >= 8, "contour quadrature needs at least 8 nodes");
  for (const auto& f : fs) require_same_grid(f.grid(), b.grid());
  const double radius = options.radius > 0.0 ? options.radius : default_contour_radius(b);
  require(std::isfinite(radius), "contour radius must be finite");
  const Grid& grid = b.grid();
  std::vector<GridFunction> inputs(fs.begin(), fs.end());
  ComplexGridFunction sum(grid);
  for (int node = 0; node < options.nodes; ++node) {
    const double theta = 2.0 * std::numbers::pi * node / options.nodes;
    const std::complex<double> z = std::polar(radius, theta);
    // T is linear in the slot: split e^{-zb} f into real and imaginary parts.
    GridFunction re(grid), im(grid);
    for (std::size_t c = 0; c < grid.cells(); ++c) {
      const std::complex<double> v = std::exp(-z * b[c]) * fs[slot][c];
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw PreconditionError("contour radius too large for this symbol; shrink it");
      }
      re[c] = v.real();
      im[c] = v.imag();
    }
    inputs[slot] = std::move(re);
    const GridFunction t_re = op(inputs);
    inputs[slot] = std::move(im);
    const GridFunction t_im = op(inputs);
    for (std::size_t c = 0; c < grid.cells(); ++c) {
      sum[c] += std::exp(z * b[c]) * std::complex<double>(t_re[c], t_im[c]) / z;
    }
  }
  GridFunction out(grid);
  for (std::size_t c = 0; c < grid.cells(); ++c) out[c] = sum[c].real() / options.nodes;
  return out;
}

}  // namespace dyadic
