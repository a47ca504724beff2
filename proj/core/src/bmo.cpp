// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/bmo.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>

#include "dyadic/errors.hpp"
#include "dyadic/norms.hpp"

namespace dyadic {

IntervalCoefficients::IntervalCoefficients(int max_level) : max_level_(max_level) {
  require(max_level >= 0 && max_level <= 2 * Grid::kMaxDepth, "interval level out of range");
  values_.assign((std::size_t{2} << max_level) - 1, 0.0);
}

IntervalCoefficients& IntervalCoefficients::operator*=(double s) {
  for (auto& v : values_) v *= s;
  return *this;
}

double seq_bmo(const IntervalCoefficients& a) {
  // Subtree energies, finest level first.
  const int top = a.max_level();
  std::vector<double> energy(a.raw().size(), 0.0);
  double best = 0.0;
  for (int level = top; level >= 0; --level) {
    for (std::int64_t pos = 0; pos < (std::int64_t{1} << level); ++pos) {
      const std::size_t idx = (std::size_t{1} << level) - 1 + static_cast<std::size_t>(pos);
      double e = a.at(level, pos) * a.at(level, pos);
      if (level < top) {
        const std::size_t child = (std::size_t{1} << (level + 1)) - 1 + 2 * static_cast<std::size_t>(pos);
        e += energy[child] + energy[child + 1];
      }
      energy[idx] = e;
      best = std::max(best, e * std::ldexp(1.0, level));
    }
  }
  return std::sqrt(best);
}

BmoStrategy BmoStrategy::automatic(const Grid& grid, std::uint64_t seed) {
  return grid.cells() <= kExhaustiveCellLimit ? exhaustive() : sampled(256, seed);
}

namespace {

// Energy |a_K|^2 of each rectangle with its cell mask (grids of <= 64 cells use a bitmask).
struct RectEnergy {
  DyadicRectangle rect;
  std::uint64_t mask = 0;
  double energy = 0.0;
};

std::uint64_t cell_mask(const Grid& grid, const DyadicRectangle& r) {
  std::uint64_t mask = 0;
  const std::size_t a1 = r.first.first_cell(grid), n1 = r.first.cell_count(grid);
  const std::size_t a2 = r.second.first_cell(grid), n2 = r.second.cell_count(grid);
  for (std::size_t i1 = a1; i1 < a1 + n1; ++i1) {
    for (std::size_t i2 = a2; i2 < a2 + n2; ++i2) mask |= std::uint64_t{1} << grid.flat(i1, i2);
  }
  return mask;
}

BmoResult exhaustive_bmo(const RectangleCoefficients& a) {
  const Grid& grid = a.grid();
  if (grid.cells() > kExhaustiveCellLimit) throw PreconditionError("exhaustive product BMO needs at most 16 cells");
  std::vector<RectEnergy> terms;
  for (const auto& r : all_rectangles(grid)) {
    const double v = a[r];
    if (v != 0.0) terms.push_back({r, cell_mask(grid, r), v * v});
  }
  double best = 0.0;
  const std::uint64_t subsets = std::uint64_t{1} << grid.cells();
  for (std::uint64_t omega = 1; omega < subsets; ++omega) {
    double sum = 0.0;
    for (const auto& t : terms) {
      if ((t.mask & omega) == t.mask) sum += t.energy;
    }
    const double measure = static_cast<double>(std::popcount(omega)) * grid.cell_measure();
    best = std::max(best, sum / measure);
  }
  return {std::sqrt(best), false};
}

// 2D prefix counts of the cells in a candidate set, for O(1) containment tests.
class CellSet {
 public:
  explicit CellSet(const Grid& grid) : grid_(grid), in_(grid.cells(), 0) {}
  void add(const DyadicRectangle& r) {
    const std::size_t a1 = r.first.first_cell(grid_), n1 = r.first.cell_count(grid_);
    const std::size_t a2 = r.second.first_cell(grid_), n2 = r.second.cell_count(grid_);
    for (std::size_t i1 = a1; i1 < a1 + n1; ++i1) {
      for (std::size_t i2 = a2; i2 < a2 + n2; ++i2) in_[grid_.flat(i1, i2)] = 1;
    }
  }
  double measure_and_index() {
    const std::size_t s1 = grid_.side(Param::One), s2 = grid_.side(Param::Two);
    prefix_.assign((s1 + 1) * (s2 + 1), 0);
    for (std::size_t i1 = 0; i1 < s1; ++i1) {
      for (std::size_t i2 = 0; i2 < s2; ++i2) {
        prefix_[(i1 + 1) * (s2 + 1) + i2 + 1] = in_[grid_.flat(i1, i2)] + prefix_[i1 * (s2 + 1) + i2 + 1] +
                                                 prefix_[(i1 + 1) * (s2 + 1) + i2] - prefix_[i1 * (s2 + 1) + i2];
      }
    }
    return static_cast<double>(prefix_.back()) * grid_.cell_measure();
  }
  bool contains(const DyadicRectangle& r) const {
    const std::size_t s2 = grid_.side(Param::Two);
    const std::size_t a1 = r.first.first_cell(grid_), b1 = a1 + r.first.cell_count(grid_);
    const std::size_t a2 = r.second.first_cell(grid_), b2 = a2 + r.second.cell_count(grid_);
    const long count = prefix_[b1 * (s2 + 1) + b2] - prefix_[a1 * (s2 + 1) + b2] - prefix_[b1 * (s2 + 1) + a2] +
                       prefix_[a1 * (s2 + 1) + a2];
    return static_cast<std::size_t>(count) == (b1 - a1) * (b2 - a2);
  }

 private:
  Grid grid_;
  std::vector<char> in_;
  std::vector<long> prefix_;
};

double make_pairing(double numerator, double denominator) {
  if (numerator == 0.0) return 0.0;
  if (denominator == 0.0) throw InternalError("pairing denominator vanished with a nonzero numerator");
  return numerator / denominator;
}

}  // namespace

double rectangle_bmo(const RectangleCoefficients& a) {
  // Energy of the rectangles inside each R: pyramid of sums over the subtree.
  const Grid& grid = a.grid();
  const int n1 = grid.depth1(), n2 = grid.depth2();
  RectTable<double> inside(grid);
  for (int l1 = n1; l1 >= 0; --l1) {
    for (int l2 = n2; l2 >= 0; --l2) {
      for (std::size_t q1 = 0; q1 < (std::size_t{1} << l1); ++q1) {
        for (std::size_t q2 = 0; q2 < (std::size_t{1} << l2); ++q2) {
          const double v = a.at(l1, l2, q1, q2);
          // Inclusion-exclusion over the two child directions.
          double e = v * v;
          const bool c1 = l1 < n1, c2 = l2 < n2;
          if (c1) e += inside.at(l1 + 1, l2, 2 * q1, q2) + inside.at(l1 + 1, l2, 2 * q1 + 1, q2);
          if (c2) e += inside.at(l1, l2 + 1, q1, 2 * q2) + inside.at(l1, l2 + 1, q1, 2 * q2 + 1);
          if (c1 && c2) {
            for (std::size_t u = 0; u < 2; ++u) {
              for (std::size_t w = 0; w < 2; ++w) e -= inside.at(l1 + 1, l2 + 1, 2 * q1 + u, 2 * q2 + w);
            }
          }
          inside.at(l1, l2, q1, q2) = e;
        }
      }
    }
  }
  double best = 0.0;
  for (int l1 = 0; l1 <= n1; ++l1) {
    for (int l2 = 0; l2 <= n2; ++l2) {
      const double scale = std::ldexp(1.0, l1 + l2);
      for (double e : inside.level(l1, l2)) best = std::max(best, e * scale);
    }
  }
  return std::sqrt(best);
}

BmoResult product_bmo(const RectangleCoefficients& a, const BmoStrategy& strategy) {
  if (strategy.kind == BmoStrategy::Kind::Exhaustive) return exhaustive_bmo(a);
  const Grid& grid = a.grid();
  const auto rects = all_rectangles(grid);
  std::vector<std::pair<DyadicRectangle, double>> terms;
  for (const auto& r : rects) {
    const double v = a[r];
    if (v != 0.0) terms.emplace_back(r, v * v);
  }
  double best = rectangle_bmo(a);
  best *= best;
  std::mt19937_64 rng(strategy.seed);
  std::uniform_int_distribution<std::size_t> pick(0, rects.size() - 1);
  std::uniform_int_distribution<int> pieces(1, 4);
  for (std::size_t s = 0; s < strategy.samples; ++s) {
    CellSet omega(grid);
    const int count = pieces(rng);
    for (int c = 0; c < count; ++c) omega.add(rects[pick(rng)]);
    const double measure = omega.measure_and_index();
    double sum = 0.0;
    for (const auto& [r, e] : terms) {
      if (omega.contains(r)) sum += e;
    }
    best = std::max(best, sum / measure);
  }
  return {std::sqrt(best), true};
}

double little_bmo(const GridFunction& b) {
  double best = 0.0;
  const auto means = rectangle_means(b);
  const Grid& grid = b.grid();
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      const int s1 = grid.depth1() - l1, s2 = grid.depth2() - l2;
      std::vector<double> osc((std::size_t{1} << l1) << l2, 0.0);
      for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
        const std::size_t q1 = i1 >> s1;
        for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
          const std::size_t q2 = i2 >> s2;
          osc[(q1 << l2) | q2] += std::abs(b.at(i1, i2) - means.at(l1, l2, q1, q2));
        }
      }
      const double scale = std::ldexp(1.0, -(s1 + s2));
      for (double o : osc) best = std::max(best, o * scale);
    }
  }
  return best;
}

double little_bmo_slices(const GridFunction& b) {
  const Grid& grid = b.grid();
  double best = 0.0;
  for (Param m : {Param::One, Param::Two}) {
    const Grid line = m == Param::One ? Grid(grid.depth1(), 0) : Grid(0, grid.depth2());
    for (std::size_t t = 0; t < grid.side(other(m)); ++t) {
      GridFunction slice(line);
      for (std::size_t i = 0; i < grid.side(m); ++i) {
        slice[i] = m == Param::One ? b.at(i, t) : b.at(t, i);
      }
      best = std::max(best, little_bmo(slice));
    }
  }
  return best;
}

PairingRatio h1_pairing_ratio(const IntervalCoefficients& a, const IntervalCoefficients& b) {
  require(a.max_level() == b.max_level(), "coefficient sequences differ in depth");
  const int top = b.max_level();
  bool nonzero = false;
  double numerator = 0.0;
  for (std::size_t i = 0; i < a.raw().size(); ++i) {
    numerator += std::abs(a.raw()[i] * b.raw()[i]);
    nonzero = nonzero || b.raw()[i] != 0.0;
  }
  require(nonzero, "b must not vanish identically");
  // (sum |b_K|^2 1_K / |K|)^{1/2} on the 2^(top+1) cells of the finest level below top.
  const int depth = top + 1;
  const std::size_t cells = std::size_t{1} << depth;
  double l1 = 0.0;
  for (std::size_t c = 0; c < cells; ++c) {
    double sq = 0.0;
    for (int level = 0; level <= top; ++level) {
      const double v = b.at(level, static_cast<std::int64_t>(c >> (depth - level)));
      sq += v * v * std::ldexp(1.0, level);
    }
    l1 += std::sqrt(sq);
  }
  l1 /= static_cast<double>(cells);
  const double bmo = seq_bmo(a);
  return {make_pairing(numerator, bmo * l1), false};
}

PairingRatio h1_pairing_ratio(const RectangleCoefficients& a, const RectangleCoefficients& b,
                              const BmoStrategy& strategy) {
  require_same_grid(a.grid(), b.grid());
  const Grid& grid = a.grid();
  bool nonzero = false;
  double numerator = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    numerator += std::abs(a.data()[i] * b.data()[i]);
    nonzero = nonzero || b.data()[i] != 0.0;
  }
  require(nonzero, "b must not vanish identically");
  GridFunction sq(grid);
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      const double inv = std::ldexp(1.0, l1 + l2);
      for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
        for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
          const double v = b.at(l1, l2, i1 >> (grid.depth1() - l1), i2 >> (grid.depth2() - l2));
          sq.at(i1, i2) += v * v * inv;
        }
      }
    }
  }
  const double l1norm = integral(sq.map([](double v) { return std::sqrt(v); }));
  const BmoResult bmo = product_bmo(a, strategy);
  return {make_pairing(numerator, bmo.value * l1norm), bmo.lower_bound};
}

}  // namespace dyadic
