// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "dyadic/sqmax.hpp"

#include <cmath>
#include <optional>
#include <vector>

#include "dyadic/errors.hpp"
#include "dyadic/haar.hpp"
#include "dyadic/martingale.hpp"
#include "dyadic/norms.hpp"

namespace dyadic {

GridFunction maximal(std::span<const GridFunction> fs) {
  require(!fs.empty(), "maximal needs at least one function");
  auto product = rectangle_means(abs(fs[0]));
  for (std::size_t i = 1; i < fs.size(); ++i) {
    require_same_grid(fs[i].grid(), fs[0].grid());
    const auto means = rectangle_means(abs(fs[i]));
    for (std::size_t k = 0; k < product.data().size(); ++k) product.data()[k] *= means.data()[k];
  }
  return pointwise_sup(product);
}

GridFunction weighted_maximal(const GridFunction& f, const Weight& mu) {
  require_same_grid(f.grid(), mu.grid());
  auto table = rectangle_means(abs(f) * mu.values());
  const auto mass = rectangle_means(mu.values());
  for (std::size_t k = 0; k < table.data().size(); ++k) table.data()[k] /= mass.data()[k];
  return pointwise_sup(table);
}

GridFunction square_full(const GridFunction& f) {
  const Grid& grid = f.grid();
  GridFunction sum(grid);
  for (int l1 = 0; l1 < grid.depth1(); ++l1) {
    const auto d1 = level_difference(f, Param::One, l1);
    for (int l2 = 0; l2 < grid.depth2(); ++l2) {
      const auto d = level_difference(d1, Param::Two, l2);
      sum += d * d;
    }
  }
  return sum.map([](double v) { return std::sqrt(v); });
}

GridFunction square_param(const GridFunction& f, Param m) {
  GridFunction sum(f.grid());
  for (int l = 0; l < f.grid().depth(m); ++l) {
    const auto d = level_difference(f, m, l);
    sum += d * d;
  }
  return sum.map([](double v) { return std::sqrt(v); });
}

GridFunction square_block(const GridFunction& f, int k1, int k2) {
  const Grid& grid = f.grid();
  const int n1 = grid.depth1(), n2 = grid.depth2();
  require(k1 >= 0 && k2 >= 0, "block depth must be non-negative");
  require(k1 <= n1 - 1 && k2 <= n2 - 1, "block depth exceeds grid depth");
  const HaarCoefficients coeff(f);
  const HaarPattern both{1, 1};
  GridFunction sum(grid);
  // Level l_m of K runs over [-k_m, N_m - 1 - k_m]; a negative level is an
  // ancestor of [0,1) whose only descendants on the grid lie inside [0,1).
  for (int a1 = -k1; a1 <= n1 - 1 - k1; ++a1) {
    const int j1 = a1 + k1;
    const int g1 = std::max(a1, 0);
    for (int a2 = -k2; a2 <= n2 - 1 - k2; ++a2) {
      const int j2 = a2 + k2;
      const int g2 = std::max(a2, 0);
      const double amp = std::sqrt(std::ldexp(1.0, j1 + j2));
      const std::size_t cw1 = std::size_t{1} << (n1 - j1), cw2 = std::size_t{1} << (n2 - j2);
      // Each K of this level pair, then its block Delta_{K,k} f on the cells of K.
      for (std::size_t p1 = 0; p1 < (std::size_t{1} << g1); ++p1) {
        for (std::size_t p2 = 0; p2 < (std::size_t{1} << g2); ++p2) {
          const std::size_t d1 = std::size_t{1} << (j1 - g1), d2 = std::size_t{1} << (j2 - g2);
          for (std::size_t u1 = 0; u1 < d1; ++u1) {
            for (std::size_t u2 = 0; u2 < d2; ++u2) {
              const std::size_t q1 = p1 * d1 + u1, q2 = p2 * d2 + u2;
              const double c = amp * coeff(j1, q1, j2, q2, both);
              if (c == 0.0) continue;
              for (std::size_t a = 0; a < cw1; ++a) {
                for (std::size_t b = 0; b < cw2; ++b) {
                  const double v = ((a < cw1 / 2) == (b < cw2 / 2)) ? c : -c;
                  sum.at(q1 * cw1 + a, q2 * cw2 + b) += v * v;
                }
              }
            }
          }
        }
      }
    }
  }
  return sum.map([](double v) { return std::sqrt(v); });
}

namespace {

// Optional martingale block per parameter for one slot.
struct SlotBlocks {
  std::optional<int> first;
  std::optional<int> second;
};

void place(std::vector<SlotBlocks>& slots, std::size_t slot, Param m, int k) {
  require(slot < slots.size(), "assignment slot out of range");
  require(k >= 0, "block depth must be non-negative");
  auto& target = m == Param::One ? slots[slot].first : slots[slot].second;
  require(!target.has_value(), "a slot may carry at most one block per parameter");
  target = k;
}

void check_family(std::span<const GridFunction> fs) {
  require(!fs.empty(), "need at least one function");
  for (const auto& f : fs) require_same_grid(f.grid(), fs[0].grid());
}

// Averages <|blocked f_j|>_K for every K of one level pair.
class SlotFactors {
 public:
  SlotFactors(std::span<const GridFunction> fs, std::vector<SlotBlocks> blocks)
      : fs_(fs), blocks_(std::move(blocks)), grid_(fs[0].grid()) {
    first_differences_.resize(fs.size());
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (!blocks_[j].first) continue;
      for (int level = 0; level < grid_.depth1(); ++level) {
        first_differences_[j].push_back(level_difference(fs[j], Param::One, level));
      }
    }
  }

  /// Product over slots; empty when some block falls below the finest level.
  std::vector<double> product(int l1, int l2) const {
    std::vector<double> out((std::size_t{1} << l1) << l2, 1.0);
    for (std::size_t j = 0; j < fs_.size(); ++j) {
      const auto& b = blocks_[j];
      const int t1 = b.first ? l1 + *b.first : -1;
      const int t2 = b.second ? l2 + *b.second : -1;
      if (t1 >= grid_.depth1() || t2 >= grid_.depth2()) return {};
      GridFunction g = b.first ? first_differences_[j][static_cast<std::size_t>(t1)] : fs_[j];
      if (b.second) g = level_difference(g, Param::Two, t2);
      const auto means = level_means(abs(g), l1, l2);
      for (std::size_t i = 0; i < out.size(); ++i) out[i] *= means[i];
    }
    return out;
  }

 private:
  std::span<const GridFunction> fs_;
  std::vector<SlotBlocks> blocks_;
  Grid grid_;
  std::vector<std::vector<GridFunction>> first_differences_;
};

std::size_t cell_of(int level, int depth, std::size_t i) { return i >> (depth - level); }

}  // namespace

GridFunction a1k(std::span<const GridFunction> fs, std::array<int, 2> k, A1Assignment assignment) {
  check_family(fs);
  std::vector<SlotBlocks> blocks(fs.size());
  place(blocks, assignment.first, Param::One, k[0]);
  place(blocks, assignment.second, Param::Two, k[1]);
  const SlotFactors factors(fs, std::move(blocks));
  const Grid& grid = fs[0].grid();
  GridFunction sum(grid);
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      const auto prod = factors.product(l1, l2);
      if (prod.empty()) continue;
      for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
        const std::size_t row = cell_of(l1, grid.depth1(), i1) << l2;
        for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
          const double v = prod[row | cell_of(l2, grid.depth2(), i2)];
          sum.at(i1, i2) += v * v;
        }
      }
    }
  }
  return sum.map([](double v) { return std::sqrt(v); });
}

GridFunction a2k(std::span<const GridFunction> fs, std::array<int, 3> k, A2Assignment assignment) {
  check_family(fs);
  require(assignment.inner_a != assignment.inner_b, "inner blocks must sit on different slots");
  const bool outer_second = assignment.orientation == A2Orientation::OuterSecond;
  const Param outer = outer_second ? Param::Two : Param::One;
  std::vector<SlotBlocks> blocks(fs.size());
  place(blocks, assignment.outer, outer, k[0]);
  place(blocks, assignment.inner_a, other(outer), k[1]);
  place(blocks, assignment.inner_b, other(outer), k[2]);
  const SlotFactors factors(fs, std::move(blocks));
  const Grid& grid = fs[0].grid();
  const int outer_depth = grid.depth(outer), inner_depth = grid.depth(other(outer));

  GridFunction sum(grid);
  for (int lo = 0; lo <= outer_depth; ++lo) {
    GridFunction inner(grid);
    for (int li = 0; li <= inner_depth; ++li) {
      const int l1 = outer_second ? li : lo, l2 = outer_second ? lo : li;
      const auto prod = factors.product(l1, l2);
      if (prod.empty()) continue;
      for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
        const std::size_t row = cell_of(l1, grid.depth1(), i1) << l2;
        for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
          inner.at(i1, i2) += prod[row | cell_of(l2, grid.depth2(), i2)];
        }
      }
    }
    sum += inner * inner;
  }
  return sum.map([](double v) { return std::sqrt(v); });
}

GridFunction a3k(std::span<const GridFunction> fs, std::array<int, 4> k, A3Assignment assignment) {
  check_family(fs);
  std::vector<SlotBlocks> blocks(fs.size());
  place(blocks, assignment.first_a, Param::One, k[0]);
  place(blocks, assignment.second_a, Param::Two, k[1]);
  place(blocks, assignment.first_b, Param::One, k[2]);
  place(blocks, assignment.second_b, Param::Two, k[3]);
  const SlotFactors factors(fs, std::move(blocks));
  const Grid& grid = fs[0].grid();
  GridFunction sum(grid);
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      const auto prod = factors.product(l1, l2);
      if (prod.empty()) continue;
      for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
        const std::size_t row = cell_of(l1, grid.depth1(), i1) << l2;
        for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
          sum.at(i1, i2) += prod[row | cell_of(l2, grid.depth2(), i2)];
        }
      }
    }
  }
  return sum;
}

Ratio make_ratio(double numerator, double denominator) {
  if (denominator == 0.0) {
    if (numerator == 0.0) return {0.0, true};
    throw InternalError("nonzero numerator over zero denominator");
  }
  return {numerator / denominator, false};
}

Ratio prop56_ratio(std::span<const GridFunction> family, const Weight& u, double p, double s, std::array<int, 2> k) {
  require(!family.empty(), "need at least one function");
  require(p > 1.0 && std::isfinite(p) && s > 1.0 && std::isfinite(s), "p and s must lie in (1, inf)");
  const Grid& grid = u.grid();
  for (const auto& f : family) require_same_grid(f.grid(), grid);
  const auto u_means = rectangle_means(u.values());

  GridFunction lhs_inner(grid);
  GridFunction rhs_inner(grid);
  for (const auto& f : family) {
    // (sum_K <|Delta_{K,k} f|>_K^2 1_K / <u>_K^2)^{1/2}
    const GridFunction single[] = {f};
    std::vector<SlotBlocks> blocks(1);
    place(blocks, 0, Param::One, k[0]);
    place(blocks, 0, Param::Two, k[1]);
    const SlotFactors factors(single, std::move(blocks));
    GridFunction sq(grid);
    for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
      for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
        const auto prod = factors.product(l1, l2);
        if (prod.empty()) continue;
        for (std::size_t i1 = 0; i1 < grid.side(Param::One); ++i1) {
          const std::size_t q1 = cell_of(l1, grid.depth1(), i1);
          for (std::size_t i2 = 0; i2 < grid.side(Param::Two); ++i2) {
            const std::size_t q2 = cell_of(l2, grid.depth2(), i2);
            const double v = prod[(q1 << l2) | q2] / u_means.at(l1, l2, q1, q2);
            sq.at(i1, i2) += v * v;
          }
        }
      }
    }
    lhs_inner += sq.map([s](double v) { return std::pow(v, s / 2.0); });
    rhs_inner += f.map([s](double v) { return std::pow(std::abs(v), s); });
  }
  const auto root = [s](double v) { return std::pow(v, 1.0 / s); };
  const GridFunction lhs_weight = u.pow(1.0 / p).values();
  const GridFunction rhs_weight = u.pow(-(1.0 - 1.0 / p)).values();
  const Exponent pe = Exponent::finite(p);
  return make_ratio(lp_norm(lhs_inner.map(root), pe, lhs_weight), lp_norm(rhs_inner.map(root), pe, rhs_weight));
}

}  // namespace dyadic
