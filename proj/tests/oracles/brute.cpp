// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#include "brute.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace brute {
namespace {

std::size_t side(const Grid& g, int m) { return std::size_t{1} << (m == 0 ? g.depth1() : g.depth2()); }
int depth(const Grid& g, int m) { return m == 0 ? g.depth1() : g.depth2(); }
double measure(const Grid& g) { return std::ldexp(1.0, -(g.depth1() + g.depth2())); }

GridFunction absval(const GridFunction& f) {
  GridFunction out(f.grid());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = std::abs(f[i]);
  return out;
}

// Function of x_m alone, given by its profile along parameter m.
GridFunction along(const Grid& grid, int m, const std::vector<double>& profile) {
  GridFunction out(grid);
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) out.at(i1, i2) = profile[m == 0 ? i1 : i2];
  }
  return out;
}

double rect_measure(const Rect& r) { return std::ldexp(1.0, -(r.l1 + r.l2)); }

dyadic::DyadicRectangle to_rect(const Rect& r) { return dyadic::DyadicRectangle(r.l1, r.q1, r.l2, r.q2); }

}  // namespace

std::vector<Rect> rects(const Grid& grid) {
  std::vector<Rect> out;
  for (int l1 = 0; l1 <= grid.depth1(); ++l1) {
    for (int l2 = 0; l2 <= grid.depth2(); ++l2) {
      for (std::int64_t q1 = 0; q1 < (std::int64_t{1} << l1); ++q1) {
        for (std::int64_t q2 = 0; q2 < (std::int64_t{1} << l2); ++q2) out.push_back({l1, q1, l2, q2});
      }
    }
  }
  return out;
}

bool in_interval(int d, int level, std::int64_t pos, std::size_t cell) {
  return static_cast<std::int64_t>(cell >> (d - level)) == pos;
}

bool in_rect(const Grid& grid, const Rect& r, std::size_t i1, std::size_t i2) {
  return in_interval(grid.depth1(), r.l1, r.q1, i1) && in_interval(grid.depth2(), r.l2, r.q2, i2);
}

double haar1(int d, int level, std::int64_t pos, int eta, std::size_t cell) {
  if (!in_interval(d, level, pos, cell)) return 0.0;
  const double amp = std::pow(2.0, level / 2.0);
  if (eta == 0) return amp;
  // Left child keeps +, right child -.
  const bool left = ((cell >> (d - level - 1)) & 1U) == 0;
  return left ? amp : -amp;
}

GridFunction haar(const Grid& grid, const Rect& r, int eta1, int eta2) {
  GridFunction out(grid);
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      out.at(i1, i2) = haar1(grid.depth1(), r.l1, r.q1, eta1, i1) * haar1(grid.depth2(), r.l2, r.q2, eta2, i2);
    }
  }
  return out;
}

GridFunction avg_kernel(const Grid& grid, int m, int level, std::int64_t pos) {
  std::vector<double> profile(side(grid, m));
  for (std::size_t i = 0; i < profile.size(); ++i) {
    profile[i] = in_interval(depth(grid, m), level, pos, i) ? std::ldexp(1.0, level) : 0.0;
  }
  return along(grid, m, profile);
}

GridFunction tensor(const Grid& grid, const std::vector<double>& u, const std::vector<double>& v) {
  GridFunction out(grid);
  for (std::size_t i1 = 0; i1 < u.size(); ++i1) {
    for (std::size_t i2 = 0; i2 < v.size(); ++i2) out.at(i1, i2) = u[i1] * v[i2];
  }
  return out;
}

double inner(const GridFunction& f, const GridFunction& g) {
  double s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
  return s * measure(f.grid());
}

double average(const GridFunction& f, const Rect& r) {
  const Grid& grid = f.grid();
  double s = 0.0;
  std::size_t count = 0;
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      if (in_rect(grid, r, i1, i2)) {
        s += f.at(i1, i2);
        ++count;
      }
    }
  }
  return s / static_cast<double>(count);
}

double lp(const GridFunction& f, double p) {
  if (std::isinf(p)) {
    double m = 0.0;
    for (double v : f.values()) m = std::max(m, std::abs(v));
    return m;
  }
  double s = 0.0;
  for (double v : f.values()) s += std::pow(std::abs(v), p);
  return std::pow(s * measure(f.grid()), 1.0 / p);
}

GridFunction maximal(std::span<const GridFunction> fs) {
  const Grid& grid = fs.front().grid();
  std::vector<GridFunction> abs_fs;
  for (const auto& f : fs) abs_fs.push_back(absval(f));
  GridFunction out(grid);
  const auto all = rects(grid);
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      double best = 0.0;
      for (const auto& r : all) {
        if (!in_rect(grid, r, i1, i2)) continue;
        double prod = 1.0;
        for (const auto& f : abs_fs) prod *= average(f, r);
        best = std::max(best, prod);
      }
      out.at(i1, i2) = best;
    }
  }
  return out;
}

GridFunction weighted_maximal(const GridFunction& f, const GridFunction& mu) {
  const Grid& grid = f.grid();
  GridFunction fmu(grid);
  for (std::size_t i = 0; i < f.size(); ++i) fmu[i] = std::abs(f[i]) * mu[i];
  GridFunction out(grid);
  const auto all = rects(grid);
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      double best = 0.0;
      for (const auto& r : all) {
        if (in_rect(grid, r, i1, i2)) best = std::max(best, average(fmu, r) / average(mu, r));
      }
      out.at(i1, i2) = best;
    }
  }
  return out;
}

double ap_constant(const GridFunction& w, double p) {
  const GridFunction dual = w.map([p](double v) { return std::pow(v, -1.0 / (p - 1.0)); });
  double best = 0.0;
  for (const auto& r : rects(w.grid())) best = std::max(best, average(w, r) * std::pow(average(dual, r), p - 1.0));
  return best;
}

double multilinear_constant(std::span<const GridFunction> ws, std::span<const double> p) {
  double inv = 0.0;
  for (double pi : p) inv += 1.0 / pi;
  const double target = 1.0 / inv;
  GridFunction w = ws.front();
  for (std::size_t i = 1; i < ws.size(); ++i) w = w * ws[i];
  const GridFunction wp = w.map([target](double v) { return std::pow(v, target); });
  std::vector<GridFunction> duals;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    const double conj = p[i] / (p[i] - 1.0);
    duals.push_back(ws[i].map([conj](double v) { return std::pow(v, -conj); }));
  }
  double best = 0.0;
  for (const auto& r : rects(w.grid())) {
    double term = std::pow(average(wp, r), 1.0 / target);
    for (std::size_t i = 0; i < ws.size(); ++i) {
      const double conj = p[i] / (p[i] - 1.0);
      term *= std::pow(average(duals[i], r), 1.0 / conj);
    }
    best = std::max(best, term);
  }
  return best;
}

double ap_mu_constant(const GridFunction& w, double p, const GridFunction& mu) {
  const GridFunction wmu = w * mu;
  const GridFunction dual = w.map([p](double v) { return std::pow(v, -1.0 / (p - 1.0)); }) * mu;
  double best = 0.0;
  for (const auto& r : rects(w.grid())) {
    const double m = average(mu, r);
    best = std::max(best, average(wmu, r) / m * std::pow(average(dual, r) / m, p - 1.0));
  }
  return best;
}

GridFunction diff(const GridFunction& f, const Rect& r) {
  const Grid& grid = f.grid();
  if (r.l1 >= grid.depth1() || r.l2 >= grid.depth2()) return GridFunction(grid);
  const GridFunction h = haar(grid, r, 1, 1);
  return h * inner(f, h);
}

GridFunction diff1(const GridFunction& f, int m, int level, std::int64_t pos) {
  const Grid& grid = f.grid();
  const int d = depth(grid, m);
  GridFunction out(grid);
  if (level >= d) return out;
  const double cell = std::ldexp(1.0, -d);
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      const std::size_t x = m == 0 ? i1 : i2;
      const double hx = haar1(d, level, pos, 1, x);
      if (hx == 0.0) continue;
      double pairing = 0.0;
      for (std::size_t y = 0; y < side(grid, m); ++y) {
        const double v = m == 0 ? f.at(y, i2) : f.at(i1, y);
        pairing += v * haar1(d, level, pos, 1, y) * cell;
      }
      out.at(i1, i2) = hx * pairing;
    }
  }
  return out;
}

GridFunction block1(const GridFunction& f, int m, int level, std::int64_t pos, int k) {
  GridFunction out(f.grid());
  if (level + k >= depth(f.grid(), m)) return out;
  for (std::int64_t t = 0; t < (std::int64_t{1} << k); ++t) out += diff1(f, m, level + k, (pos << k) + t);
  return out;
}

GridFunction square_full(const GridFunction& f) {
  GridFunction acc(f.grid());
  for (const auto& r : rects(f.grid())) {
    const GridFunction d = diff(f, r);
    acc += d * d;
  }
  return acc.map([](double v) { return std::sqrt(v); });
}

namespace {

// <|P f_j|>_K for each slot after applying the listed one-parameter blocks.
struct BlockOnSlot {
  std::size_t slot;
  int param;
  int k;
};

std::vector<double> slot_averages(std::span<const GridFunction> fs, const Rect& K,
                                  const std::vector<BlockOnSlot>& blocks) {
  std::vector<double> out;
  for (std::size_t j = 0; j < fs.size(); ++j) {
    GridFunction g = fs[j];
    for (const auto& b : blocks) {
      if (b.slot != j) continue;
      g = b.param == 0 ? block1(g, 0, K.l1, K.q1, b.k) : block1(g, 1, K.l2, K.q2, b.k);
    }
    out.push_back(average(absval(g), K));
  }
  return out;
}

double product(const std::vector<double>& v) {
  double p = 1.0;
  for (double x : v) p *= x;
  return p;
}

void add_on(GridFunction& acc, const Rect& K, double value) {
  const Grid& grid = acc.grid();
  for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
    for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
      if (in_rect(grid, K, i1, i2)) acc.at(i1, i2) += value;
    }
  }
}

}  // namespace

GridFunction a1k(std::span<const GridFunction> fs, std::array<int, 2> k, std::size_t first, std::size_t second) {
  GridFunction acc(fs.front().grid());
  for (const auto& K : rects(acc.grid())) {
    const double p = product(slot_averages(fs, K, {{first, 0, k[0]}, {second, 1, k[1]}}));
    add_on(acc, K, p * p);
  }
  return acc.map([](double v) { return std::sqrt(v); });
}

GridFunction a2k(std::span<const GridFunction> fs, std::array<int, 3> k, bool outer_second, std::size_t outer,
                 std::size_t inner_a, std::size_t inner_b) {
  const Grid& grid = fs.front().grid();
  const int outer_param = outer_second ? 1 : 0;
  const int inner_param = 1 - outer_param;
  GridFunction acc(grid);
  const int od = depth(grid, outer_param), id = depth(grid, inner_param);
  for (int lo = 0; lo <= od; ++lo) {
    for (std::int64_t qo = 0; qo < (std::int64_t{1} << lo); ++qo) {
      GridFunction inner_sum(grid);
      for (int li = 0; li <= id; ++li) {
        for (std::int64_t qi = 0; qi < (std::int64_t{1} << li); ++qi) {
          const Rect K = outer_second ? Rect{li, qi, lo, qo} : Rect{lo, qo, li, qi};
          const double p = product(slot_averages(
              fs, K, {{outer, outer_param, k[0]}, {inner_a, inner_param, k[1]}, {inner_b, inner_param, k[2]}}));
          add_on(inner_sum, K, p);
        }
      }
      acc += inner_sum * inner_sum;
    }
  }
  return acc.map([](double v) { return std::sqrt(v); });
}

GridFunction a3k(std::span<const GridFunction> fs, std::array<int, 4> k, std::array<std::size_t, 4> slots) {
  GridFunction acc(fs.front().grid());
  for (const auto& K : rects(acc.grid())) {
    const double p = product(
        slot_averages(fs, K, {{slots[0], 0, k[0]}, {slots[1], 1, k[1]}, {slots[2], 0, k[2]}, {slots[3], 1, k[3]}}));
    add_on(acc, K, p);
  }
  return acc;
}

double prop56_ratio(std::span<const GridFunction> family, const GridFunction& u, double p, double s,
                    std::array<int, 2> k) {
  const Grid& grid = u.grid();
  GridFunction lhs_inner(grid), rhs_inner(grid);
  for (const auto& f : family) {
    GridFunction sq(grid);
    for (const auto& K : rects(grid)) {
      const GridFunction d = block1(block1(f, 0, K.l1, K.q1, k[0]), 1, K.l2, K.q2, k[1]);
      const double a = average(absval(d), K) / average(u, K);
      add_on(sq, K, a * a);
    }
    lhs_inner += sq.map([s](double v) { return std::pow(v, s / 2.0); });
    rhs_inner += f.map([s](double v) { return std::pow(std::abs(v), s); });
  }
  GridFunction lhs(grid), rhs(grid);
  for (std::size_t i = 0; i < u.size(); ++i) {
    lhs[i] = std::pow(lhs_inner[i], 1.0 / s) * std::pow(u[i], 1.0 / p);
    rhs[i] = std::pow(rhs_inner[i], 1.0 / s) * std::pow(u[i], -(1.0 - 1.0 / p));
  }
  const double den = lp(rhs, p);
  return den == 0.0 ? 0.0 : lp(lhs, p) / den;
}

double seq_bmo(const std::vector<std::vector<double>>& a) {
  double best = 0.0;
  const int levels = static_cast<int>(a.size());
  for (int L = 0; L < levels; ++L) {
    for (std::int64_t P = 0; P < (std::int64_t{1} << L); ++P) {
      double energy = 0.0;
      for (int l = L; l < levels; ++l) {
        for (std::int64_t q = 0; q < (std::int64_t{1} << l); ++q) {
          if ((q >> (l - L)) == P) energy += a[l][q] * a[l][q];
        }
      }
      best = std::max(best, std::sqrt(energy * std::ldexp(1.0, L)));
    }
  }
  return best;
}

double little_bmo(const GridFunction& b) {
  const Grid& grid = b.grid();
  double best = 0.0;
  for (const auto& r : rects(grid)) {
    const double mean = average(b, r);
    double s = 0.0;
    std::size_t count = 0;
    for (std::size_t i1 = 0; i1 < side(grid, 0); ++i1) {
      for (std::size_t i2 = 0; i2 < side(grid, 1); ++i2) {
        if (in_rect(grid, r, i1, i2)) {
          s += std::abs(b.at(i1, i2) - mean);
          ++count;
        }
      }
    }
    best = std::max(best, s / static_cast<double>(count));
  }
  return best;
}

double shift_form(const dyadic::ShiftSpec& spec, std::span<const GridFunction> fs) {
  const Grid& grid = spec.grid;
  const std::size_t slots = spec.n + 1;
  double total = 0.0;
  for (const auto& K : rects(grid)) {
    bool ok = true;
    for (std::size_t j = 0; j < slots && ok; ++j) {
      const int d1 = K.l1 + spec.k[j][0], d2 = K.l2 + spec.k[j][1];
      ok = d1 + spec.pattern[j].eta1 <= grid.depth1() && d2 + spec.pattern[j].eta2 <= grid.depth2();
    }
    if (!ok) continue;
    std::vector<Rect> chosen(slots);
    std::function<void(std::size_t)> walk = [&](std::size_t j) {
      if (j == slots) {
        std::vector<dyadic::DyadicRectangle> rs;
        double bound = 1.0;
        double pairings = 1.0;
        for (std::size_t i = 0; i < slots; ++i) {
          rs.push_back(to_rect(chosen[i]));
          bound *= std::sqrt(rect_measure(chosen[i]));
          pairings *= inner(fs[i], haar(grid, chosen[i], spec.pattern[i].eta1, spec.pattern[i].eta2));
        }
        bound /= std::pow(rect_measure(K), static_cast<double>(spec.n));
        const double a = std::clamp(spec.coefficient(to_rect(K), rs), -bound, bound);
        total += a * pairings;
        return;
      }
      const int k1 = spec.k[j][0], k2 = spec.k[j][1];
      for (std::int64_t t1 = 0; t1 < (std::int64_t{1} << k1); ++t1) {
        for (std::int64_t t2 = 0; t2 < (std::int64_t{1} << k2); ++t2) {
          chosen[j] = {K.l1 + k1, (K.q1 << k1) + t1, K.l2 + k2, (K.q2 << k2) + t2};
          walk(j + 1);
        }
      }
    };
    walk(0);
  }
  return total;
}

double partial_form(const dyadic::PartialParaproductSpec& spec, std::span<const GridFunction> fs) {
  const Grid& grid = spec.grid;
  const int s = spec.shift_param == dyadic::Param::One ? 0 : 1;
  const int p = 1 - s;
  const dyadic::Param sp = spec.shift_param;
  const std::size_t slots = spec.n + 1;
  const int ds = depth(grid, s), dp = depth(grid, p);
  double total = 0.0;
  for (int L = 0; L <= ds; ++L) {
    for (std::int64_t Q = 0; Q < (std::int64_t{1} << L); ++Q) {
      bool ok = true;
      for (std::size_t j = 0; j < slots && ok; ++j) ok = L + spec.k[j] + spec.eta[j] <= ds;
      if (!ok) continue;
      std::vector<dyadic::DyadicInterval> chosen(slots);
      std::function<void(std::size_t)> walk = [&](std::size_t j) {
        if (j == slots) {
          const dyadic::DyadicInterval K{sp, L, Q};
          const dyadic::IntervalCoefficients a = dyadic::normalized_coefficients(spec, K, chosen);
          for (int l = 0; l <= std::min(a.max_level(), dp - 1); ++l) {
            for (std::int64_t q = 0; q < (std::int64_t{1} << l); ++q) {
              const double c = a.at(l, q);
              if (c == 0.0) continue;
              double prod = c;
              for (std::size_t i = 0; i < slots; ++i) {
                std::vector<double> hs(side(grid, s)), up(side(grid, p));
                for (std::size_t x = 0; x < hs.size(); ++x) hs[x] = haar1(ds, chosen[i].level, chosen[i].pos, spec.eta[i], x);
                for (std::size_t y = 0; y < up.size(); ++y) {
                  up[y] = i == spec.para_slot ? haar1(dp, l, q, 1, y)
                                              : (in_interval(dp, l, q, y) ? std::ldexp(1.0, l) : 0.0);
                }
                prod *= inner(fs[i], s == 0 ? tensor(grid, hs, up) : tensor(grid, up, hs));
              }
              total += prod;
            }
          }
          return;
        }
        for (std::int64_t t = 0; t < (std::int64_t{1} << spec.k[j]); ++t) {
          chosen[j] = dyadic::DyadicInterval{sp, L + spec.k[j], (Q << spec.k[j]) + t};
          walk(j + 1);
        }
      };
      walk(0);
    }
  }
  return total;
}

double full_form(const dyadic::FullParaproductSpec& spec, std::span<const GridFunction> fs) {
  const Grid& grid = spec.grid;
  double total = 0.0;
  for (const auto& K : rects(grid)) {
    if (K.l1 >= grid.depth1() || K.l2 >= grid.depth2()) continue;
    const double a = spec.a.at(K.l1, K.l2, static_cast<std::size_t>(K.q1), static_cast<std::size_t>(K.q2));
    if (a == 0.0) continue;
    double prod = a;
    for (std::size_t j = 0; j <= spec.n; ++j) {
      std::vector<double> u(side(grid, 0)), v(side(grid, 1));
      for (std::size_t x = 0; x < u.size(); ++x) {
        u[x] = j == spec.para_slot1 ? haar1(grid.depth1(), K.l1, K.q1, 1, x)
                                    : (in_interval(grid.depth1(), K.l1, K.q1, x) ? std::ldexp(1.0, K.l1) : 0.0);
      }
      for (std::size_t y = 0; y < v.size(); ++y) {
        v[y] = j == spec.para_slot2 ? haar1(grid.depth2(), K.l2, K.q2, 1, y)
                                    : (in_interval(grid.depth2(), K.l2, K.q2, y) ? std::ldexp(1.0, K.l2) : 0.0);
      }
      prod *= inner(fs[j], tensor(grid, u, v));
    }
    total += prod;
  }
  return total;
}

}  // namespace brute
