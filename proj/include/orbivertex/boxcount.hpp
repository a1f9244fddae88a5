#pragma once

#include <array>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <vector>

#include "orbivertex/partition.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

/// Memoized registry q_0..q_{n-1}, all q-type with the given weight. Reusing
/// the same shared registry lets series from independent computations be
/// compared directly.
inline RegistryPtr vertex_registry(int n, int weight = 1) {
  static std::map<std::pair<int, int>, RegistryPtr> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(n, weight);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto reg = std::make_shared<VarRegistry>();
  for (int k = 0; k < n; ++k) reg->add("q" + std::to_string(k), weight, VarKind::Q);
  cache[key] = reg;
  return reg;
}

/// Coloring of boxes by characters of a finite abelian group G = prod Z_{n_i}
/// acting on C^3 through the three characters r1, r2, r3 (determinant one).
struct GColoring {
  std::vector<int> cyclic_orders;               // n_i >= 1
  std::array<std::vector<int>, 3> axis_weights;  // r1, r2, r3 as vectors mod n_i

  static GColoring zn(int n) {
    GColoring g;
    g.cyclic_orders = {n};
    g.axis_weights = {std::vector<int>{1}, std::vector<int>{-1}, std::vector<int>{0}};
    g.validate();
    return g;
  }

  void validate() const {
    if (cyclic_orders.empty()) throw std::invalid_argument("GColoring: empty group");
    for (int n : cyclic_orders)
      if (n < 1) throw std::invalid_argument("GColoring: orders must be positive");
    for (const auto& w : axis_weights)
      if (w.size() != cyclic_orders.size())
        throw std::invalid_argument("GColoring: weight arity mismatch");
    for (std::size_t f = 0; f < cyclic_orders.size(); ++f) {
      int s = axis_weights[0][f] + axis_weights[1][f] + axis_weights[2][f];
      if (mod_n(s, cyclic_orders[f]) != 0)
        throw std::invalid_argument("GColoring: weights violate the Calabi-Yau condition");
    }
  }

  int group_order() const {
    int n = 1;
    for (int m : cyclic_orders) n *= m;
    return n;
  }

  /// Mixed-radix index of the character i*r1 + j*r2 + k*r3.
  int color_index(long long i, long long j, long long k) const {
    int idx = 0;
    for (std::size_t f = 0; f < cyclic_orders.size(); ++f) {
      long long c = i * axis_weights[0][f] + j * axis_weights[1][f] + k * axis_weights[2][f];
      idx = idx * cyclic_orders[f] + mod_n(c, cyclic_orders[f]);
    }
    return idx;
  }
};

/// A 3D partition asymptotic to (lambda, mu, nu), stored as the set of boxes
/// with all coordinates below the bound plus the three legs; beyond the bound
/// membership is exactly leg membership.
struct PlanePartitionRegion {
  Partition lambda, mu, nu;
  int bound = 0;
  std::set<std::array<int, 3>> boxes;

  bool in_lambda_leg(int i, int j, int k) const {
    (void)i;
    return lambda.contains_cell(j, k);
  }
  bool in_mu_leg(int i, int j, int k) const {
    (void)j;
    return mu.contains_cell(k, i);
  }
  bool in_nu_leg(int i, int j, int k) const {
    (void)k;
    return nu.contains_cell(i, j);
  }

  int legs_containing(int i, int j, int k) const {
    return (in_lambda_leg(i, j, k) ? 1 : 0) + (in_mu_leg(i, j, k) ? 1 : 0) +
           (in_nu_leg(i, j, k) ? 1 : 0);
  }

  bool contains(int i, int j, int k) const {
    if (i < 0 || j < 0 || k < 0) return false;
    if (i < bound && j < bound && k < bound) return boxes.count({i, j, k}) != 0;
    return legs_containing(i, j, k) > 0;
  }

  /// Stacking plus asymptotics; throws on violation.
  void validate() const {
    for (const auto& b : boxes) {
      auto [i, j, k] = b;
      if (i >= bound || j >= bound || k >= bound)
        throw std::invalid_argument("PlanePartitionRegion: box outside bounding region");
      if (i > 0 && !contains(i - 1, j, k)) throw std::invalid_argument("stacking violated (i)");
      if (j > 0 && !contains(i, j - 1, k)) throw std::invalid_argument("stacking violated (j)");
      if (k > 0 && !contains(i, j, k - 1)) throw std::invalid_argument("stacking violated (k)");
    }
    // leg boxes inside the region must be present, and boundary slices must
    // agree with the legs so that the region glues to the asymptotic tails
    for (int i = 0; i < bound; ++i)
      for (int j = 0; j < bound; ++j)
        for (int k = 0; k < bound; ++k) {
          bool is_leg = legs_containing(i, j, k) > 0;
          bool have = boxes.count({i, j, k}) != 0;
          if (is_leg && !have) throw std::invalid_argument("leg box missing inside region");
          if (have && !is_leg && (i == bound - 1 || j == bound - 1 || k == bound - 1))
            throw std::invalid_argument("non-leg box touches the region boundary");
        }
  }
};

/// xi = 1 - number of legs containing the box; box must lie in the partition.
inline int xi(const PlanePartitionRegion& pi, std::array<int, 3> box) {
  auto [i, j, k] = box;
  if (!pi.contains(i, j, k)) throw std::invalid_argument("xi: box not in the partition");
  return 1 - pi.legs_containing(i, j, k);
}

/// Largest coordinate appearing in any pairwise leg intersection.
inline int leg_overlap_extent(const Partition& lambda, const Partition& mu, const Partition& nu) {
  int ext = 0;
  // lambda & mu: (j,k) in lambda, (k,i) in mu
  for (auto [j, k] : lambda.cells())
    for (auto [k2, i] : mu.cells())
      if (k == k2) ext = std::max({ext, i, j, k});
  // lambda & nu: (j,k) in lambda, (i,j) in nu
  for (auto [j, k] : lambda.cells())
    for (auto [i, j2] : nu.cells())
      if (j == j2) ext = std::max({ext, i, j, k});
  // mu & nu: (k,i) in mu, (i,j) in nu
  for (auto [k, i] : mu.cells())
    for (auto [i2, j] : nu.cells())
      if (i == i2) ext = std::max({ext, i, j, k});
  return ext;
}

/// Colored renormalized volume |pi|_r for every character r, as a vector
/// indexed by GColoring::color_index. Requires the bound to enclose all
/// pairwise leg intersections (all nonzero-xi boxes).
inline std::vector<long long> colored_volume(const PlanePartitionRegion& pi, const GColoring& col) {
  col.validate();
  if (pi.bound <= leg_overlap_extent(pi.lambda, pi.mu, pi.nu))
    throw std::invalid_argument("colored_volume: bounding region too small for leg overlaps");
  std::vector<long long> out(static_cast<std::size_t>(col.group_order()), 0);
  for (const auto& b : pi.boxes) {
    auto [i, j, k] = b;
    int x = 1 - pi.legs_containing(i, j, k);
    if (x != 0) out[static_cast<std::size_t>(col.color_index(i, j, k))] += x;
  }
  return out;
}

namespace detail {

/// Column data for the height-function form of a 3D partition: at (i,j) the
/// baseline height is max(lambda'_j, mu_i), infinite over nu.
struct ColumnGrid {
  Partition lambda, mu, nu;
  Partition lam_conj;

  explicit ColumnGrid(Partition l, Partition m, Partition n)
      : lambda(std::move(l)), mu(std::move(m)), nu(std::move(n)), lam_conj(lambda.conjugate()) {}

  bool infinite(int i, int j) const { return nu.contains_cell(i, j); }
  int base(int i, int j) const { return std::max(lam_conj.part(j), mu.part(i)); }

  /// Colored xi-sum of the column at its baseline (the minimal configuration).
  void base_colors(int i, int j, const GColoring& col, std::vector<long long>& acc) const {
    int lj = lam_conj.part(j), mi = mu.part(i);
    if (infinite(i, j)) {
      for (int k = 0; k < std::max(lj, mi); ++k) {
        int x = -(k < lj ? 1 : 0) - (k < mi ? 1 : 0);
        if (x != 0) acc[static_cast<std::size_t>(col.color_index(i, j, k))] += x;
      }
    } else {
      // boxes k < base have xi = 1 - [lambda] - [mu]; sum = -min(lj, mi)
      for (int k = 0; k < std::max(lj, mi); ++k) {
        int x = 1 - (k < lj ? 1 : 0) - (k < mi ? 1 : 0);
        if (x != 0) acc[static_cast<std::size_t>(col.color_index(i, j, k))] += x;
      }
    }
  }
};

}  // namespace detail

/// Colored volume of the minimal configuration (just the three legs).
inline std::vector<long long> minimal_colored_volume(const Partition& lambda, const Partition& mu,
                                                     const Partition& nu, const GColoring& col) {
  col.validate();
  detail::ColumnGrid grid(lambda, mu, nu);
  std::vector<long long> acc(static_cast<std::size_t>(col.group_order()), 0);
  int imax = std::max({mu.rows(), nu.part(0), 1});
  int jmax = std::max({lambda.part(0), nu.rows(), 1});
  for (int i = 0; i < imax; ++i)
    for (int j = 0; j < jmax; ++j) grid.base_colors(i, j, col, acc);
  return acc;
}

inline long long minimal_volume(const Partition& lambda, const Partition& mu, const Partition& nu) {
  auto v = minimal_colored_volume(lambda, mu, nu, GColoring::zn(1));
  return v[0];
}

namespace detail {

/// Minimal number of extra boxes any configuration must add in order to raise
/// column (i,j) above its baseline: the smallest monotone pyramid supporting
/// one box at height base(i,j) over the down-left rectangle.
inline long long raise_cost(const ColumnGrid& grid, int i, int j) {
  if (grid.infinite(i, j)) return -1;  // never raisable
  long long target = grid.base(i, j) + 1;
  long long cost = 0;
  for (int a = 0; a <= i; ++a)
    for (int b = 0; b <= j; ++b) {
      if (grid.infinite(a, b)) continue;
      long long need = target - grid.base(a, b);
      if (need > 0) cost += need;
    }
  return cost;
}

/// Columns that any in-budget configuration can possibly raise, as a
/// down-left closed set inside [0,R)^2; returns false if the set touches the
/// boundary (R too small).
inline bool active_columns(const ColumnGrid& grid, int R, int budget,
                           std::vector<char>& active) {
  active.assign(static_cast<std::size_t>(R) * static_cast<std::size_t>(R), 0);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j) {
      long long c = raise_cost(grid, i, j);
      if (c >= 0 && c <= budget) active[static_cast<std::size_t>(i * R + j)] = 1;
    }
  // down-left closure
  for (int i = R - 1; i >= 0; --i)
    for (int j = R - 1; j >= 0; --j) {
      if (!active[static_cast<std::size_t>(i * R + j)]) continue;
      if (i == R - 1 || j == R - 1) return false;
      if (i > 0) active[static_cast<std::size_t>((i - 1) * R + j)] = 1;
      if (j > 0) active[static_cast<std::size_t>(i * R + (j - 1))] = 1;
    }
  return true;
}

/// Enumerate all height functions H >= base over [0,R)^2, weakly decreasing
/// in both directions, equal to base outside the active set, adding at most
/// `budget` extra boxes; calls visit with the per-color extra counts.
inline void enumerate_heights(const ColumnGrid& grid, const GColoring& col, int R, int budget,
                              const std::vector<char>& active,
                              const std::function<void(const std::vector<long long>&)>& visit) {
  int nc = col.group_order();
  std::vector<int> H(static_cast<std::size_t>(R) * static_cast<std::size_t>(R), 0);
  for (int i = 0; i < R; ++i)
    for (int j = 0; j < R; ++j)
      H[static_cast<std::size_t>(i * R + j)] = grid.infinite(i, j) ? -1 : grid.base(i, j);
  // only active columns branch; process them from the upper-right back so
  // constraints reference settled neighbors
  std::vector<int> order;
  for (int idx = R * R - 1; idx >= 0; --idx)
    if (active[static_cast<std::size_t>(idx)] && !grid.infinite(idx / R, idx % R))
      order.push_back(idx);
  std::vector<long long> extra(static_cast<std::size_t>(nc), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int rem) {
    if (pos == order.size()) {
      visit(extra);
      return;
    }
    int idx = order[pos];
    int i = idx / R, j = idx % R;
    int b = grid.base(i, j);
    int lo = b;
    if (i + 1 < R && !grid.infinite(i + 1, j)) lo = std::max(lo, H[static_cast<std::size_t>(idx + R)]);
    if (j + 1 < R && !grid.infinite(i, j + 1)) lo = std::max(lo, H[static_cast<std::size_t>(idx + 1)]);
    if (lo - b > rem) {
      H[static_cast<std::size_t>(idx)] = b;  // restore before backtracking
      return;
    }
    for (int k = b; k < lo; ++k) ++extra[static_cast<std::size_t>(col.color_index(i, j, k))];
    for (int h = lo; h - b <= rem; ++h) {
      H[static_cast<std::size_t>(idx)] = h;
      if (h > lo) ++extra[static_cast<std::size_t>(col.color_index(i, j, h - 1))];
      rec(pos + 1, rem - (h - b));
    }
    for (int h = lo + 1; h - b <= rem; ++h)
      --extra[static_cast<std::size_t>(col.color_index(i, j, h - 1))];
    for (int k = b; k < lo; ++k) --extra[static_cast<std::size_t>(col.color_index(i, j, k))];
    H[static_cast<std::size_t>(idx)] = b;
  };
  rec(0, budget);
}

}  // namespace detail

/// Brute-force orbifold vertex: sum over 3D partitions asymptotic to
/// (lambda,mu,nu) of prod_r q_r^{|pi|_r}, exact for total box-degree <= D.
/// The bounding region grows until the coefficients stabilize.
inline Series enumerate_vertex(const Partition& lambda, const Partition& mu, const Partition& nu,
                               const GColoring& col, int D,
                               RegistryPtr reg = nullptr) {
  col.validate();
  if (D < 0) throw std::invalid_argument("enumerate_vertex: D must be >= 0");
  int nc = col.group_order();
  if (!reg) reg = vertex_registry(nc, 1);
  if (reg->size() != nc) throw std::invalid_argument("enumerate_vertex: registry arity mismatch");

  auto minvol = minimal_colored_volume(lambda, mu, nu, col);
  long long min_total = 0;
  for (long long v : minvol) min_total += v;
  int budget = static_cast<int>(D - min_total);
  if (budget < 0) budget = 0;

  detail::ColumnGrid grid(lambda, mu, nu);
  int maxpart = 0;
  for (const Partition* p : {&lambda, &mu, &nu}) {
    maxpart = std::max({maxpart, p->part(0), p->rows()});
  }

  auto run = [&](int R) {
    std::vector<char> active;
    while (!detail::active_columns(grid, R, budget, active)) ++R;
    // accumulate counts in a flat table indexed by the extra-count vector
    std::size_t stride = static_cast<std::size_t>(budget) + 1;
    std::size_t table_size = 1;
    for (int r = 0; r < nc; ++r) table_size *= stride;
    std::vector<long long> counts(table_size, 0);
    detail::enumerate_heights(grid, col, R, budget, active, [&](const std::vector<long long>& extra) {
      std::size_t idx = 0;
      for (int r = 0; r < nc; ++r) idx = idx * stride + static_cast<std::size_t>(extra[static_cast<std::size_t>(r)]);
      ++counts[idx];
    });
    Series s(reg, D, 0);
    s.set_floors(std::min<long long>(min_total, 0), 0);
    for (std::size_t idx = 0; idx < table_size; ++idx) {
      if (counts[idx] == 0) continue;
      std::size_t rest = idx;
      long long total = 0;
      Mono m(static_cast<std::size_t>(nc), 0);
      for (int r = nc - 1; r >= 0; --r) {
        long long e = minvol[static_cast<std::size_t>(r)] + static_cast<long long>(rest % stride);
        rest /= stride;
        m[static_cast<std::size_t>(r)] = static_cast<int>(e);
        total += e;
      }
      if (total <= D) s.add_term(m, Rat(counts[idx]));
    }
    return std::make_pair(s, R);
  };

  auto [cur, R] = run(D + maxpart + 2);
  for (int rounds = 0;; ++rounds) {
    auto [next, R2] = run(R + 1);
    if (agree_on_shared_window(cur, next)) break;
    cur = std::move(next);
    R = R2;
    if (rounds > 8) throw std::runtime_error("enumerate_vertex: region failed to stabilize");
  }
  cur.tighten_floors();
  return cur;
}

}  // namespace orbivertex
