#pragma once

#include <functional>
#include <map>
#include <vector>

#include "orbivertex/boxcount.hpp"
#include "orbivertex/partition.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

/// The monomial ladder q-frak_t over q_0..q_{n-1}: q-frak_0 = 1 and
/// q-frak_t = q_{t mod n} * q-frak_{t-1}. With `barred` set, indices are
/// negated (the bar involution applied variable-wise).
inline Mono qfrak(const VarRegistry& reg, int n, long long t, bool barred = false) {
  Mono m = unit_mono(reg);
  auto bump = [&](long long idx, int delta) {
    int k = mod_n(barred ? -idx : idx, n);
    m[static_cast<std::size_t>(k)] += delta;
  };
  if (t >= 0)
    for (long long s = 1; s <= t; ++s) bump(s, +1);
  else
    for (long long s = t + 1; s <= 0; ++s) bump(s, -1);
  return m;
}

/// Alphabet for Schur evaluation: either the infinite ladder
/// x_i = qfrak(i - nu_i), or an explicit finite list of monomials.
struct Specialization {
  int n = 1;
  Partition nu;
  bool barred = false;
  RegistryPtr reg;                  // holds the q-variables at indices 0..n-1
  std::vector<Mono> explicit_x;     // when nonempty, overrides the ladder
  bool finite() const { return !explicit_x.empty(); }

  Mono x(int i) const {
    if (finite()) return explicit_x.at(static_cast<std::size_t>(i));
    return qfrak(*reg, n, i - nu.part(i), barred);
  }

  int count(long long qw, int m) const {
    if (finite()) return static_cast<int>(explicit_x.size());
    // ladder degrees are w*(i - nu_i); beyond this index every monomial of
    // h_m that uses x_i exceeds the window
    int w = reg->var(0).weight;
    long long min_deg = 0;
    for (int i = 0; i < nu.rows(); ++i)
      min_deg = std::min(min_deg, static_cast<long long>(w) * (i - nu.part(i)));
    long long hi = qw / w + nu.part(0) + 2 - (static_cast<long long>(m) - 1) * (min_deg / w);
    return static_cast<int>(std::max<long long>(hi, nu.rows() + 2));
  }
};

/// Complete homogeneous h_m at the specialization, exact within the windows.
/// DP in the auxiliary t-degree of prod_i (1 - x_i t)^{-1}.
inline Series complete_homogeneous(int m, const Specialization& spec, long long qw, long long vw) {
  if (m < 0) throw std::invalid_argument("complete_homogeneous: m must be >= 0");
  Series one = Series::constant(spec.reg, 1, qw, vw);
  if (m == 0) return one;
  int imax = spec.count(qw, m);
  std::vector<Series> h(static_cast<std::size_t>(m) + 1, Series::zero(spec.reg, qw, vw));
  h[0] = one;
  for (int i = 0; i < imax; ++i) {
    Mono xi = spec.x(i);
    // adding variable x: H[d] <- H[d] + x * H[d-1], with H[d-1] already updated
    for (int d = 1; d <= m; ++d)
      h[static_cast<std::size_t>(d)] += h[static_cast<std::size_t>(d - 1)].mono_mul(xi, 1);
  }
  Series out = h[static_cast<std::size_t>(m)];
  out.tighten_floors();
  return out;
}

/// Skew Schur function s_{lam/eta} at the specialization via the Jacobi-Trudi
/// determinant det(h_{lam_i - eta_j - i + j}); zero when eta is not contained
/// in lam. The entry window is padded adaptively until the determinant is
/// exact on the requested window.
inline Series skew_schur(const Partition& lam, const Partition& eta, const Specialization& spec,
                         long long qw, long long vw) {
  if (!lam.contains(eta)) return Series::zero(spec.reg, qw, vw);
  int ell = lam.rows();
  if (ell == 0) return Series::constant(spec.reg, 1, qw, vw);
  if (ell > 20) throw std::invalid_argument("skew_schur: shape too tall");

  for (long long pad = 0;; pad = pad == 0 ? 8 : pad * 2) {
    std::vector<std::vector<Series>> a(static_cast<std::size_t>(ell));
    for (int i = 0; i < ell; ++i)
      for (int j = 0; j < ell; ++j) {
        int idx = lam.part(i) - eta.part(j) - i + j;
        a[static_cast<std::size_t>(i)].push_back(
            idx < 0 ? Series::zero(spec.reg, Series::WIN_MAX, Series::WIN_MAX)
                    : complete_homogeneous(idx, spec, qw + pad, vw));
      }
    // expansion along columns, memoized on the surviving row subset
    std::map<std::pair<int, unsigned>, Series> memo;
    std::function<Series(int, unsigned)> det = [&](int col, unsigned rows) -> Series {
      if (col == ell) return Series::constant(spec.reg, 1, qw + pad, vw);
      auto key = std::make_pair(col, rows);
      auto it = memo.find(key);
      if (it != memo.end()) return it->second;
      Series out = Series::zero(spec.reg, qw + pad, vw);
      int sign = 1;
      for (int i = 0; i < ell; ++i) {
        if (!(rows & (1u << i))) continue;
        const Series& entry = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(col)];
        if (!entry.is_zero()) {
          Series term = entry * det(col + 1, rows & ~(1u << i));
          out += sign > 0 ? term : term * Rat(-1);
        }
        sign = -sign;
      }
      out.tighten_floors();
      memo[key] = out;
      return out;
    };
    Series result = det(0, (1u << ell) - 1);
    if (result.q_window() >= qw || pad > 4096) {
      result.shrink_windows(qw, vw);
      result.tighten_floors();
      return result;
    }
  }
}

}  // namespace orbivertex
