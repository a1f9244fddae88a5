#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "orbivertex/boxcount.hpp"
#include "orbivertex/partition.hpp"
#include "orbivertex/schur.hpp"
#include "orbivertex/series.hpp"

namespace orbivertex {

/// Rotation q_j -> q_{(j+k) mod n}: evaluates a series at the cyclically
/// shifted variable list (q_k, q_{k+1}, ..., q_{n+k-1}).
inline Series rotate_vars(const Series& s, int n, int k) {
  SubstMap map;
  for (int j = 0; j < n; ++j) {
    SubstTarget t;
    t.image = var_mono(*s.registry(), mod_n(j + k, n));
    map[j] = t;
  }
  return substitute(s, s.registry(), map);
}

/// V^n_{000} = M(1,q)^n prod_{0<a<=b<n} M(q_a..q_b, q) M((q_a..q_b)^{-1}, q),
/// with q = q_0...q_{n-1}. Memoized per (n, weight, window).
inline Series vacuum_vertex(int n, long long D, int weight = 1) {
  static std::map<std::tuple<int, long long, int>, Series> cache;
  static std::mutex mu;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, D, weight});
    if (it != cache.end()) return it->second;
  }
  auto reg = vertex_registry(n, weight);
  Mono q = unit_mono(*reg);
  for (int k = 0; k < n; ++k) q[static_cast<std::size_t>(k)] = 1;
  Series out = Series::constant(reg, 1, D, 0);
  for (int rep = 0; rep < n; ++rep) out *= macmahon(reg, unit_mono(*reg), q, 1, D, 0);
  for (int a = 1; a < n; ++a)
    for (int b = a; b < n; ++b) {
      Mono span = unit_mono(*reg);
      for (int k = a; k <= b; ++k) span[static_cast<std::size_t>(k)] = 1;
      out *= macmahon(reg, span, q, 1, D, 0);
      out *= macmahon(reg, mono_neg(span), q, 1, D, 0);
    }
  out.tighten_floors();
  {
    std::lock_guard<std::mutex> lock(mu);
    cache[{n, D, weight}] = out;
  }
  return out;
}

/// H factor: product over the cells of nu of 1/(1 - prod_s q_s^{h^s}) where
/// h^s counts color-s boxes in the hook. (Keyed by the leg partition nu; the
/// box-counting oracle pins this reading of the hook subscripts.)
inline Series h_factor(const Partition& nu, int n, long long D, int weight = 1) {
  auto reg = vertex_registry(n, weight);
  Series out = Series::constant(reg, 1, D, 0);
  for (const auto& h : hooks_colored(nu, n)) {
    Mono m = unit_mono(*reg);
    for (int s = 0; s < n; ++s) m[static_cast<std::size_t>(s)] = h.color_count[static_cast<std::size_t>(s)];
    out *= geom_expand(reg, m, 1, -1, D, 0);
  }
  return out;
}

/// O factor: prod_k V^n_000(q_k,...,q_{n+k-1})^{-2|nu|_k + |nu|_{k+1} + |nu|_{k-1}}.
inline Series o_factor(const Partition& nu, int n, long long D, int weight = 1) {
  auto reg = vertex_registry(n, weight);
  auto counts = colored_counts(nu, n);
  Series out = Series::constant(reg, 1, D, 0);
  for (int k = 0; k < n; ++k) {
    long long e = -2LL * counts[static_cast<std::size_t>(k)] +
                  counts[static_cast<std::size_t>(mod_n(k + 1, n))] +
                  counts[static_cast<std::size_t>(mod_n(k - 1, n))];
    if (e == 0) continue;
    Series rot = rotate_vars(vacuum_vertex(n, D, weight), n, k);
    out *= series_pow(rot, e);
  }
  out.tighten_floors();
  return out;
}

/// Per-variable signs (-1)^{s_k(lambda3)} with s_k = |l3|_{k-1} + |l3|_{k+1}.
inline std::vector<int> signed_vertex_vars(const Partition& lam3, int n) {
  auto counts = colored_counts(lam3, n);
  std::vector<int> out(static_cast<std::size_t>(n), 1);
  for (int k = 0; k < n; ++k) {
    int s = counts[static_cast<std::size_t>(mod_n(k - 1, n))] +
            counts[static_cast<std::size_t>(mod_n(k + 1, n))];
    out[static_cast<std::size_t>(k)] = s % 2 ? -1 : 1;
  }
  return out;
}

/// Closed-form Z_n orbifold vertex
///   V^n_{lmn} = V^n_000 q^{-A_l} bar(q^{-A_{m'}}) H_n O_n
///               sum_eta q_0^{-|eta|} bar(s_{l'/eta}(qfrak_{.-n})) s_{m/eta}(qfrak_{.-n'}),
/// exact for weighted q-degree <= D.
inline Series zn_vertex(const Partition& lam, const Partition& mu, const Partition& nu, int n,
                        long long D, int weight = 1) {
  auto reg = vertex_registry(n, weight);
  Partition lam_c = lam.conjugate(), mu_c = mu.conjugate(), nu_c = nu.conjugate();

  // prefactor monomial q^{-A_lam} * bar(q^{-A_{mu'}})
  auto a_l = a_factor(lam, n);
  auto a_m = a_factor(mu_c, n);
  Mono pref = unit_mono(*reg);
  for (int k = 0; k < n; ++k) {
    pref[static_cast<std::size_t>(k)] -= static_cast<int>(a_l[static_cast<std::size_t>(k)]);
    pref[static_cast<std::size_t>(mod_n(-k, n))] -= static_cast<int>(a_m[static_cast<std::size_t>(k)]);
  }
  long long shift = -q_degree(*reg, pref);

  for (long long pad = shift;; pad = 2 * pad + 8) {
    long long W = D + pad;
    Series body = vacuum_vertex(n, W, weight) * h_factor(nu, n, W, weight) *
                  o_factor(nu, n, W, weight);
    Specialization spec_l{n, nu, true, reg, {}};
    Specialization spec_m{n, nu_c, false, reg, {}};
    Series esum = Series::zero(reg, W, 0);
    for (const auto& eta : subpartitions(lam_c)) {
      if (!mu.contains(eta)) continue;
      Series sl = skew_schur(lam_c, eta, spec_l, W, 0);
      if (sl.is_zero()) continue;
      Series sm = skew_schur(mu, eta, spec_m, W, 0);
      if (sm.is_zero()) continue;
      Series term = sl * sm;
      esum += term.mono_mul(var_mono(*reg, 0, -eta.size()), 1);
    }
    esum.tighten_floors();
    Series out = (body * esum).mono_mul(pref, 1);
    out.tighten_floors();
    if (out.q_window() >= D || pad > 64 * (D + 8)) {
      out.shrink_windows(D, 0);
      return out;
    }
  }
}

/// Z_n vertex with the biggest leg rotated into the third slot first; valid
/// for n = 1 only (the colored vertex is not cyclically symmetric).
inline Series vertex_n1_rotated(const Partition& lam, const Partition& mu, const Partition& nu,
                                long long D, int weight = 1) {
  const Partition* legs[3] = {&lam, &mu, &nu};
  int big = 0;
  for (int i = 1; i < 3; ++i)
    if (legs[i]->size() > legs[big]->size()) big = i;
  if (big == 0) return zn_vertex(mu, nu, lam, 1, D, weight);
  if (big == 1) return zn_vertex(nu, lam, mu, 1, D, weight);
  return zn_vertex(lam, mu, nu, 1, D, weight);
}

}  // namespace orbivertex
