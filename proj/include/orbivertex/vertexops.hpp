#pragma once

#include <map>

#include "orbivertex/partition.hpp"
#include "orbivertex/schur.hpp"
#include "orbivertex/series.hpp"
#include "orbivertex/znvertex.hpp"

namespace orbivertex {

/// Element of the free series module on the partition basis.
struct StateVector {
  std::map<Partition, Series> coeffs;

  void add(const Partition& p, const Series& s) {
    if (s.is_zero()) return;
    auto it = coeffs.find(p);
    if (it == coeffs.end())
      coeffs.emplace(p, s);
    else
      it->second += s;
  }
};

/// Gamma_{+1}(x) lambda = sum_{mu prec lambda} x^{|lambda|-|mu|} mu (shrinks);
/// Gamma_{-1}(x) lambda = sum_{mu succ lambda} x^{|mu|-|lambda|} mu (grows, up
/// to grow_cap extra boxes per state). The monomial may carry a coefficient.
inline StateVector gamma_apply(int sigma, const Mono& x, const Rat& xc, const StateVector& v,
                               int grow_cap = 1 << 20) {
  if (sigma != 1 && sigma != -1) throw std::invalid_argument("gamma_apply: sigma must be +-1");
  StateVector out;
  for (const auto& [gamma, series] : v.coeffs) {
    const auto& reg = *series.registry();
    auto weighted = [&](const Partition& mu, int d) {
      Mono w = unit_mono(reg);
      Rat c = 1;
      for (int r = 0; r < d; ++r) {
        w = mono_add(w, x);
        c *= xc;
      }
      out.add(mu, series.mono_mul(w, c));
    };
    if (sigma == 1) {
      for (const auto& mu : interlacing_below(gamma)) weighted(mu, gamma.size() - mu.size());
    } else {
      for (const auto& mu : interlacing_above(gamma, gamma.size() + grow_cap))
        weighted(mu, mu.size() - gamma.size());
    }
  }
  return out;
}

inline StateVector q_apply(int color, const StateVector& v) {
  StateVector out;
  for (const auto& [p, series] : v.coeffs) {
    const auto& reg = *series.registry();
    out.add(p, series.mono_mul(var_mono(reg, color, p.size()), 1));
  }
  return out;
}

namespace detail {

/// Lower bound on what a partial transfer-matrix state must still pay over
/// the remaining operator positions s < t. Removing a box at position s
/// contributes -s*w; adding one contributes +s*w. A box added and later
/// removed within the remaining range nets >= 0 (its removal sits strictly
/// below its addition), so a completion is bounded below by choosing how many
/// rc of the current boxes get removed (each at best -br*w) and adding the
/// |mu| - size + rc replacement survivors (each at best ca*w). The bound is
/// linear in rc, so the endpoints rc = (size-|mu|)+ and rc = size suffice.
struct RemainingBounds {
  long long lo = 0;              // smallest position in range
  const EdgeSequence* seq = nullptr;

  // largest removal position (+1 values of the edge sequence) strictly below t
  long long best_removal(long long t) const {
    for (long long s = t - 1; s >= lo; --s)
      if (seq->value(s) == 1) return s;
    return lo - 1;  // none left
  }
  // smallest addition position strictly below t
  long long cheapest_addition(long long t) const {
    for (long long s = lo; s < t; ++s)
      if (seq->value(s) == -1) return s;
    return t;  // none left
  }
};

enum class Viability { kDead, kViable, kOverWindow };

inline Viability state_viability(long long F, int size, int mu_size, long long t,
                                 const RemainingBounds& rb, int weight, long long W) {
  long long br = rb.best_removal(t);
  long long ca = rb.cheapest_addition(t);
  bool have_removal = br >= rb.lo;
  bool have_addition = ca < t;
  long long rc_min = std::max(0, size - mu_size);
  long long best = 0;
  bool usable = false;
  for (long long rc : {rc_min, static_cast<long long>(size)}) {
    if (rc > 0 && !have_removal) continue;
    long long new_surv = mu_size - size + rc;
    if (new_surv > 0 && !have_addition) continue;
    long long bound = F + weight * (rc * (-br) + new_surv * ca);
    if (!usable || bound < best) best = bound;
    usable = true;
  }
  if (!usable) return Viability::kDead;
  return best <= W ? Viability::kViable : Viability::kOverWindow;
}

inline Series operator_vertex_once(const Partition& lam, const Partition& mu, const Partition& nu,
                                   int n, int N, long long W, int weight) {
  auto reg = vertex_registry(n, weight);
  EdgeSequence nu_c_seq(nu.conjugate(), 0);
  RemainingBounds rb{-static_cast<long long>(n) * N + 1, &nu_c_seq};
  StateVector state;
  state.add(lam.conjugate(), Series::constant(reg, 1, W, 0));
  // rightmost factor of the ordered product acts first: t descends
  for (long long t = static_cast<long long>(n) * N - 1; t >= rb.lo; --t) {
    int s = nu_c_seq.value(t);
    Mono x = qfrak(*reg, n, t);
    if (s == 1) x = mono_neg(x);  // Gamma_{+}(qfrak_t^{-1})
    if (s == 1) {
      state = gamma_apply(+1, x, 1, state);
    } else {
      // per-state growth cap from the viability bound; the per-box net of
      // growing here and removing below is t - best_removal >= 1, so the
      // bound is monotone and the cap finite
      StateVector next;
      for (const auto& [gamma, series] : state.coeffs) {
        long long F = series.q_floor();
        long long xdeg = q_degree(*reg, x);
        // smallest growth cap covering every still-viable size. The bound is
        // monotone in the growth where usable (each grown box nets at least
        // one weight unit against its future removal), but small growths can
        // be structurally dead while an exact larger growth is viable, so
        // dead sizes are skipped rather than treated as a stopping point.
        int g = 0;
        int hard = mu.size() + static_cast<int>((W - std::min(F, 0LL)) / std::max(1, weight)) + 8;
        for (int probe = 1; probe <= hard; ++probe) {
          auto v = state_viability(F + static_cast<long long>(probe) * xdeg,
                                   gamma.size() + probe, mu.size(), t, rb, weight, W);
          if (v == Viability::kViable) g = probe;
          if (v == Viability::kOverWindow) break;
        }
        StateVector single;
        single.add(gamma, series);
        StateVector grown = gamma_apply(-1, x, 1, single, g);
        for (const auto& [p, ser] : grown.coeffs) next.add(p, ser);
      }
      state = std::move(next);
    }
    // prune states that can no longer contribute within the window
    StateVector pruned;
    for (auto& [p, ser] : state.coeffs) {
      ser.tighten_floors();
      if (ser.is_zero()) continue;
      if (state_viability(ser.q_floor(), p.size(), mu.size(), t, rb, weight, W) ==
          detail::Viability::kViable)
        pruned.add(p, ser);
    }
    state = std::move(pruned);
  }
  auto it = state.coeffs.find(mu);
  Series body = it == state.coeffs.end() ? Series::zero(reg, W, 0) : it->second;
  // prefactor q^{-A_lam} bar(q^{-A_{mu'}}) q_0^{-|lam|}
  auto a_l = a_factor(lam, n);
  auto a_m = a_factor(mu.conjugate(), n);
  Mono pref = unit_mono(*reg);
  for (int k = 0; k < n; ++k) {
    pref[static_cast<std::size_t>(k)] -= static_cast<int>(a_l[static_cast<std::size_t>(k)]);
    pref[static_cast<std::size_t>(mod_n(-k, n))] -= static_cast<int>(a_m[static_cast<std::size_t>(k)]);
  }
  pref[0] -= lam.size();
  Series out = body.mono_mul(pref, 1);
  out.tighten_floors();
  return out;
}

}  // namespace detail

/// Vertex as a finite ordered product of interlacing transfer operators,
///   V^n = q^{-A_l} bar(q^{-A_{m'}}) q_0^{-|l|}
///         < mu | prod_t Gamma_{nu'(t)}(qfrak_t^{-nu'(t)}) | lam' >,
/// with the cutoff N raised until the coefficients inside the window agree
/// between consecutive values.
inline Series operator_vertex(const Partition& lam, const Partition& mu, const Partition& nu,
                              int n, int N, long long D, int weight = 1) {
  if (N < 1) throw std::invalid_argument("operator_vertex: N must be >= 1");
  long long shift = 0;
  {
    auto a_l = a_factor(lam, n);
    auto a_m = a_factor(mu.conjugate(), n);
    for (int k = 0; k < n; ++k) shift += a_l[static_cast<std::size_t>(k)] + a_m[static_cast<std::size_t>(k)];
    shift = weight * (shift + lam.size());
  }
  long long W = D + shift;
  Series cur;
  bool have = false;
  for (int rounds = 0;; ++rounds) {
    Series next = detail::operator_vertex_once(lam, mu, nu, n, N, W, weight);
    next.shrink_windows(D, 0);
    if (have && agree_on_shared_window(cur, next)) {
      next.tighten_floors();
      return next;
    }
    cur = std::move(next);
    have = true;
    ++N;
    if (rounds > 24) throw std::runtime_error("operator_vertex: failed to stabilize");
  }
}

/// (-1)^{|part|} prod over the colored hooks of part of prod_s q_s^{h^s}: the
/// scalar monomial relating the ordered operator product to its retrograde.
inline Series mon_factor(const Partition& part, int n, long long D, int weight = 1) {
  auto reg = vertex_registry(n, weight);
  Mono m = unit_mono(*reg);
  for (const auto& h : hooks_colored(part, n))
    for (int s = 0; s < n; ++s) m[static_cast<std::size_t>(s)] += h.color_count[static_cast<std::size_t>(s)];
  return Series::monomial(reg, m, part.size() % 2 ? Rat(-1) : Rat(1), D, 0);
}

}  // namespace orbivertex
