#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbivertex/rational.hpp"

namespace orbivertex {

enum class VarKind { Q, V };

struct VarInfo {
  std::string name;
  int weight = 1;  // positive; contributes to the q- or v-grading per kind
  VarKind kind = VarKind::Q;
};

/// Ordered list of graded variables shared by all series of one computation.
class VarRegistry {
public:
  int add(std::string name, int weight, VarKind kind) {
    if (weight < 1) throw std::invalid_argument("VarRegistry: weight must be >= 1");
    for (const auto& v : vars_)
      if (v.name == name) throw std::invalid_argument("VarRegistry: duplicate name " + name);
    vars_.push_back({std::move(name), weight, kind});
    return static_cast<int>(vars_.size()) - 1;
  }

  int size() const { return static_cast<int>(vars_.size()); }
  const VarInfo& var(int i) const { return vars_.at(static_cast<std::size_t>(i)); }

  int index_of(const std::string& name) const {
    for (int i = 0; i < size(); ++i)
      if (vars_[static_cast<std::size_t>(i)].name == name) return i;
    throw std::invalid_argument("VarRegistry: no variable named " + name);
  }

  bool has(const std::string& name) const {
    for (const auto& v : vars_)
      if (v.name == name) return true;
    return false;
  }

private:
  std::vector<VarInfo> vars_;
};

using RegistryPtr = std::shared_ptr<const VarRegistry>;

/// Exponent vector over a registry.
using Mono = std::vector<int>;

inline long long q_degree(const VarRegistry& reg, const Mono& m) {
  long long d = 0;
  for (int i = 0; i < reg.size(); ++i)
    if (reg.var(i).kind == VarKind::Q) d += static_cast<long long>(m[static_cast<std::size_t>(i)]) * reg.var(i).weight;
  return d;
}

inline long long v_degree(const VarRegistry& reg, const Mono& m) {
  long long d = 0;
  for (int i = 0; i < reg.size(); ++i)
    if (reg.var(i).kind == VarKind::V) d += static_cast<long long>(m[static_cast<std::size_t>(i)]) * reg.var(i).weight;
  return d;
}

/// Truncated multivariate Laurent series with exact rational coefficients.
///
/// Soundness contract: every monomial with q-degree <= q_window and v-degree
/// <= v_window has an exact coefficient (stored, or zero if absent), and the
/// untruncated series has no term with q-degree < q_floor or v-degree <
/// v_floor among monomials inside the v-window. Ring operations propagate
/// windows so the contract is preserved:
///   window(a*b) = min(window(a)+floor(b), window(b)+floor(a)).
class Series {
public:
  Series() = default;

  Series(RegistryPtr reg, long long q_window, long long v_window)
      : reg_(std::move(reg)), qwin_(q_window), vwin_(v_window) {}

  static Series zero(RegistryPtr reg, long long qw, long long vw) { return Series(std::move(reg), qw, vw); }

  static Series constant(RegistryPtr reg, const Rat& c, long long qw, long long vw) {
    Series s(std::move(reg), qw, vw);
    if (c != 0) s.terms_[Mono(static_cast<std::size_t>(s.reg_->size()), 0)] = c;
    return s;
  }

  static Series monomial(RegistryPtr reg, const Mono& m, const Rat& c, long long qw, long long vw) {
    Series s(std::move(reg), qw, vw);
    long long dq = q_degree(*s.reg_, m), dv = v_degree(*s.reg_, m);
    s.qfloor_ = std::min<long long>(0, dq);
    s.vfloor_ = std::min<long long>(0, dv);
    if (c != 0 && dq <= qw && dv <= vw) s.terms_[m] = c;
    return s;
  }

  const RegistryPtr& registry() const { return reg_; }
  long long q_window() const { return qwin_; }
  long long v_window() const { return vwin_; }
  long long q_floor() const { return qfloor_; }
  long long v_floor() const { return vfloor_; }
  const std::map<Mono, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void set_floors(long long qf, long long vf) {
    qfloor_ = qf;
    vfloor_ = vf;
  }

  /// Raise the floor promises to the minimum degrees actually stored. Sound
  /// because within the windows the series is exact, and true terms outside
  /// the windows have degrees above them.
  void tighten_floors() {
    if (terms_.empty()) {
      qfloor_ = std::max<long long>(qfloor_, 0);
      vfloor_ = std::max<long long>(vfloor_, 0);
      return;
    }
    long long qf = std::numeric_limits<long long>::max();
    long long vf = std::numeric_limits<long long>::max();
    for (const auto& [m, c] : terms_) {
      qf = std::min(qf, q_degree(*reg_, m));
      vf = std::min(vf, v_degree(*reg_, m));
    }
    qfloor_ = std::max(qfloor_, qf);
    vfloor_ = std::max(vfloor_, vf);
  }

  /// Narrow the exactness claim (never widens).
  void shrink_windows(long long qw, long long vw) {
    qwin_ = std::min(qwin_, qw);
    vwin_ = std::min(vwin_, vw);
    prune();
  }

  Rat coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Mono& m, const Rat& c) {
    if (c == 0) return;
    long long dq = q_degree(*reg_, m), dv = v_degree(*reg_, m);
    if (dq > qwin_ || dv > vwin_) return;
    qfloor_ = std::min(qfloor_, dq);
    vfloor_ = std::min(vfloor_, dv);
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend Series operator+(const Series& a, const Series& b) {
    check_same_registry(a, b);
    Series out(a.reg_, std::min(a.qwin_, b.qwin_), std::min(a.vwin_, b.vwin_));
    out.qfloor_ = std::min(a.qfloor_, b.qfloor_);
    out.vfloor_ = std::min(a.vfloor_, b.vfloor_);
    out.terms_ = a.terms_;
    for (const auto& [m, c] : b.terms_) {
      auto it = out.terms_.find(m);
      if (it == out.terms_.end())
        out.terms_[m] = c;
      else {
        it->second += c;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
    out.prune();
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) { return a + (b * Rat(-1)); }

  friend Series operator*(const Series& a, const Rat& c) {
    Series out = a;
    if (c == 0) {
      out.terms_.clear();
      return out;
    }
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
  }

  friend Series operator*(const Rat& c, const Series& a) { return a * c; }

  friend Series operator*(const Series& a, const Series& b) {
    check_same_registry(a, b);
    long long qw = std::min(sat_add(a.qwin_, b.qfloor_), sat_add(b.qwin_, a.qfloor_));
    long long vw = std::min(sat_add(a.vwin_, b.vfloor_), sat_add(b.vwin_, a.vfloor_));
    Series out(a.reg_, qw, vw);
    out.qfloor_ = sat_add(a.qfloor_, b.qfloor_);
    out.vfloor_ = sat_add(a.vfloor_, b.vfloor_);
    if (a.terms_.empty() || b.terms_.empty()) return out;
    const auto& small = a.terms_.size() <= b.terms_.size() ? a : b;
    const auto& big = a.terms_.size() <= b.terms_.size() ? b : a;
    int nv = a.reg_->size();
    // cache per-term degrees of the big factor
    std::vector<std::pair<const Mono*, std::pair<long long, long long>>> bt;
    bt.reserve(big.terms_.size());
    for (const auto& [m, c] : big.terms_)
      bt.push_back({&m, {q_degree(*a.reg_, m), v_degree(*a.reg_, m)}});
    Mono tmp(static_cast<std::size_t>(nv));
    for (const auto& [ma, ca] : small.terms_) {
      long long dqa = q_degree(*a.reg_, ma), dva = v_degree(*a.reg_, ma);
      for (const auto& [pmb, degb] : bt) {
        if (dqa + degb.first > qw || dva + degb.second > vw) continue;
        for (int i = 0; i < nv; ++i)
          tmp[static_cast<std::size_t>(i)] = ma[static_cast<std::size_t>(i)] + (*pmb)[static_cast<std::size_t>(i)];
        Rat prod = ca * big.terms_.at(*pmb);
        auto it = out.terms_.find(tmp);
        if (it == out.terms_.end())
          out.terms_[tmp] = prod;
        else {
          it->second += prod;
          if (it->second == 0) out.terms_.erase(it);
        }
      }
    }
    return out;
  }

  Series& operator+=(const Series& b) { return *this = *this + b; }
  Series& operator*=(const Series& b) { return *this = *this * b; }

  /// Multiply by a single (coefficient, monomial) pair; windows shift along.
  Series mono_mul(const Mono& m, const Rat& c) const {
    long long dq = q_degree(*reg_, m), dv = v_degree(*reg_, m);
    Series out(reg_, sat_add(qwin_, dq), sat_add(vwin_, dv));
    out.qfloor_ = sat_add(qfloor_, dq);
    out.vfloor_ = sat_add(vfloor_, dv);
    if (c == 0) return out;
    int nv = reg_->size();
    for (const auto& [mm, cc] : terms_) {
      Mono t(static_cast<std::size_t>(nv));
      for (int i = 0; i < nv; ++i)
        t[static_cast<std::size_t>(i)] = mm[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(i)];
      out.terms_[t] = cc * c;
    }
    return out;
  }

  bool operator==(const Series& b) const {
    return reg_ == b.reg_ && terms_ == b.terms_;
  }

  /// Coefficients agree on the shared guaranteed window.
  friend bool agree_on_shared_window(const Series& a, const Series& b) {
    check_same_registry(a, b);
    long long qw = std::min(a.qwin_, b.qwin_), vw = std::min(a.vwin_, b.vwin_);
    for (const auto& [m, c] : a.terms_) {
      if (q_degree(*a.reg_, m) > qw || v_degree(*a.reg_, m) > vw) continue;
      if (b.coeff(m) != c) return false;
    }
    for (const auto& [m, c] : b.terms_) {
      if (q_degree(*a.reg_, m) > qw || v_degree(*a.reg_, m) > vw) continue;
      if (a.coeff(m) != c) return false;
    }
    return true;
  }

  /// First differing monomial on the shared window, if any.
  friend std::optional<Mono> first_difference(const Series& a, const Series& b) {
    check_same_registry(a, b);
    long long qw = std::min(a.qwin_, b.qwin_), vw = std::min(a.vwin_, b.vwin_);
    std::map<Mono, Rat> all = a.terms_;
    for (const auto& [m, c] : b.terms_) all.try_emplace(m, Rat(0));
    for (const auto& [m, c] : all) {
      if (q_degree(*a.reg_, m) > qw || v_degree(*a.reg_, m) > vw) continue;
      if (a.coeff(m) != b.coeff(m)) return m;
    }
    return std::nullopt;
  }

  std::string to_string(std::size_t max_terms = 24) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    std::size_t k = 0;
    for (const auto& [m, c] : terms_) {
      if (k) os << " + ";
      if (++k > max_terms) {
        os << "...";
        break;
      }
      os << c.str();
      for (int i = 0; i < reg_->size(); ++i) {
        int e = m[static_cast<std::size_t>(i)];
        if (e == 0) continue;
        os << "*" << reg_->var(i).name;
        if (e != 1) os << "^" << e;
      }
    }
    os << "  [qwin " << qwin_ << ", vwin " << vwin_ << "]";
    return os.str();
  }

  static constexpr long long WIN_MAX = std::numeric_limits<long long>::max() / 4;

private:
  static void check_same_registry(const Series& a, const Series& b) {
    if (a.reg_ != b.reg_) throw std::invalid_argument("Series: registry mismatch");
  }

  static long long sat_add(long long a, long long b) {
    if (a >= WIN_MAX || b >= WIN_MAX) return WIN_MAX;
    return a + b;
  }

  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (q_degree(*reg_, it->first) > qwin_ || v_degree(*reg_, it->first) > vwin_)
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  RegistryPtr reg_;
  std::map<Mono, Rat> terms_;
  long long qwin_ = 0, vwin_ = 0;
  long long qfloor_ = 0, vfloor_ = 0;
};

inline Mono unit_mono(const VarRegistry& reg) { return Mono(static_cast<std::size_t>(reg.size()), 0); }

inline Mono var_mono(const VarRegistry& reg, int var, int e = 1) {
  Mono m = unit_mono(reg);
  m[static_cast<std::size_t>(var)] = e;
  return m;
}

inline Mono mono_add(const Mono& a, const Mono& b) {
  Mono out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

inline Mono mono_neg(const Mono& a) {
  Mono out = a;
  for (auto& e : out) e = -e;
  return out;
}

/// (1 - c*x^m)^e, truncated to the given windows; exact everywhere inside.
/// Requires q-degree(m) > 0, or q-degree(m) == 0 with v-degree(m) > 0.
inline Series geom_expand(const RegistryPtr& reg, const Mono& m, const Rat& c, long long e,
                          long long qw, long long vw) {
  long long dq = q_degree(*reg, m), dv = v_degree(*reg, m);
  if (dq < 0 || (dq == 0 && dv <= 0))
    throw std::domain_error("geom_expand: monomial must have positive weighted degree");
  Series out = Series::constant(reg, 1, qw, vw);
  if (e >= 0) {
    // finite binomial sum
    Rat binom = 1;
    Mono cur = unit_mono(*reg);
    Rat cpow = 1;
    for (long long k = 1; k <= e; ++k) {
      binom = binom * Rat(e - k + 1) / Rat(k);
      cur = mono_add(cur, m);
      cpow *= -c;
      long long kdq = q_degree(*reg, cur), kdv = v_degree(*reg, cur);
      if (kdq > qw || kdv > vw) break;
      out.add_term(cur, binom * cpow);
    }
    return out;
  }
  long long a = -e;
  // (1 - cx)^{-a} = sum_k C(k+a-1, a-1) c^k x^k
  Rat binom = 1;
  Mono cur = unit_mono(*reg);
  Rat cpow = 1;
  for (long long k = 1;; ++k) {
    binom = binom * Rat(k + a - 1) / Rat(k);
    cur = mono_add(cur, m);
    cpow *= c;
    long long kdq = q_degree(*reg, cur), kdv = v_degree(*reg, cur);
    if (kdq > qw || kdv > vw) break;
    out.add_term(cur, binom * cpow);
  }
  return out;
}

/// MacMahon factor M(v, q) = prod_{m>=1} (1 - v q^m)^{-m}, with sign_v = -1
/// computing M(v, -q) (the sign rides on q's exponent parity).
/// v may be the empty monomial (v = 1).
inline Series macmahon(const RegistryPtr& reg, const Mono& v, const Mono& q, int sign_q,
                       long long qw, long long vw) {
  long long dq_q = q_degree(*reg, q);
  long long dq_v = q_degree(*reg, v);
  if (dq_q <= 0) throw std::domain_error("macmahon: q must have positive weighted degree");
  if (dq_v + dq_q <= 0) throw std::domain_error("macmahon: v*q must have positive weighted degree");
  if (sign_q != 1 && sign_q != -1) throw std::invalid_argument("macmahon: sign must be +-1");
  Series out = Series::constant(reg, 1, qw, vw);
  Mono vq = v;
  for (long long m = 1;; ++m) {
    vq = mono_add(vq, q);
    if (q_degree(*reg, vq) > qw) break;
    if (v_degree(*reg, vq) > vw) break;
    Rat c = (sign_q == -1 && (m % 2 == 1)) ? Rat(-1) : Rat(1);
    out *= geom_expand(reg, vq, c, -m, qw, vw);
  }
  return out;
}

/// Multiplicative inverse; requires the unique minimal-degree term to be a
/// single monomial.
inline Series invert(const Series& s) {
  if (s.is_zero()) throw std::domain_error("invert: zero series");
  const auto& reg = *s.registry();
  // find the unique term minimizing (qdeg, vdeg, lex)
  const Mono* lead = nullptr;
  long long best_q = 0, best_v = 0;
  for (const auto& [m, c] : s.terms()) {
    long long dq = q_degree(reg, m), dv = v_degree(reg, m);
    if (!lead || dq < best_q || (dq == best_q && (dv < best_v || (dv == best_v && m < *lead)))) {
      lead = &m;
      best_q = dq;
      best_v = dv;
    }
  }
  for (const auto& [m, c] : s.terms()) {
    if (&m == lead) continue;
    long long dq = q_degree(reg, m), dv = v_degree(reg, m);
    if (dq == best_q && dv == best_v)
      throw std::domain_error("invert: leading structure is not a single monomial");
    if (dq < best_q || (dq == best_q && dv < best_v))
      throw std::domain_error("invert: internal ordering error");
  }
  Rat c0 = s.terms().at(*lead);
  Mono lead_copy = *lead;
  // s = c0 * x^lead * (1 + t), with floor(t) > 0 in the combined grading
  Series t = s.mono_mul(mono_neg(lead_copy), Rat(1) / c0) -
             Series::constant(s.registry(), 1, Series::WIN_MAX, Series::WIN_MAX);
  t.tighten_floors();
  if (t.q_floor() < 0 || (t.q_floor() == 0 && t.v_floor() <= 0 && !t.is_zero()))
    throw std::domain_error("invert: residual series has nonpositive degree terms");
  Series acc = Series::constant(s.registry(), 1, t.q_window(), t.v_window());
  Series out = acc;
  Series pw = acc;
  for (int k = 1;; ++k) {
    pw = pw * t;
    pw.shrink_windows(t.q_window(), t.v_window());
    if (pw.is_zero()) break;
    out = out + (k % 2 ? pw * Rat(-1) : pw);
    if (k > 10000) throw std::runtime_error("invert: geometric sum failed to terminate");
  }
  return out.mono_mul(mono_neg(lead_copy), Rat(1) / c0);
}

/// Integer power via invert and repeated multiplication.
inline Series series_pow(const Series& s, long long e) {
  if (e == 0) return Series::constant(s.registry(), 1, s.q_window(), s.v_window());
  Series base = e > 0 ? s : invert(s);
  long long n = e > 0 ? e : -e;
  Series out = base;
  for (long long k = 1; k < n; ++k) out = out * base;
  return out;
}

struct SubstTarget {
  Mono image;      // monomial in the target registry
  Rat coeff = 1;   // must be a unit for window bookkeeping; usually +-1
};

/// Substitution map: source variable index -> target. Unmapped variables must
/// have a same-named variable in the target registry.
using SubstMap = std::map<int, SubstTarget>;

namespace detail {
inline SubstTarget default_target(const VarRegistry& src, const VarRegistry& dst, int i) {
  SubstTarget t;
  t.image = var_mono(dst, dst.index_of(src.var(i).name));
  return t;
}
}  // namespace detail

/// Degree-preserving substitution: every variable's image must have exactly
/// the source q- and v-weights. Windows and floors carry over unchanged.
inline Series substitute(const Series& s, const RegistryPtr& target, const SubstMap& map) {
  const auto& src = *s.registry();
  const auto& dst = *target;
  std::vector<SubstTarget> tgt;
  tgt.reserve(static_cast<std::size_t>(src.size()));
  for (int i = 0; i < src.size(); ++i) {
    auto it = map.find(i);
    SubstTarget t = it != map.end() ? it->second : detail::default_target(src, dst, i);
    long long dq = q_degree(dst, t.image), dv = v_degree(dst, t.image);
    long long wq = src.var(i).kind == VarKind::Q ? src.var(i).weight : 0;
    long long wv = src.var(i).kind == VarKind::V ? src.var(i).weight : 0;
    if (dq != wq || dv != wv)
      throw std::domain_error("substitute: map is not degree-preserving on variable " +
                              src.var(i).name);
    if (t.coeff == 0) throw std::domain_error("substitute: zero coefficient on variable " + src.var(i).name);
    tgt.push_back(std::move(t));
  }
  Series out(target, s.q_window(), s.v_window());
  out.set_floors(s.q_floor(), s.v_floor());
  for (const auto& [m, c] : s.terms()) {
    Mono im = unit_mono(dst);
    Rat coeff = c;
    for (int i = 0; i < src.size(); ++i) {
      int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      for (std::size_t j = 0; j < im.size(); ++j) im[j] += e * tgt[static_cast<std::size_t>(i)].image[j];
      // unit coefficients: integer powers stay exact
      if (tgt[static_cast<std::size_t>(i)].coeff != 1) {
        Rat cp = 1;
        Rat base = tgt[static_cast<std::size_t>(i)].coeff;
        if (e > 0)
          for (int k = 0; k < e; ++k) cp *= base;
        else
          for (int k = 0; k < -e; ++k) cp /= base;
        coeff *= cp;
      }
    }
    out.add_term(im, coeff);
  }
  return out;
}

/// Substitution that may mix the q- and v-gradings. Each variable's image must
/// not decrease the combined degree (qdeg+vdeg); variables whose image is not
/// exactly degree-preserving must be v-type and occur with nonnegative
/// exponents only (checked on the stored terms; all series built by this
/// library have nonnegative v-exponents throughout). The result is exact on
/// the triangle {qdeg + vdeg <= G} with G = min(qwin + vfloor, vwin + qfloor);
/// the caller splits G into the reported output windows via out_v_window.
inline Series substitute_mixed(const Series& s, const RegistryPtr& target, const SubstMap& map,
                               long long out_v_window) {
  const auto& src = *s.registry();
  const auto& dst = *target;
  std::vector<SubstTarget> tgt;
  std::vector<bool> preserving(static_cast<std::size_t>(src.size()), true);
  for (int i = 0; i < src.size(); ++i) {
    auto it = map.find(i);
    SubstTarget t = it != map.end() ? it->second : detail::default_target(src, dst, i);
    long long dq = q_degree(dst, t.image), dv = v_degree(dst, t.image);
    long long wq = src.var(i).kind == VarKind::Q ? src.var(i).weight : 0;
    long long wv = src.var(i).kind == VarKind::V ? src.var(i).weight : 0;
    if (dq + dv < wq + wv)
      throw std::domain_error("substitute_mixed: combined degree decreases on variable " +
                              src.var(i).name);
    if (dq != wq || dv != wv) {
      preserving[static_cast<std::size_t>(i)] = false;
      if (src.var(i).kind != VarKind::V)
        throw std::domain_error("substitute_mixed: only v-type variables may change grading (" +
                                src.var(i).name + ")");
    }
    tgt.push_back(std::move(t));
  }
  for (const auto& [m, c] : s.terms())
    for (int i = 0; i < src.size(); ++i)
      if (!preserving[static_cast<std::size_t>(i)] && m[static_cast<std::size_t>(i)] < 0)
        throw std::domain_error("substitute_mixed: negative exponent on remapped variable");
  long long G = std::min(s.q_window() + s.v_floor(), s.v_window() + s.q_floor());
  long long out_qw = G - out_v_window;
  Series out(target, out_qw, out_v_window);
  out.set_floors(std::min<long long>(0, s.q_floor()), 0);
  for (const auto& [m, c] : s.terms()) {
    Mono im = unit_mono(dst);
    Rat coeff = c;
    for (int i = 0; i < src.size(); ++i) {
      int e = m[static_cast<std::size_t>(i)];
      if (e == 0) continue;
      for (std::size_t j = 0; j < im.size(); ++j) im[j] += e * tgt[static_cast<std::size_t>(i)].image[j];
      if (tgt[static_cast<std::size_t>(i)].coeff != 1) {
        Rat cp = 1;
        Rat base = tgt[static_cast<std::size_t>(i)].coeff;
        if (e > 0)
          for (int k = 0; k < e; ++k) cp *= base;
        else
          for (int k = 0; k < -e; ++k) cp /= base;
        coeff *= cp;
      }
    }
    out.add_term(im, coeff);
  }
  return out;
}

/// Exchange of variables q_k <-> q_{-k mod n} over a Z_n-indexed family given
/// by registry indices vars[0..n-1].
inline Series bar(const Series& s, const std::vector<int>& vars) {
  const auto& reg = *s.registry();
  int n = static_cast<int>(vars.size());
  SubstMap map;
  for (int k = 0; k < n; ++k) {
    int src = vars[static_cast<std::size_t>(k)];
    int dst = vars[static_cast<std::size_t>((n - k) % n)];
    if (reg.var(src).weight != reg.var(dst).weight || reg.var(src).kind != reg.var(dst).kind)
      throw std::domain_error("bar: variables must share weight and kind");
    SubstTarget t;
    t.image = var_mono(reg, dst);
    map[src] = t;
  }
  return substitute(s, s.registry(), map);
}

}  // namespace orbivertex
