#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "orbivertex/rational.hpp"

namespace orbivertex {

/// An integer partition, stored as weakly decreasing parts with trailing
/// zeros dropped. Cells are pairs (i,j) with (i,j) in the diagram iff
/// i < parts[j]; the first coordinate runs along a row.
class Partition {
public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (parts_[k] < 0 || (k + 1 < parts_.size() && parts_[k] < parts_[k + 1]))
        throw std::invalid_argument("Partition: parts must be weakly decreasing and nonnegative");
    }
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  int rows() const { return static_cast<int>(parts_.size()); }

  /// Part j, with zero parts beyond the stored length.
  int part(int j) const {
    return (j >= 0 && j < rows()) ? parts_[static_cast<std::size_t>(j)] : 0;
  }

  int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  bool contains_cell(int i, int j) const { return i >= 0 && j >= 0 && i < part(j); }

  /// Cells (i,j) in row-major order of j, then i.
  std::vector<std::pair<int, int>> cells() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (int j = 0; j < rows(); ++j)
      for (int i = 0; i < part(j); ++i) out.emplace_back(i, j);
    return out;
  }

  Partition conjugate() const {
    if (parts_.empty()) return {};
    std::vector<int> out(static_cast<std::size_t>(parts_[0]), 0);
    for (int j = 0; j < rows(); ++j)
      for (int i = 0; i < part(j); ++i) ++out[static_cast<std::size_t>(i)];
    return Partition(std::move(out));
  }

  /// True iff mu's diagram is contained in this one.
  bool contains(const Partition& mu) const {
    for (int j = 0; j < mu.rows(); ++j)
      if (mu.part(j) > part(j)) return false;
    return true;
  }

  auto operator<=>(const Partition&) const = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(parts_[k]);
    }
    return s + ")";
  }

private:
  std::vector<int> parts_;
};

inline int mod_n(long long k, int n) {
  long long r = k % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

/// |lambda|_{k,n}: number of cells (i,j) with i-j = k mod n.
inline std::vector<int> colored_counts(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("colored_counts: n must be positive");
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : lam.cells()) ++out[static_cast<std::size_t>(mod_n(i - j, n))];
  return out;
}

/// A_lambda(k,n) = sum over cells of floor((i+k)/n), for k = 0..n-1.
inline std::vector<long long> a_factor(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("a_factor: n must be positive");
  std::vector<long long> out(static_cast<std::size_t>(n), 0);
  for (auto [i, j] : lam.cells()) {
    (void)j;
    for (int k = 0; k < n; ++k) out[static_cast<std::size_t>(k)] += (i + k) / n;
  }
  return out;
}

/// C^lambda_{mt,mtp}[k,n] = sum over cells of color k of (-mt*i - mtp*j + 1).
inline std::vector<Rat> c_factor(const Partition& lam, const Rat& mt, const Rat& mtp, int n) {
  if (n < 1) throw std::invalid_argument("c_factor: n must be positive");
  std::vector<Rat> out(static_cast<std::size_t>(n), Rat(0));
  for (auto [i, j] : lam.cells())
    out[static_cast<std::size_t>(mod_n(i - j, n))] += Rat(1) - mt * i - mtp * j;
  return out;
}

inline bool multi_regular(const Partition& lam, int n) {
  auto c = colored_counts(lam, n);
  for (int k = 1; k < n; ++k)
    if (c[static_cast<std::size_t>(k)] != c[0]) return false;
  return true;
}

/// Edge sequence of a partition shifted by an integer charge, stored in the
/// canonical (partition, charge) form. value(t) = +1 for t << 0, -1 for t >> 0,
/// and at charge 0 the +1 positions are exactly S(lambda) = {lambda_j - j - 1}.
class EdgeSequence {
public:
  EdgeSequence() = default;
  EdgeSequence(Partition part, int charge) : part_(std::move(part)), charge_(charge) {}

  const Partition& partition() const { return part_; }
  int charge() const { return charge_; }

  int value(long long t) const {
    long long u = t - charge_;
    // +1 iff u in S(part): u = part_j - j - 1 for some j >= 0.
    for (int j = 0; j < part_.rows(); ++j)
      if (u == part_.part(j) - j - 1) return +1;
    // beyond stored rows, S contains -j-1 for j >= rows
    if (u <= -static_cast<long long>(part_.rows()) - 1) return +1;
    return -1;
  }

  /// Positions where the value differs from the charge-0 vacuum (+1 iff t<0).
  std::set<long long> deviations() const {
    std::set<long long> out;
    long long lo = std::min<long long>(-part_.rows() - 1, charge_ - part_.rows() - 1) - 1;
    long long hi = std::max<long long>(part_.part(0) + 1, charge_ + part_.part(0) + 1) + 1;
    for (long long t = lo; t <= hi; ++t) {
      int vac = t < 0 ? +1 : -1;
      if (value(t) != vac) out.insert(t);
    }
    return out;
  }

  auto operator<=>(const EdgeSequence&) const = default;

private:
  Partition part_;
  int charge_ = 0;
};

inline EdgeSequence to_edge_sequence(const Partition& lam, int charge) {
  return EdgeSequence(lam, charge);
}

inline std::pair<Partition, int> from_edge_sequence(const EdgeSequence& e) {
  return {e.partition(), e.charge()};
}

/// Rebuild (partition, charge) from raw values of an edge sequence, given a
/// range [lo, hi] outside of which the sequence is promised to match a shifted
/// vacuum. Used to slice n-quotients.
inline EdgeSequence edge_sequence_from_values(const std::function<int(long long)>& val,
                                              long long lo, long long hi) {
  // charge = #(+1 at t >= 0) - #(-1 at t < 0)
  long long charge = 0;
  for (long long t = 0; t <= hi; ++t)
    if (val(t) == +1) ++charge;
  for (long long t = lo; t < 0; ++t)
    if (val(t) == -1) --charge;
  // parts of the charge-0 partition: positions u = t - charge with value +1,
  // listed in decreasing order, give lambda_j = u_j + j + 1.
  std::vector<long long> plus;
  for (long long t = hi; t >= lo; --t)
    if (val(t) == +1) plus.push_back(t - charge);
  std::vector<int> parts;
  long long j = 0;
  for (long long u : plus) {
    long long pj = u + j + 1;
    if (pj < 0) throw std::logic_error("edge_sequence_from_values: malformed sequence");
    parts.push_back(static_cast<int>(pj));
    ++j;
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  return EdgeSequence(Partition(parts), static_cast<int>(charge));
}

struct NQuotientCore {
  int n = 1;
  std::vector<Partition> quotients;
  std::vector<int> charges;
};

inline NQuotientCore n_quotient_core(const Partition& lam, int n) {
  if (n < 1) throw std::invalid_argument("n_quotient_core: n must be positive");
  EdgeSequence seq(lam, 0);
  NQuotientCore out;
  out.n = n;
  long long lo = -(lam.rows() + n + 2), hi = lam.part(0) + n + 2;
  for (int i = 0; i < n; ++i) {
    auto sub = edge_sequence_from_values([&](long long t) { return seq.value(n * t + i); },
                                         lo, hi);
    out.quotients.push_back(sub.partition());
    out.charges.push_back(sub.charge());
  }
  return out;
}

inline Partition from_core_quotient(const NQuotientCore& ncq) {
  int n = ncq.n;
  if (static_cast<int>(ncq.quotients.size()) != n || static_cast<int>(ncq.charges.size()) != n)
    throw std::invalid_argument("from_core_quotient: need n quotients and n charges");
  long long csum = 0;
  for (int c : ncq.charges) csum += c;
  if (csum != 0)
    throw std::invalid_argument("from_core_quotient: charges must sum to zero");
  std::vector<EdgeSequence> subs;
  subs.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) subs.emplace_back(ncq.quotients[static_cast<std::size_t>(i)],
                                                ncq.charges[static_cast<std::size_t>(i)]);
  long long bound = 2;
  for (int i = 0; i < n; ++i) {
    const auto& q = ncq.quotients[static_cast<std::size_t>(i)];
    bound = std::max<long long>(bound, q.part(0) + q.rows() + std::abs(ncq.charges[static_cast<std::size_t>(i)]) + 2);
  }
  auto merged = edge_sequence_from_values(
      [&](long long t) {
        int i = mod_n(t, n);
        long long s = (t - i) / n;
        return subs[static_cast<std::size_t>(i)].value(s);
      },
      -n * (bound + 1), n * (bound + 1));
  if (merged.charge() != 0) throw std::logic_error("from_core_quotient: merged charge nonzero");
  return merged.partition();
}

/// Adds the ribbon with endpoints t1 < t2 on the charge-0 edge sequence;
/// requires value(t1) = +1 and value(t2) = -1.
inline Partition add_ribbon(const Partition& lam, long long t1, long long t2) {
  EdgeSequence seq(lam, 0);
  if (!(t1 < t2)) throw std::invalid_argument("add_ribbon: need t1 < t2");
  if (seq.value(t1) != +1 || seq.value(t2) != -1)
    throw std::invalid_argument("add_ribbon: need value(t1)=+1 and value(t2)=-1");
  long long lo = std::min<long long>(t1, -(lam.rows() + 2)) - 1;
  long long hi = std::max<long long>(t2, lam.part(0) + 2) + 1;
  auto out = edge_sequence_from_values(
      [&](long long t) {
        if (t == t1) return -1;
        if (t == t2) return +1;
        return seq.value(t);
      },
      lo, hi);
  if (out.charge() != 0) throw std::logic_error("add_ribbon: charge changed");
  return out.partition();
}

/// Hook of the cell (a,b) of pi: arm cells (x,b), x >= a, and leg cells (a,y),
/// y >= b. Returns, per cell of nu_p, the count of hook boxes in each color
/// class i-j mod n.
struct ColoredHook {
  std::pair<int, int> cell;      // (i,j) coordinates of the corner cell
  std::vector<int> color_count;  // length n, sums to the hook length
};

inline std::vector<ColoredHook> hooks_colored(const Partition& nu_p, int n) {
  if (n < 1) throw std::invalid_argument("hooks_colored: n must be positive");
  std::vector<ColoredHook> out;
  Partition conj = nu_p.conjugate();
  for (auto [a, b] : nu_p.cells()) {
    ColoredHook h;
    h.cell = {a, b};
    h.color_count.assign(static_cast<std::size_t>(n), 0);
    for (int x = a; x < nu_p.part(b); ++x) ++h.color_count[static_cast<std::size_t>(mod_n(x - b, n))];
    for (int y = b + 1; y < conj.part(a); ++y) ++h.color_count[static_cast<std::size_t>(mod_n(a - y, n))];
    out.push_back(std::move(h));
  }
  return out;
}

inline int hook_length(const Partition& lam, int a, int b) {
  Partition conj = lam.conjugate();
  return (lam.part(b) - a) + (conj.part(a) - b) - 1;
}

// ---- enumeration helpers ----

/// All partitions of exactly m, in decreasing lexicographic order.
inline std::vector<Partition> partitions_of(int m) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(rem, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rem - p, p);
      cur.pop_back();
    }
  };
  rec(m, m);
  return out;
}

/// All partitions of size at most m.
inline std::vector<Partition> partitions_up_to(int m) {
  std::vector<Partition> out;
  for (int k = 0; k <= m; ++k) {
    auto v = partitions_of(k);
    out.insert(out.end(), v.begin(), v.end());
  }
  return out;
}

/// All sub-diagrams eta of lam.
inline std::vector<Partition> subpartitions(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int prev) {
    out.emplace_back(cur);
    if (row >= lam.rows()) return;
    // extend by a nonzero part at this row; skipping a row ends the shape
    for (int p = std::min(prev, lam.part(row)); p >= 1; --p) {
      cur.push_back(p);
      rec(row + 1, p);
      cur.pop_back();
    }
  };
  rec(0, lam.part(0) == 0 ? 0 : lam.part(0));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// mu interlaces below lam (lam >= mu >= lam shifted): lam/mu is a horizontal strip.
inline bool interlaces(const Partition& lam, const Partition& mu) {
  int r = std::max(lam.rows(), mu.rows());
  for (int j = 0; j < r; ++j) {
    if (!(lam.part(j) >= mu.part(j))) return false;
    if (!(mu.part(j) >= lam.part(j + 1))) return false;
  }
  return true;
}

/// All mu with mu interlacing below lam (mu \prec lam).
inline std::vector<Partition> interlacing_below(const Partition& lam) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int row) {
    if (row >= lam.rows()) {
      out.emplace_back(cur);
      return;
    }
    int lo = lam.part(row + 1), hi = lam.part(row);
    for (int p = hi; p >= lo; --p) {
      if (p == 0) {
        out.emplace_back(cur);
        return;
      }
      cur.push_back(p);
      rec(row + 1);
      cur.pop_back();
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// All mu with mu interlacing above lam (mu \succ lam) and |mu| <= size_cap.
/// Row j of mu sits in [lam_j, lam_{j-1}] (unbounded above for j = 0), and mu
/// has at most one more row than lam.
inline std::vector<Partition> interlacing_above(const Partition& lam, int size_cap) {
  std::vector<Partition> out;
  std::vector<int> cur;
  int base = lam.size();
  if (size_cap < base) return out;
  std::function<void(int, int)> rec = [&](int row, int used) {
    if (row > lam.rows()) {
      out.emplace_back(cur);
      return;
    }
    int lo = lam.part(row);
    int hi = row == 0 ? size_cap - base + lam.part(0) : lam.part(row - 1);
    if (lo == 0) out.emplace_back(cur);  // mu may stop here
    for (int p = std::max(lo, 1); p <= hi; ++p) {
      int extra = p - lo;
      if (used + extra > size_cap - base) break;
      cur.push_back(p);
      rec(row + 1, used + extra);
      cur.pop_back();
    }
  };
  rec(0, 0);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace orbivertex
