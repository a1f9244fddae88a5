#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace orbivertex {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

inline Int to_integer(const Rat& r) {
  if (!is_integer(r)) throw std::domain_error("expected an integer, got " + r.str());
  return numerator(r);
}

inline long long to_ll(const Rat& r) {
  return static_cast<long long>(to_integer(r));
}

/// Parity of an exact integer-valued rational.
inline int parity(const Rat& r) {
  Int n = to_integer(r);
  return static_cast<int>(n % 2 != 0);
}

}  // namespace orbivertex
