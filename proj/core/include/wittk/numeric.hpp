#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "wittk/error.hpp"

namespace wittk {

/// Exact arbitrary-precision integer used for all matrix and Witt coordinate work.
using Int = boost::multiprecision::cpp_int;
/// Exact rational, always kept in lowest terms by the backend.
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int rat_den(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return rat_den(q) == 1; }

/// Deterministic trial-division primality test; fine for the sizes used here.
inline bool is_prime(const Int& p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (Int d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

/// x^e for small non-negative exponents, by repeated squaring.
template <class T>
T pow_t(T base, long e) {
  T acc(1);
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

/// Inverse of a modulo m (gcd(a, m) = 1), via the extended Euclidean algorithm.
inline Int mod_inverse(Int a, const Int& m) {
  a %= m;
  if (a < 0) a += m;
  Int r0 = m, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    Int q = r0 / r1;
    Int r2 = r0 - q * r1;
    Int s2 = s0 - q * s1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
  }
  if (r0 != 1) throw ParameterError("mod_inverse: arguments are not coprime");
  s0 %= m;
  if (s0 < 0) s0 += m;
  return s0;
}

}  // namespace wittk
