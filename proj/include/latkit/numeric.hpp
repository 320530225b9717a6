#pragma once

// Exact scalar types and integer helpers shared by every module.
// All lattice arithmetic runs on these; no floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace latkit {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline int sign(const Int& a) { return a.sign(); }
inline int sign(const Rat& a) { return a.sign(); }

template <typename T>
T abs_val(const T& a) {
  return a < 0 ? T(-a) : a;
}

// floor(a/b), b != 0.  Int division truncates toward zero, so fix up
// the sign-mismatch case by hand.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b) != 0 && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int ceil_div(const Int& a, const Int& b) { return -floor_div(-a, b); }

// floor(sqrt(n)), n >= 0.
inline Int isqrt(const Int& n) {
  if (n < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(n);
}

// floor(sqrt(r)) for rational r >= 0, exact: sqrt(p/q) = sqrt(p*q)/q.
inline Int floor_sqrt(const Rat& r) {
  if (r < 0) throw std::domain_error("floor_sqrt of negative value");
  return floor_div(isqrt(num(r) * den(r)), den(r));
}

inline Int gcd(Int a, Int b) { return boost::multiprecision::gcd(a, b); }

inline std::string to_string(const Int& a) { return a.str(); }

// Checked narrowing for serialization paths that emit 64-bit JSON numbers.
inline std::int64_t to_int64(const Int& a) {
  if (a < std::numeric_limits<std::int64_t>::min() ||
      a > std::numeric_limits<std::int64_t>::max())
    throw std::overflow_error("value exceeds 64-bit range: " + a.str());
  return a.convert_to<std::int64_t>();
}

}  // namespace latkit
