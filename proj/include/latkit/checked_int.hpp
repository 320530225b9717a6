#pragma once

// 64-bit integer that refuses to overflow: every arithmetic op is checked and
// raises OverflowSignal instead of wrapping.  Lets the matrix templates run
// at machine speed on provably-small data while keeping a watertight fallback
// path to arbitrary precision.

#include <cstdint>
#include <stdexcept>

#include "latkit/numeric.hpp"

namespace latkit {

struct OverflowSignal : std::runtime_error {
  OverflowSignal() : std::runtime_error("int64 overflow; retry with arbitrary precision") {}
};

class CheckedI64 {
 public:
  CheckedI64() : v_(0) {}
  CheckedI64(std::int64_t v) : v_(v) {}  // NOLINT: implicit by design, mirrors plain ints

  std::int64_t raw() const { return v_; }

  CheckedI64 operator-() const {
    if (v_ == INT64_MIN) throw OverflowSignal{};
    return CheckedI64(-v_);
  }
  CheckedI64& operator+=(const CheckedI64& o) {
    if (__builtin_add_overflow(v_, o.v_, &v_)) throw OverflowSignal{};
    return *this;
  }
  CheckedI64& operator-=(const CheckedI64& o) {
    if (__builtin_sub_overflow(v_, o.v_, &v_)) throw OverflowSignal{};
    return *this;
  }
  CheckedI64& operator*=(const CheckedI64& o) {
    if (__builtin_mul_overflow(v_, o.v_, &v_)) throw OverflowSignal{};
    return *this;
  }
  friend CheckedI64 operator+(CheckedI64 a, const CheckedI64& b) { return a += b; }
  friend CheckedI64 operator-(CheckedI64 a, const CheckedI64& b) { return a -= b; }
  friend CheckedI64 operator*(CheckedI64 a, const CheckedI64& b) { return a *= b; }
  friend CheckedI64 operator/(const CheckedI64& a, const CheckedI64& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowSignal{};
    return CheckedI64(a.v_ / b.v_);
  }
  friend CheckedI64 operator%(const CheckedI64& a, const CheckedI64& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw OverflowSignal{};
    return CheckedI64(a.v_ % b.v_);
  }
  friend bool operator==(const CheckedI64& a, const CheckedI64& b) { return a.v_ == b.v_; }
  friend bool operator!=(const CheckedI64& a, const CheckedI64& b) { return a.v_ != b.v_; }
  friend bool operator<(const CheckedI64& a, const CheckedI64& b) { return a.v_ < b.v_; }
  friend bool operator>(const CheckedI64& a, const CheckedI64& b) { return a.v_ > b.v_; }
  friend bool operator<=(const CheckedI64& a, const CheckedI64& b) { return a.v_ <= b.v_; }
  friend bool operator>=(const CheckedI64& a, const CheckedI64& b) { return a.v_ >= b.v_; }

 private:
  std::int64_t v_;
};

inline CheckedI64 floor_div(const CheckedI64& a, const CheckedI64& b) {
  CheckedI64 q = a / b;  // checked: rejects 0 divisor and INT64_MIN / -1
  if (a % b != CheckedI64(0) && (a < CheckedI64(0)) != (b < CheckedI64(0))) q -= CheckedI64(1);
  return q;
}

}  // namespace latkit
