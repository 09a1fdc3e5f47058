#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>

// Exact 64-bit integer arithmetic. Overflow is a hard error, never a
// silent wrap.

namespace fanoq {

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in addition");
  return r;
}

inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in subtraction");
  return r;
}

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer overflow in multiplication");
  return r;
}

// |a| as unsigned; well-defined for INT64_MIN.
inline std::uint64_t unsigned_abs(std::int64_t a) {
  return a < 0 ? ~static_cast<std::uint64_t>(a) + 1 : static_cast<std::uint64_t>(a);
}

inline std::int64_t checked_abs(std::int64_t a) {
  if (a == INT64_MIN) throw std::overflow_error("integer overflow in abs");
  return a < 0 ? -a : a;
}

// gcd of |a| and |b|.
inline std::int64_t gcd_abs(std::int64_t a, std::int64_t b) {
  std::uint64_t g = std::gcd(unsigned_abs(a), unsigned_abs(b));
  if (g > static_cast<std::uint64_t>(INT64_MAX))
    throw std::overflow_error("gcd does not fit a signed 64-bit integer");
  return static_cast<std::int64_t>(g);
}

}  // namespace fanoq
