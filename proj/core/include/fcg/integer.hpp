#pragma once

#include <cstdint>
#include <vector>

#include "fcg/errors.hpp"

namespace fcg {

// All lattice arithmetic runs on int64 with every operation overflow-checked.
using Int = std::int64_t;
using Vector = std::vector<Int>;

namespace checked {

inline Int add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline Int sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline Int mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

inline Int neg(Int a) { return sub(0, a); }

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow();
  return r;
}

/// Floor division; b must be nonzero.
inline Int floor_div(Int a, Int b) {
  if (b == -1) return neg(a);
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int floor_mod(Int a, Int b) { return sub(a, mul(floor_div(a, b), b)); }

}  // namespace checked

Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Vector& a, Int s);
/// a += s * b
void axpy(Vector& a, Int s, const Vector& b);
bool is_zero(const Vector& v);

}  // namespace fcg
