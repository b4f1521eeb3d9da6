#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace excoll {

using Coeff = std::int64_t;

// Overflow-checked integer arithmetic. Every lattice and intersection
// computation goes through these; wraparound throws std::overflow_error.
namespace checked {

[[noreturn]] void overflow(const char* what);

inline Coeff add(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_add_overflow(x, y, &r)) overflow("addition");
  return r;
}

inline Coeff sub(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_sub_overflow(x, y, &r)) overflow("subtraction");
  return r;
}

inline Coeff mul(Coeff x, Coeff y) {
  Coeff r;
  if (__builtin_mul_overflow(x, y, &r)) overflow("multiplication");
  return r;
}

inline Coeff neg(Coeff x) { return sub(0, x); }

}  // namespace checked

/// A class aH + bE in the rank-2 Picard lattice Z[H] + Z[E].
struct DivisorClass {
  Coeff a = 0;  // coefficient of H
  Coeff b = 0;  // coefficient of E

  [[nodiscard]] bool is_zero() const { return a == 0 && b == 0; }

  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

inline constexpr DivisorClass kH{1, 0};
inline constexpr DivisorClass kE{0, 1};

inline DivisorClass operator+(DivisorClass x, DivisorClass y) {
  return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
}
inline DivisorClass operator-(DivisorClass x, DivisorClass y) {
  return {checked::sub(x.a, y.a), checked::sub(x.b, y.b)};
}
inline DivisorClass operator-(DivisorClass x) {
  return {checked::neg(x.a), checked::neg(x.b)};
}
inline DivisorClass operator*(Coeff k, DivisorClass x) {
  return {checked::mul(k, x.a), checked::mul(k, x.b)};
}

/// "a,b" — the command-line and CSV form.
std::string format_pair(DivisorClass d);

/// Human form such as "2H-E", "-3H+2E", "0".
std::string format_divisor(DivisorClass d);

/// Parses "a,b" (whitespace tolerated). Throws std::invalid_argument.
DivisorClass parse_divisor(std::string_view text);

}  // namespace excoll
