#pragma once

// Exact integer helpers. Every group element lives in an integral lattice
// basis, so the core never needs floating point; overflow is trapped.

#include <cstdint>
#include <numeric>
#include <span>
#include <string>

#include "coxshadow/error.hpp"

namespace coxshadow {

using Int = std::int64_t;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::ArithmeticOverflow, "addition");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::ArithmeticOverflow, "multiplication");
  return r;
}

inline Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc = checked_add(acc, checked_mul(a[i], b[i]));
  return acc;
}

inline int sign(Int v) { return (v > 0) - (v < 0); }

/// floor(a / b) for b > 0.
inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && (a < 0)) --q;
  return q;
}

/// Normalised fraction used at the I/O boundary ("p/q" strings).
struct Rational {
  Int num = 0;
  Int den = 1;

  static Rational make(Int n, Int d) {
    if (d == 0) throw Error(Errc::Parse, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    Int g = std::gcd(n < 0 ? -n : n, d);
    if (g == 0) g = 1;
    return {n / g, d / g};
  }

  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

  static Rational parse(const std::string& text) {
    try {
      auto slash = text.find('/');
      if (slash == std::string::npos) return make(std::stoll(text), 1);
      return make(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::logic_error&) {
      throw Error(Errc::Parse, "bad rational '" + text + "'");
    }
  }

  friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace coxshadow
