#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "dcpell/rings.hpp"

namespace dcpell {

// Element a + b*sqrt(2) of the real quadratic field Q(sqrt 2), with exact
// rational components. The canonical (a, b) pair is unique per value, so
// equality is componentwise. Used for the exact Binet evaluation, where the
// characteristic roots are 1 + sqrt(2) and 1 - sqrt(2).
struct QuadRat {
  BigRational a{};  // rational part
  BigRational b{};  // coefficient of sqrt(2)

  QuadRat() = default;
  QuadRat(BigRational a_, BigRational b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit QuadRat(BigRational a_) : a(std::move(a_)) {}
  explicit QuadRat(long v) : a(v) {}

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  static QuadRat sqrt2() { return {BigRational(0), BigRational(1)}; }
  static QuadRat alpha() { return {BigRational(1), BigRational(1)}; }   // 1 + sqrt2
  static QuadRat beta() { return {BigRational(1), BigRational(-1)}; }   // 1 - sqrt2

  friend QuadRat operator+(const QuadRat& x, const QuadRat& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend QuadRat operator-(const QuadRat& x, const QuadRat& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend QuadRat operator-(const QuadRat& x) { return {-x.a, -x.b}; }
  friend QuadRat operator*(const QuadRat& x, const QuadRat& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend bool operator==(const QuadRat& x, const QuadRat& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const QuadRat& x, const QuadRat& y) { return !(x == y); }
};

// (a - b*sqrt2) / (a^2 - 2 b^2). The denominator vanishes only at zero since
// sqrt2 is irrational.
inline QuadRat quad_inv(const QuadRat& x) {
  if (x.is_zero()) throw std::domain_error("quad_inv: division by zero");
  BigRational d = x.a * x.a - 2 * x.b * x.b;
  return {x.a / d, -x.b / d};
}

inline QuadRat operator/(const QuadRat& x, const QuadRat& y) {
  return x * quad_inv(y);
}

// sqrt2 -> -sqrt2; maps alpha to beta.
inline QuadRat quad_conj(const QuadRat& x) { return {x.a, -x.b}; }

// Exact n-th power, negative n via the inverse.
inline QuadRat quad_pow(QuadRat x, std::int64_t n) {
  if (n < 0) {
    x = quad_inv(x);  // throws on zero base
    n = -n;
  }
  QuadRat r{BigRational(1), BigRational(0)};
  std::uint64_t e = static_cast<std::uint64_t>(n);
  while (e != 0) {
    if (e & 1) r = r * x;
    e >>= 1;
    if (e != 0) x = x * x;
  }
  return r;
}

inline std::string coeff_str(const QuadRat& x) {
  return coeff_str(x.a) + " + " + coeff_str(x.b) + "*sqrt2";
}

template <>
inline constexpr bool is_field_v<QuadRat> = true;

}  // namespace dcpell
