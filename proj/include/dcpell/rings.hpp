#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace dcpell {

// Exact scalars. Every coefficient in this library is an arbitrary-precision
// integer or rational; there is no floating point anywhere.
using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using BigRational =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// Rings with exact division. BigInt deliberately does not qualify: its
// operator/ truncates.
template <typename R>
inline constexpr bool is_field_v = false;
template <>
inline constexpr bool is_field_v<BigRational> = true;

inline BigInt numerator_of(const BigRational& x) {
  return BigInt(boost::multiprecision::numerator(x));
}
inline BigInt denominator_of(const BigRational& x) {
  return BigInt(boost::multiprecision::denominator(x));
}
inline bool is_integer(const BigRational& x) { return denominator_of(x) == 1; }

// Decimal rendering; rationals as "p/q", integers (denominator 1) as plain "p".
inline std::string coeff_str(const BigInt& x) { return x.str(); }
inline std::string coeff_str(const BigRational& x) {
  BigInt den = denominator_of(x);
  std::string s = numerator_of(x).str();
  if (den != 1) s += "/" + den.str();
  return s;
}

}  // namespace dcpell
