#pragma once

#include <cstdint>

#include "dcpell/dual_complex.hpp"
#include "dcpell/quadrat.hpp"
#include "dcpell/sequences.hpp"

namespace dcpell {

enum class Family { Pell, PellLucas };

const char* family_name(Family f);

// Dual-complex Pell quaternion: four consecutive sequence values on the
// basis {1, i, eps, i*eps}. "Quaternion" in the four-component sense; the
// algebra is the commutative one from dual_complex.hpp.
//
//   Pell family:       (P(n), P(n+1), P(n+2), P(n+3))
//   Pell-Lucas family: (Q(n), Q(n+1), Q(n+2), Q(n+3))
struct DCPellQuat {
  DualComplex<BigInt> value;
  std::int64_t index = 0;
  Family family = Family::Pell;
};

DCPellQuat qp(std::int64_t n);   // Pell quaternion at n (any sign)
DCPellQuat qpl(std::int64_t n);  // Pell-Lucas quaternion at n

BigInt scalar_part(const DCPellQuat& q);
DualComplex<BigInt> vector_part(const DCPellQuat& q);

// Binet route: evaluates (ahat alpha^n - bhat beta^n) / (alpha - beta) in
// DualComplex<QuadRat> with alpha = 1+sqrt2, beta = 1-sqrt2,
// ahat = 1 + i alpha + eps alpha^2 + i eps alpha^3 (bhat likewise), then
// extracts the integer components. Never consults the recurrence, so it is an
// independent route from qp(). A non-integer component would be an internal
// bug and throws std::logic_error.
DCPellQuat binet_qp(std::int64_t n);

// Literal accumulated sums; these are the audit's left-hand sides, never the
// closed forms.
DualComplex<BigInt> sum_qp_first(std::int64_t n);                   // s = 1..n,  n >= 1
DualComplex<BigInt> sum_qp_window(std::int64_t n, std::int64_t p);  // s = n..n+p, p >= 0
DualComplex<BigInt> sum_qp_odd(std::int64_t n);                     // qp(1), qp(3), ..., qp(2n-1)
DualComplex<BigInt> sum_qp_even(std::int64_t n);                    // qp(2), qp(4), ..., qp(2n)

}  // namespace dcpell
